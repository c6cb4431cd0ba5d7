#pragma once

#include "multiform/fields.hpp"

namespace multiform {

// First and second Christoffel operators with field arguments (the brackets
// and directional derivatives of the argument fields enter).
double christoffel_first(const MetricField& g, const OneFormField& a,
                         const OneFormField& b, const OneFormField& c,
                         const PositionForm& x, const FDConfig& fd = {});
double christoffel_second(const MetricField& g, const OneFormField& a,
                          const OneFormField& b, const OneFormField& c,
                          const PositionForm& x, const FDConfig& fd = {});
// Constant-argument first Christoffel: [a,b,c] for point values.
double christoffel_first_const(const MetricField& g, const Multiform& a,
                               const Multiform& b, const Multiform& c,
                               const PositionForm& x, const FDConfig& fd = {});

// Torsion of the connection: tau(a,b) = gamma_a(b) - gamma_b(a) (pointwise).
Multiform torsion(const ConnectionField& conn, const Multiform& a, const Multiform& b,
                  const PositionForm& x);
// T(B) = 1/2 B . (d_a ^ d_b) tau(a,b)
Multiform torsion_extensor(const ConnectionField& conn, const Multiform& B,
                           const PositionForm& x);

// Components of (nabla_a^- g)(b) . c for point-value arguments.
double nonmetricity(const ConnectionField& conn, const MetricField& g, const Multiform& a,
                    const Multiform& b, const Multiform& c, const PositionForm& x,
                    const FDConfig& fd = {});

// rho(a,b,c) = [nabla_a, nabla_b] c - nabla_[a,b] c with field arguments.
Multiform curvature_operator(const ConnectionField& conn, const OneFormField& a,
                             const OneFormField& b, const OneFormField& c,
                             const PositionForm& x, const FDConfig& fd = {});

// R3(a,b,c,w) = -rho(a,b,c) . g(w) and R1(w,a,b,c) = w . rho(b,c,a).
double riemann4(const ConnectionField& conn, const MetricField& g, const OneFormField& a,
                const OneFormField& b, const OneFormField& c, const OneFormField& w,
                const PositionForm& x, const FDConfig& fd = {});
double curvature4(const ConnectionField& conn, const OneFormField& w, const OneFormField& a,
                  const OneFormField& b, const OneFormField& c, const PositionForm& x,
                  const FDConfig& fd = {});

// The (2,2)-extensor with R3(a,b,c,w) = R2(a^b) . (c^w), sampled on the
// 2-blade basis with constant fiducial arguments.
Extensor riemann22(const ConnectionField& conn, const MetricField& g,
                   const PositionForm& x, const FDConfig& fd = {});

// Ricci 1-form R1(b), scalar curvature, Einstein extensor; all take the
// precomputed Riemann (2,2)-extensor to share the sampling cost.
Multiform ricci_from_riemann(const Extensor& r2, const MetricExtensor& gx,
                             const Multiform& b);
Extensor ricci_extensor(const Extensor& r2, const MetricExtensor& gx);
double scalar_curvature(const Extensor& r2, const MetricExtensor& gx);
Extensor einstein_extensor(const Extensor& r2, const MetricExtensor& gx);

// omega(a) of the Levi-Civita structure: -1/2 g_ext^-1(d_b ^ d_c) A(a,b,c)
// with A(a,b,c) = 1/2 a.((b.dg)(c) - (c.dg)(b)).
Multiform gauge_rotation_small(const MetricField& g, const Multiform& a,
                               const PositionForm& x, const FDConfig& fd = {});

// Omega(a) of the deformed structure: -1/2 eta_ext(d_b ^ d_c)[a, h^-1(b), h^-1(c)]
// with the first Christoffel of g = h~+ eta h.
Multiform gauge_rotation_big(const ExtensorField& h, const Multiform& a,
                             const PositionForm& x, const FDConfig& fd = {});

// f_a(b) = (a.dh) h^-1(b) - 1/2 eta h-club (a.dg) h^-1(b)  (eta-antisymmetric).
Extensor coupling_field(const ExtensorField& h, const Multiform& a, const PositionForm& x,
                        const FDConfig& fd = {});

struct GaugeCurvature {
  Extensor r2;      // (2,2) Riemann gauge field
  Extensor ricci;   // (1,1) Ricci gauge field
  double scalar;    // gauge Ricci scalar
  Extensor einstein;
};

// Gauge curvature of the Levi-Civita deformation generated by h, via the
// structure formula in the Omega field.
GaugeCurvature gauge_curvature(const ExtensorField& h, const PositionForm& x,
                               const FDConfig& fd = {});

enum class LcDifferential { Grad, Div, Rot };

// Levi-Civita differential operators D, D_|, D^ of a multiform field.
Multiform lc_differential(const MetricField& g, const MultiformField& X,
                          const PositionForm& x, LcDifferential kind,
                          const FDConfig& fd = {});

}  // namespace multiform
