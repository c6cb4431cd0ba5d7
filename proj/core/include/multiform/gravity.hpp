#pragma once

#include <array>

#include "multiform/forms.hpp"
#include "multiform/geometry.hpp"

namespace multiform {

// The gravitational potentials g^a = h~+(theta^a) of a distortion field h on
// a 4-dimensional canonical space, plus their derived machinery.
class PotentialFrame {
 public:
  PotentialFrame(ExtensorField h, FDConfig fd = {});

  int dim() const { return h_.dim(); }
  const ExtensorField& h() const { return h_; }
  const MetricField& metric() const { return g_; }
  const FDConfig& fd() const { return fd_; }

  Multiform pot(int alpha, const PositionForm& x) const;      // g^alpha
  Multiform pot_low(int alpha, const PositionForm& x) const;  // g_alpha
  MultiformField pot_field(int alpha) const;
  MultiformField pot_low_field(int alpha) const;
  Multiform d_pot(int alpha, const PositionForm& x) const;      // d g^alpha
  Multiform d_pot_low(int alpha, const PositionForm& x) const;  // d g_alpha

  // max |g^a .g-1 g^b - eta^ab| at x
  double orthonormality_residual(const PositionForm& x) const;

 private:
  ExtensorField h_;
  MetricField g_;
  FDConfig fd_;
};

struct GravityConfig {
  double graviton_mass_sq = 0.0;
  double cosmological_const = 0.0;
  ExtensorField matter;  // optional algebraic T(a); empty = vacuum
};

using FormTable = std::array<Multiform, 4>;
template <typename T>
using Table2 = std::array<std::array<T, 4>, 4>;

// Connection 1-forms w^{gd} from the potentials (antisymmetric in g,d).
Table2<Multiform> connection_one_forms(const PotentialFrame& f, const PositionForm& x);
// w^a_b = w^{ac} eta_{cb}
Table2<Multiform> connection_one_forms_mixed(const PotentialFrame& f, const PositionForm& x);

// Cartan first structure residual Theta^a = d g^a + w^a_b ^ g^b.
FormTable cartan_first_residual(const PotentialFrame& f, const PositionForm& x);

// Curvature 2-forms R^a_b = d w^a_b + w^a_c ^ w^c_b (nested FD).
Table2<Multiform> curvature_two_forms(const PotentialFrame& f, const PositionForm& x);

// Cross-check table R_{ki} = R2(g_k ^ g_i) from the Riemann (2,2)-extensor.
Table2<Multiform> curvature_two_forms_riemann(const PotentialFrame& f,
                                              const PositionForm& x);

struct LagrangianParts {
  Multiform l_eh;        // 1/2 (g^k ^ g^i) ^ *R_{ki}
  Multiform l_g;         // first-order density
  Multiform l_g_alt;     // the packed alternative form
  Multiform exact_term;  // d(g^a ^ * d g_a)
};

LagrangianParts lagrangian_densities(const PotentialFrame& f, const PositionForm& x);

// Superpotentials *S^k and gravitational energy-momentum *t^k.
FormTable superpotential(const PotentialFrame& f, const PositionForm& x);
FormTable energy_momentum(const PotentialFrame& f, const GravityConfig& cfg,
                          const PositionForm& x);
// The omega-packed alternatives for both.
FormTable superpotential_packed(const PotentialFrame& f, const PositionForm& x);
FormTable energy_momentum_packed(const PotentialFrame& f, const GravityConfig& cfg,
                                 const PositionForm& x);

// Einstein 3-forms *G^a = *(R^a - 1/2 R g^a) via the Levi-Civita pipeline.
FormTable einstein_three_forms(const PotentialFrame& f, const PositionForm& x);

// Residual of d*S^a + *t^a + *G^a (zero by the conservation identity).
FormTable conservation_residual(const PotentialFrame& f, const GravityConfig& cfg,
                                const PositionForm& x);

struct MaxwellSplit {
  FormTable field_strength;  // F^k = d g^k
  FormTable dd_residual;     // d F^k
  FormTable source_residual; // delta F^k + (t^k + T^k + m^2 g^k)
};

MaxwellSplit maxwell_split(const PotentialFrame& f, const GravityConfig& cfg,
                           const PositionForm& x);

struct SphereQuadrature {
  double radius = 10.0;
  double t0 = 0.0;
  int order = 16;  // Gauss-Legendre nodes per angle
};

// P_k = surface integral of *_g d g_k over the coordinate sphere; `via_superpotential`
// integrates *S_k instead.
std::array<double, 4> energy_integral(const PotentialFrame& f, const SphereQuadrature& q,
                                      bool via_superpotential = false);

struct AngularMomentum {
  Table2<Multiform> orbital_matter;   // *L_m^{ab}
  Table2<Multiform> orbital_gravity;  // *L_g^{ab}
  Table2<Multiform> spin_gravity;     // *S_g^{ki}
  Table2<double> closure_am6;         // max|d *L_t^{ab}|
  Table2<double> closure_am14;        // max|d *(g^k ^ g^i) + 2 *S_g^{ki}|
};

AngularMomentum angular_momentum(const PotentialFrame& f, const GravityConfig& cfg,
                                 const PositionForm& x);

struct RicciViaDirac {
  FormTable dirac;      // (d - delta)^2 wedge part of g^k
  FormTable ricci;      // R^k_i g^i from the extensor pipeline
  double max_residual;
};

RicciViaDirac ricci_via_dirac(const PotentialFrame& f, const PositionForm& x);

}  // namespace multiform
