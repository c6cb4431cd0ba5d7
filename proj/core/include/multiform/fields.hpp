#pragma once

#include <functional>
#include <vector>

#include "multiform/calculus.hpp"
#include "multiform/metric.hpp"

namespace multiform {

// Coordinates xi^mu of a point; the position 1-form is x = xi^mu beta_mu.
struct PositionForm {
  std::vector<double> xi;
  int dim() const { return static_cast<int>(xi.size()); }
  Multiform as_form() const;
  static PositionForm of(std::initializer_list<double> c) { return {std::vector<double>(c)}; }
};

// x displaced by h along the 1-form a (fiducial components).
PositionForm displaced(const PositionForm& x, const Multiform& a, double h);

class MultiformField {
 public:
  MultiformField() = default;
  MultiformField(int dim, std::function<Multiform(const PositionForm&)> f)
      : dim_(dim), f_(std::move(f)) {}
  static MultiformField constant(const Multiform& v);
  int dim() const { return dim_; }
  Multiform operator()(const PositionForm& x) const { return f_(x); }
  explicit operator bool() const { return static_cast<bool>(f_); }

 private:
  int dim_ = 0;
  std::function<Multiform(const PositionForm&)> f_;
};

using OneFormField = MultiformField;

class ExtensorField {
 public:
  ExtensorField() = default;
  ExtensorField(int dim, std::function<Extensor(const PositionForm&)> f)
      : dim_(dim), f_(std::move(f)) {}
  static ExtensorField constant(const Extensor& t);
  int dim() const { return dim_; }
  Extensor operator()(const PositionForm& x) const { return f_(x); }
  explicit operator bool() const { return static_cast<bool>(f_); }

 private:
  int dim_ = 0;
  std::function<Extensor(const PositionForm&)> f_;
};

// Metric field as a row-major matrix function; `at` builds the full
// MetricExtensor (inverse, extension, signature) for the point.
class MetricField {
 public:
  MetricField() = default;
  MetricField(int dim, std::function<std::vector<double>(const PositionForm&)> m)
      : dim_(dim), m_(std::move(m)) {}
  static MetricField constant(int dim, std::vector<double> matrix);
  int dim() const { return dim_; }
  std::vector<double> matrix(const PositionForm& x) const { return m_(x); }
  Extensor base_at(const PositionForm& x) const;
  MetricExtensor at(const PositionForm& x) const;
  explicit operator bool() const { return static_cast<bool>(m_); }

 private:
  int dim_ = 0;
  std::function<std::vector<double>(const PositionForm&)> m_;
};

// Central/Richardson directional derivative a . d of fields at x.
Multiform field_dir_derivative(const MultiformField& f, const Multiform& a,
                               const PositionForm& x, const FDConfig& fd = {});
Extensor field_dir_derivative(const ExtensorField& f, const Multiform& a,
                              const PositionForm& x, const FDConfig& fd = {});
// (a . d g) as a (1,1)-extensor.
Extensor metric_dir_derivative(const MetricField& g, const Multiform& a,
                               const PositionForm& x, const FDConfig& fd = {});
// Derivative along the mu-th coordinate direction (0-based).
Multiform field_coord_derivative(const MultiformField& f, int mu, const PositionForm& x,
                                 const FDConfig& fd = {});

// [a,b] = a.db - b.da for 1-form fields.
Multiform lie_bracket(const OneFormField& a, const OneFormField& b, const PositionForm& x,
                      const FDConfig& fd = {});

// A pointwise frame of n 1-form fields with invertible Gram.
struct FrameSpec {
  enum class Kind { Coordinate, Orthonormal, Custom };
  Kind kind = Kind::Custom;
  std::vector<OneFormField> frame;

  int dim() const { return static_cast<int>(frame.size()); }
  // Components of the 1-form v in the frame at x (solves the linear system).
  std::vector<double> components(const Multiform& v, const PositionForm& x) const;
  // The dual coframe element theta^k at x.
  Multiform dual(int k, const PositionForm& x) const;
};

// A connection on U0: the bilinear field (a, b) -> gamma_a(b), with the
// derived per-point extensors.
class ConnectionField {
 public:
  using GammaFn =
      std::function<Multiform(const Multiform&, const Multiform&, const PositionForm&)>;

  ConnectionField(int dim, GammaFn gamma) : dim_(dim), gamma_(std::move(gamma)) {}

  static ConnectionField zero(int dim);
  // Levi-Civita connection of g: lambda(a,b) = d_c {c; a,b} - a.db.
  static ConnectionField levi_civita(const MetricField& g, const FDConfig& fd = {});
  // Connection declared by frame rules  nabla_{e_i} e_j = C^k_ij e_k
  // (zero coefficients = the frame-parallel/teleparallel rule).
  static ConnectionField from_frame(
      const FrameSpec& frame,
      std::function<double(int, int, int, const PositionForm&)> coeffs = nullptr,
      const FDConfig& fd = {});

  int dim() const { return dim_; }
  Multiform gamma(const Multiform& a, const Multiform& b, const PositionForm& x) const;
  Extensor gamma_extensor(const Multiform& a, const PositionForm& x) const;
  // rotation gauge field omega(a) = 1/2 bif[gamma_a]
  Multiform omega(const Multiform& a, const PositionForm& x) const;
  Extensor generalized(const Multiform& a, const PositionForm& x) const;

 private:
  int dim_;
  GammaFn gamma_;
};

enum class CovVariant { Plus, Minus };

// nabla_a X = a.dX + Gamma_a(X);  nabla_a^- X = a.dX - Gamma_a~+(X).
Multiform cov_deriv(const ConnectionField& conn, const MultiformField& X,
                    const Multiform& a, const PositionForm& x, CovVariant v,
                    const FDConfig& fd = {});

// (nabla_a t)(X) = nabla_a t(X) - t(nabla_a^- X), and the minus variant.
Extensor cov_deriv_extensor(const ConnectionField& conn, const ExtensorField& t,
                            const Multiform& a, const PositionForm& x, CovVariant v,
                            const FDConfig& fd = {});

}  // namespace multiform
