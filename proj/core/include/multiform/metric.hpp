#pragma once

#include <memory>
#include <vector>

#include "multiform/extensor.hpp"

namespace multiform {

struct EigenSystem {
  std::vector<double> values;               // sorted positive-first, then |.| desc
  std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i]
};

// Cyclic Jacobi eigensolve of a symmetric matrix (row-major n x n).
EigenSystem symmetric_eigen(int n, const std::vector<double>& m);

// A symmetric nondegenerate (1,1)-extensor plus the machinery every metric
// product needs: inverse, determinant, signature, and the extension blocks.
class MetricExtensor {
 public:
  explicit MetricExtensor(const Extensor& g, double sym_tol = 1e-12,
                          double det_tol = 1e-12);
  static MetricExtensor from_matrix(int dim, const std::vector<double>& m);
  static MetricExtensor canonical(int dim);  // identity
  static MetricExtensor eta(int dim);        // diag(1,-1,...,-1)

  int dim() const { return base_.dim(); }
  const Extensor& base() const { return base_; }
  const Extensor& inverse() const { return inv_; }
  double det() const { return det_; }
  int sign() const { return det_ > 0 ? 1 : -1; }
  std::pair<int, int> signature() const { return signature_; }

  Multiform apply(const Multiform& a) const { return base_(a); }      // 1-forms
  Multiform apply_inv(const Multiform& a) const { return inv_(a); }

  Multiform extended(const Multiform& x) const { return ext_(x); }
  Multiform extended_inv(const Multiform& x) const { return ext_inv_(x); }
  const Extensor& extension_op() const { return ext_; }

 private:
  Extensor base_, inv_, ext_, ext_inv_;
  double det_;
  std::pair<int, int> signature_;
};

// Metric products (Eqs. over the extension of g).
double metric_dot(const MetricExtensor& g, const Multiform& x, const Multiform& y);
Multiform metric_lcontract(const MetricExtensor& g, const Multiform& x, const Multiform& y);
Multiform metric_rcontract(const MetricExtensor& g, const Multiform& x, const Multiform& y);
Multiform metric_clifford(const MetricExtensor& g, const Multiform& x, const Multiform& y);
Multiform metric_product(Product p, const MetricExtensor& g, const Multiform& x,
                         const Multiform& y);
// 1/2 (X o Y - Y o X) in the g-Clifford algebra
Multiform metric_commutator(const MetricExtensor& g, const Multiform& x, const Multiform& y);

// Inverse-metric variants (products of the g^-1 algebra act on form indices).
double inv_metric_dot(const MetricExtensor& g, const Multiform& x, const Multiform& y);
Multiform inv_metric_lcontract(const MetricExtensor& g, const Multiform& x, const Multiform& y);

// An invertible factor h with g = h~+ eta h, plus its derived extensors.
class Distortion {
 public:
  explicit Distortion(const Extensor& h, double det_tol = 1e-12);

  int dim() const { return h_.dim(); }
  const Extensor& h() const { return h_; }
  const Extensor& adjoint() const { return hadj_; }
  const Extensor& inverse() const { return hinv_; }
  const Extensor& clubsuit() const { return hclub_; }  // (h~+)^-1
  double det() const { return det_; }

  MetricExtensor induced_metric() const;  // h~+ eta h

 private:
  Extensor h_, hadj_, hinv_, hclub_;
  double det_;
};

// Theorem-2.1 factorization of a Lorentz-signature metric: h from the
// eigendecomposition, deterministic ordering and orientation.
Distortion factorize_metric(const MetricExtensor& g);

// h' = L o h for an eta-orthogonal L (L~+ eta L = eta within tol).
Distortion gauge_transform(const Distortion& d, const Extensor& L, double tol = 1e-10);

// An eta-orthogonal boost-like transform for fuzz tests, built from the
// exponential of an antisymmetric eta-pair generator.
Extensor random_eta_orthogonal(int dim, std::uint64_t seed);

}  // namespace multiform
