#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multiform/errors.hpp"

namespace multiform {

using Blade = std::uint32_t;  // bit i set <=> factor eps^{i+1} present

constexpr int kMaxDim = 12;

// The canonical (Euclidean) algebra over an n-dimensional dual space.  The
// fiducial basis eps^1..eps^n is declared orthonormal, which makes it
// self-reciprocal; every product below is expressed in that basis.
class AlgebraContext {
 public:
  explicit AlgebraContext(int dim);
  int dim() const { return dim_; }
  std::size_t size() const { return std::size_t{1} << dim_; }
  std::string blade_label(Blade b) const;  // "1", "e1", "e13", ...
  Blade blade_from_label(const std::string& label) const;

 private:
  int dim_;
};

// Sign of the canonical reordering that merges two ascending factor lists.
// Shared vectors square to +1 (Euclidean fiducial basis).
int reorder_sign(Blade a, Blade b);

inline int grade_of(Blade b) { return std::popcount(b); }

class Multiform {
 public:
  Multiform() : dim_(0) {}
  explicit Multiform(int dim) : dim_(check_dim(dim)), c_(std::size_t{1} << dim, 0.0) {}

  static Multiform scalar(int dim, double value);
  static Multiform blade(int dim, Blade b, double value = 1.0);
  // eps^{i} for i in 1..n
  static Multiform basis1(int dim, int i);
  // pseudoscalar eps^1 ^ ... ^ eps^n
  static Multiform pseudoscalar(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return c_.size(); }
  double operator[](Blade b) const { return c_[b]; }
  double& operator[](Blade b) { return c_[b]; }
  const std::vector<double>& coeffs() const { return c_; }

  Multiform& operator+=(const Multiform& o);
  Multiform& operator-=(const Multiform& o);
  Multiform& operator*=(double s);

  bool is_zero(double tol = 0.0) const;

 private:
  static int check_dim(int dim);
  int dim_;
  std::vector<double> c_;
};

Multiform operator+(Multiform a, const Multiform& b);
Multiform operator-(Multiform a, const Multiform& b);
Multiform operator*(Multiform a, double s);
Multiform operator*(double s, Multiform a);
Multiform operator-(Multiform a);

// Grade machinery.
Multiform k_part(const Multiform& x, int k);
Multiform hat(const Multiform& x);    // <X>_k -> (-1)^k <X>_k
Multiform tilde(const Multiform& x);  // <X>_k -> (-1)^{k(k-1)/2} <X>_k

// Products of the canonical algebra.
Multiform wedge(const Multiform& x, const Multiform& y);
double dot(const Multiform& x, const Multiform& y);
Multiform lcontract(const Multiform& x, const Multiform& y);
Multiform rcontract(const Multiform& x, const Multiform& y);
Multiform clifford(const Multiform& x, const Multiform& y);
// 1/2 (XY - YX)
Multiform commutator(const Multiform& x, const Multiform& y);

enum class Product { Wedge, Dot, LContract, RContract, Clifford };

// Applies the selected product; Dot yields a scalar multiform.
Multiform apply_product(Product p, const Multiform& x, const Multiform& y);

double norm(const Multiform& x);     // sqrt(X . X)
double max_abs(const Multiform& x);  // coefficientwise infinity norm

// A part of the algebra: the set of grades it spans.
class GradeSet {
 public:
  GradeSet(std::initializer_list<int> grades, int dim);
  static GradeSet single(int k, int dim);
  static GradeSet all(int dim);
  static GradeSet range(int lo, int hi, int dim);
  static GradeSet of(const std::vector<int>& grades, int dim);

  bool contains(int k) const { return (mask_ >> k) & 1u; }
  int dim() const { return dim_; }
  // Blades of the member grades, ascending by mask.
  std::vector<Blade> blades() const;
  bool operator==(const GradeSet& o) const { return mask_ == o.mask_ && dim_ == o.dim_; }

 private:
  GradeSet(std::uint32_t mask, int dim) : mask_(mask), dim_(dim) {}
  std::uint32_t mask_;
  int dim_;
};

Multiform grade_project(const Multiform& x, const GradeSet& g);

// A pair of reciprocal 1-form bases (u^j, u_j) with u^j . u_k = delta^j_k.
// Rows of `up`/`down` hold fiducial components of u^j / u_j.
class ReciprocalPair {
 public:
  ReciprocalPair(std::vector<std::vector<double>> up,
                 std::vector<std::vector<double>> down, double tol = 1e-12);
  // Builds the reciprocal of an invertible basis.
  static ReciprocalPair from_basis(const std::vector<std::vector<double>>& up);

  int dim() const { return static_cast<int>(up_.size()); }
  Multiform up_form(int j) const;    // u^{j+1}
  Multiform down_form(int j) const;  // u_{j+1}
  Multiform up_blade(Blade b) const;
  Multiform down_blade(Blade b) const;
  double gram_condition() const;

 private:
  std::vector<std::vector<double>> up_, down_;
};

// Coefficients (per increasing-index blade of the pair) rebuilding X as
// sum_J c_J u_J.  Throws InvalidPairError if the pair fails reciprocity.
std::map<Blade, double> expand(const Multiform& x, const ReciprocalPair& pair);
Multiform rebuild(int dim, const std::map<Blade, double>& coeffs,
                  const ReciprocalPair& pair);

}  // namespace multiform
