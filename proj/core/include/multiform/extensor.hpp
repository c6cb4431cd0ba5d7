#pragma once

#include <map>
#include <utility>
#include <vector>

#include "multiform/algebra.hpp"

namespace multiform {

// Blades of grade k in ascending mask order, plus the inverse lookup.
const std::vector<Blade>& grade_blades(int dim, int k);
std::size_t blade_index_in_grade(int dim, Blade b);

// A grade-typed linear map between parts of the algebra, stored densely per
// (domain grade, codomain grade) block in the fiducial blade basis.
class Extensor {
 public:
  Extensor(int dim, GradeSet domain, GradeSet codomain);

  static Extensor zero11(int dim);
  static Extensor identity11(int dim);
  static Extensor identity(int dim, const GradeSet& grades);
  // Row-major n x n matrix: row q holds the components of t(eps^{q+1})?  No:
  // entry (i, j) = t(eps^{j+1}) . eps^{i+1}, i.e. columns are images.
  static Extensor from_matrix11(int dim, const std::vector<double>& m);

  int dim() const { return dim_; }
  const GradeSet& domain() const { return domain_; }
  const GradeSet& codomain() const { return codomain_; }

  bool is_pq(int p, int q) const;

  // Blockwise dense access; creates the block when absent.
  double& at(int p, std::size_t col, int q, std::size_t row);
  double get(int p, std::size_t col, int q, std::size_t row) const;

  Multiform operator()(const Multiform& x) const;

  Extensor adjoint() const;
  Extensor compose(const Extensor& u) const;  // (*this) after u
  Extensor transformed(double s) const;       // s * t

  Extensor& operator+=(const Extensor& o);
  Extensor& operator-=(const Extensor& o);

  std::vector<double> matrix11() const;  // dense n x n for a (1,1) extensor
  double frobenius() const;
  double max_entry() const;

 private:
  friend Extensor sub(const Extensor& a, const Extensor& b);
  int dim_;
  GradeSet domain_, codomain_;
  // key (p, q); value row-major with rows = |grade q blades|
  std::map<std::pair<int, int>, std::vector<double>> blocks_;
};

Extensor operator+(Extensor a, const Extensor& b);
Extensor operator-(Extensor a, const Extensor& b);
Extensor operator*(double s, const Extensor& t);

// (1,1)-extensor toolkit.
Extensor sym_part(const Extensor& t);
Extensor antisym_part(const Extensor& t);
double trace(const Extensor& t);
Multiform biform(const Extensor& t);
double determinant(const Extensor& t);

// Grade-preserving exterior-power lift of a (1,1)-extensor; optional grade
// list restricts which blocks are built.
Extensor extension(const Extensor& t);
Extensor extension(const Extensor& t, const std::vector<int>& grades);

// The derivation-like lift T(X) = t(eps^j) ^ (eps_j _| X).
Extensor generalization(const Extensor& t);

// Inverse of a nondegenerate (1,1)-extensor via t^-1(a) = det^-1 t~+(a tau) tau^-1.
Extensor inverse11(const Extensor& t, double tol = 1e-12);

bool is_normal(const Extensor& t, double tol = 1e-10);

// The pseudo-Euclidean extensor eta(a) = b0 a b0 as a (1,1)-extensor.
Extensor eta_extensor(int dim);

// Uniform [-1,1] random (1,1)-extensor; the shared generator for fuzz suites.
Extensor random_extensor11(int dim, std::uint64_t seed);
Multiform random_multiform(int dim, std::uint64_t seed);
Multiform random_kform(int dim, int k, std::uint64_t seed);

}  // namespace multiform
