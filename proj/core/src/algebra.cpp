#include "multiform/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace multiform {

AlgebraContext::AlgebraContext(int dim) : dim_(dim) {
  if (dim < 2 || dim > kMaxDim)
    throw DimensionError("algebra dimension must be in [2, 12], got " + std::to_string(dim));
}

std::string AlgebraContext::blade_label(Blade b) const {
  if (b == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < dim_; ++i)
    if ((b >> i) & 1u) {
      if (i + 1 >= 10) s += "_";  // disambiguate two-digit factors
      s += std::to_string(i + 1);
    }
  return s;
}

Blade AlgebraContext::blade_from_label(const std::string& label) const {
  if (label == "1") return 0;
  if (label.empty() || label[0] != 'e')
    throw ConfigError("bad blade label: " + label);
  Blade b = 0;
  std::size_t i = 1;
  while (i < label.size()) {
    int idx = 0;
    if (label[i] == '_') {
      ++i;
      while (i < label.size() && isdigit(label[i])) idx = idx * 10 + (label[i++] - '0');
    } else {
      idx = label[i++] - '0';
    }
    if (idx < 1 || idx > dim_) throw ConfigError("bad blade label: " + label);
    Blade bit = Blade{1} << (idx - 1);
    if (b & bit) throw ConfigError("repeated factor in blade label: " + label);
    b |= bit;
  }
  return b;
}

int reorder_sign(Blade a, Blade b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

int Multiform::check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim)
    throw DimensionError("multiform dimension must be in [2, 12], got " + std::to_string(dim));
  return dim;
}

Multiform Multiform::scalar(int dim, double value) {
  Multiform m(dim);
  m.c_[0] = value;
  return m;
}

Multiform Multiform::blade(int dim, Blade b, double value) {
  Multiform m(dim);
  if (b >= m.size()) throw RangeError("blade mask out of range");
  m.c_[b] = value;
  return m;
}

Multiform Multiform::basis1(int dim, int i) {
  if (i < 1 || i > dim) throw RangeError("basis index out of range");
  return blade(dim, Blade{1} << (i - 1));
}

Multiform Multiform::pseudoscalar(int dim) {
  Multiform m(dim);
  m.c_[m.size() - 1] = 1.0;
  return m;
}

Multiform& Multiform::operator+=(const Multiform& o) {
  if (dim_ != o.dim_) throw DimensionError("multiform dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Multiform& Multiform::operator-=(const Multiform& o) {
  if (dim_ != o.dim_) throw DimensionError("multiform dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Multiform& Multiform::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

bool Multiform::is_zero(double tol) const {
  for (double v : c_)
    if (std::abs(v) > tol) return false;
  return true;
}

Multiform operator+(Multiform a, const Multiform& b) { return a += b; }
Multiform operator-(Multiform a, const Multiform& b) { return a -= b; }
Multiform operator*(Multiform a, double s) { return a *= s; }
Multiform operator*(double s, Multiform a) { return a *= s; }
Multiform operator-(Multiform a) { return a *= -1.0; }

Multiform k_part(const Multiform& x, int k) {
  if (k < 0 || k > x.dim()) throw RangeError("grade out of range");
  Multiform r(x.dim());
  for (Blade b = 0; b < x.size(); ++b)
    if (grade_of(b) == k) r[b] = x[b];
  return r;
}

Multiform hat(const Multiform& x) {
  Multiform r(x.dim());
  for (Blade b = 0; b < x.size(); ++b)
    r[b] = (grade_of(b) & 1) ? -x[b] : x[b];
  return r;
}

Multiform tilde(const Multiform& x) {
  Multiform r(x.dim());
  for (Blade b = 0; b < x.size(); ++b) {
    int k = grade_of(b);
    r[b] = ((k * (k - 1) / 2) & 1) ? -x[b] : x[b];
  }
  return r;
}

namespace {

inline void check_same(const Multiform& x, const Multiform& y) {
  if (x.dim() != y.dim()) throw DimensionError("multiform dimension mismatch");
}

}  // namespace

Multiform wedge(const Multiform& x, const Multiform& y) {
  check_same(x, y);
  Multiform r(x.dim());
  for (Blade a = 0; a < x.size(); ++a) {
    double xa = x[a];
    if (xa == 0.0) continue;
    for (Blade b = 0; b < y.size(); ++b) {
      double yb = y[b];
      if (yb == 0.0 || (a & b)) continue;
      r[a | b] += reorder_sign(a, b) * xa * yb;
    }
  }
  return r;
}

double dot(const Multiform& x, const Multiform& y) {
  check_same(x, y);
  double s = 0.0;
  for (Blade b = 0; b < x.size(); ++b) s += x[b] * y[b];
  return s;
}

Multiform clifford(const Multiform& x, const Multiform& y) {
  check_same(x, y);
  Multiform r(x.dim());
  for (Blade a = 0; a < x.size(); ++a) {
    double xa = x[a];
    if (xa == 0.0) continue;
    for (Blade b = 0; b < y.size(); ++b) {
      double yb = y[b];
      if (yb == 0.0) continue;
      r[a ^ b] += reorder_sign(a, b) * xa * yb;
    }
  }
  return r;
}

Multiform lcontract(const Multiform& x, const Multiform& y) {
  check_same(x, y);
  Multiform r(x.dim());
  for (Blade a = 0; a < x.size(); ++a) {
    double xa = x[a];
    if (xa == 0.0) continue;
    for (Blade b = 0; b < y.size(); ++b) {
      double yb = y[b];
      // X_j . Y_k contributes only when the factors of a all divide b.
      if (yb == 0.0 || (a & ~b)) continue;
      r[a ^ b] += reorder_sign(a, b) * xa * yb;
    }
  }
  return r;
}

Multiform rcontract(const Multiform& x, const Multiform& y) {
  check_same(x, y);
  Multiform r(x.dim());
  for (Blade a = 0; a < x.size(); ++a) {
    double xa = x[a];
    if (xa == 0.0) continue;
    for (Blade b = 0; b < y.size(); ++b) {
      double yb = y[b];
      if (yb == 0.0 || (b & ~a)) continue;
      r[a ^ b] += reorder_sign(a, b) * xa * yb;
    }
  }
  return r;
}

Multiform commutator(const Multiform& x, const Multiform& y) {
  return 0.5 * (clifford(x, y) - clifford(y, x));
}

Multiform apply_product(Product p, const Multiform& x, const Multiform& y) {
  switch (p) {
    case Product::Wedge: return wedge(x, y);
    case Product::Dot: return Multiform::scalar(x.dim(), dot(x, y));
    case Product::LContract: return lcontract(x, y);
    case Product::RContract: return rcontract(x, y);
    case Product::Clifford: return clifford(x, y);
  }
  throw ConfigError("unknown product tag");
}

double norm(const Multiform& x) { return std::sqrt(dot(x, x)); }

double max_abs(const Multiform& x) {
  double m = 0.0;
  for (Blade b = 0; b < x.size(); ++b) m = std::max(m, std::abs(x[b]));
  return m;
}

GradeSet::GradeSet(std::initializer_list<int> grades, int dim) : mask_(0), dim_(dim) {
  for (int k : grades) {
    if (k < 0 || k > dim) throw GradeError("grade out of range");
    mask_ |= std::uint32_t{1} << k;
  }
  if (mask_ == 0) throw GradeError("empty grade set");
}

GradeSet GradeSet::single(int k, int dim) { return GradeSet({k}, dim); }

GradeSet GradeSet::all(int dim) {
  std::uint32_t mask = (std::uint32_t{1} << (dim + 1)) - 1;
  return GradeSet(mask, dim);
}

GradeSet GradeSet::range(int lo, int hi, int dim) {
  if (lo < 0 || hi > dim || lo > hi) throw GradeError("bad grade range");
  std::uint32_t mask = 0;
  for (int k = lo; k <= hi; ++k) mask |= std::uint32_t{1} << k;
  return GradeSet(mask, dim);
}

GradeSet GradeSet::of(const std::vector<int>& grades, int dim) {
  std::uint32_t mask = 0;
  for (int k : grades) {
    if (k < 0 || k > dim) throw GradeError("grade out of range");
    mask |= std::uint32_t{1} << k;
  }
  if (mask == 0) throw GradeError("empty grade set");
  return GradeSet(mask, dim);
}

std::vector<Blade> GradeSet::blades() const {
  std::vector<Blade> out;
  Blade total = Blade{1} << dim_;
  for (Blade b = 0; b < total; ++b)
    if (contains(grade_of(b))) out.push_back(b);
  return out;
}

Multiform grade_project(const Multiform& x, const GradeSet& g) {
  Multiform r(x.dim());
  for (Blade b = 0; b < x.size(); ++b)
    if (g.contains(grade_of(b))) r[b] = x[b];
  return r;
}

ReciprocalPair::ReciprocalPair(std::vector<std::vector<double>> up,
                               std::vector<std::vector<double>> down, double tol)
    : up_(std::move(up)), down_(std::move(down)) {
  std::size_t n = up_.size();
  if (n < 2 || n > kMaxDim || down_.size() != n)
    throw InvalidPairError("bad basis size");
  for (std::size_t j = 0; j < n; ++j) {
    if (up_[j].size() != n || down_[j].size() != n)
      throw InvalidPairError("bad basis vector size");
    for (std::size_t k = 0; k < n; ++k) {
      double g = 0.0;
      for (std::size_t m = 0; m < n; ++m) g += up_[j][m] * down_[k][m];
      double want = (j == k) ? 1.0 : 0.0;
      if (std::abs(g - want) > tol)
        throw InvalidPairError("bases are not reciprocal to tolerance");
    }
  }
}

ReciprocalPair ReciprocalPair::from_basis(const std::vector<std::vector<double>>& up) {
  // Invert the component matrix by Gauss-Jordan; reciprocal rows are the
  // columns of the inverse.
  std::size_t n = up.size();
  std::vector<std::vector<double>> a(up), inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) throw InvalidPairError("basis is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    double d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  std::vector<std::vector<double>> down(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m) down[j][m] = inv[m][j];
  return ReciprocalPair(up, down, 1e-9);
}

Multiform ReciprocalPair::up_form(int j) const {
  Multiform m(dim());
  for (int i = 0; i < dim(); ++i) m[Blade{1} << i] = up_[j][i];
  return m;
}

Multiform ReciprocalPair::down_form(int j) const {
  Multiform m(dim());
  for (int i = 0; i < dim(); ++i) m[Blade{1} << i] = down_[j][i];
  return m;
}

namespace {

Multiform wedge_blade_of(const ReciprocalPair& p, Blade b, bool up) {
  Multiform acc = Multiform::scalar(p.dim(), 1.0);
  for (int i = 0; i < p.dim(); ++i)
    if ((b >> i) & 1u) acc = wedge(acc, up ? p.up_form(i) : p.down_form(i));
  return acc;
}

}  // namespace

Multiform ReciprocalPair::up_blade(Blade b) const { return wedge_blade_of(*this, b, true); }
Multiform ReciprocalPair::down_blade(Blade b) const { return wedge_blade_of(*this, b, false); }

double ReciprocalPair::gram_condition() const {
  // Condition estimate of the up-basis Gram matrix via its extreme
  // eigenvalues (power iteration on G and on its inverse via the down rows).
  int n = dim();
  double max_row = 0.0, max_row_inv = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0, si = 0.0;
    for (int k = 0; k < n; ++k) {
      double g = 0.0, gi = 0.0;
      for (int m = 0; m < n; ++m) {
        g += up_[j][m] * up_[k][m];
        gi += down_[j][m] * down_[k][m];
      }
      s += std::abs(g);
      si += std::abs(gi);
    }
    max_row = std::max(max_row, s);
    max_row_inv = std::max(max_row_inv, si);
  }
  return max_row * max_row_inv;  // ||G||_inf * ||G^-1||_inf
}

std::map<Blade, double> expand(const Multiform& x, const ReciprocalPair& pair) {
  if (x.dim() != pair.dim()) throw DimensionError("pair dimension mismatch");
  std::map<Blade, double> out;
  for (Blade b = 0; b < x.size(); ++b) out[b] = dot(x, pair.up_blade(b));
  return out;
}

Multiform rebuild(int dim, const std::map<Blade, double>& coeffs,
                  const ReciprocalPair& pair) {
  Multiform r(dim);
  for (const auto& [b, c] : coeffs)
    if (c != 0.0) r += c * pair.down_blade(b);
  return r;
}

}  // namespace multiform
