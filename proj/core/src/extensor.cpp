#include "multiform/extensor.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <random>

namespace multiform {

namespace {

struct BladeTables {
  std::vector<std::vector<Blade>> by_grade;   // [k] -> masks ascending
  std::vector<std::size_t> index_in_grade;    // [mask] -> position within its grade
};

const BladeTables& tables(int dim) {
  static std::array<BladeTables, kMaxDim + 1> cache;
  static std::array<std::once_flag, kMaxDim + 1> flags;
  std::call_once(flags[dim], [dim] {
    BladeTables t;
    t.by_grade.resize(dim + 1);
    t.index_in_grade.resize(std::size_t{1} << dim);
    for (Blade b = 0; b < (Blade{1} << dim); ++b) {
      int k = grade_of(b);
      t.index_in_grade[b] = t.by_grade[k].size();
      t.by_grade[k].push_back(b);
    }
    cache[dim] = std::move(t);
  });
  return cache[dim];
}

}  // namespace

const std::vector<Blade>& grade_blades(int dim, int k) { return tables(dim).by_grade[k]; }

std::size_t blade_index_in_grade(int dim, Blade b) { return tables(dim).index_in_grade[b]; }

Extensor::Extensor(int dim, GradeSet domain, GradeSet codomain)
    : dim_(dim), domain_(std::move(domain)), codomain_(std::move(codomain)) {}

Extensor Extensor::zero11(int dim) {
  return Extensor(dim, GradeSet::single(1, dim), GradeSet::single(1, dim));
}

Extensor Extensor::identity11(int dim) {
  Extensor t = zero11(dim);
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) t.at(1, i, 1, i) = 1.0;
  return t;
}

Extensor Extensor::identity(int dim, const GradeSet& grades) {
  Extensor t(dim, grades, grades);
  for (int k = 0; k <= dim; ++k) {
    if (!grades.contains(k)) continue;
    std::size_t nk = grade_blades(dim, k).size();
    for (std::size_t i = 0; i < nk; ++i) t.at(k, i, k, i) = 1.0;
  }
  return t;
}

Extensor Extensor::from_matrix11(int dim, const std::vector<double>& m) {
  if (m.size() != static_cast<std::size_t>(dim) * dim)
    throw DimensionError("matrix size mismatch for (1,1)-extensor");
  Extensor t = zero11(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t.at(1, j, 1, i) = m[i * dim + j];
  return t;
}

bool Extensor::is_pq(int p, int q) const {
  return domain_ == GradeSet::single(p, dim_) && codomain_ == GradeSet::single(q, dim_);
}

double& Extensor::at(int p, std::size_t col, int q, std::size_t row) {
  auto key = std::make_pair(p, q);
  auto it = blocks_.find(key);
  if (it == blocks_.end()) {
    std::size_t rows = grade_blades(dim_, q).size();
    std::size_t cols = grade_blades(dim_, p).size();
    it = blocks_.emplace(key, std::vector<double>(rows * cols, 0.0)).first;
  }
  std::size_t cols = grade_blades(dim_, p).size();
  return it->second[row * cols + col];
}

double Extensor::get(int p, std::size_t col, int q, std::size_t row) const {
  auto it = blocks_.find({p, q});
  if (it == blocks_.end()) return 0.0;
  std::size_t cols = grade_blades(dim_, p).size();
  return it->second[row * cols + col];
}

Multiform Extensor::operator()(const Multiform& x) const {
  if (x.dim() != dim_) throw DimensionError("extensor/multiform dimension mismatch");
  for (Blade b = 0; b < x.size(); ++b)
    if (x[b] != 0.0 && !domain_.contains(grade_of(b)))
      throw GradeError("multiform has grade support outside extensor domain");
  Multiform y(dim_);
  for (const auto& [key, block] : blocks_) {
    auto [p, q] = key;
    const auto& pb = grade_blades(dim_, p);
    const auto& qb = grade_blades(dim_, q);
    for (std::size_t col = 0; col < pb.size(); ++col) {
      double xv = x[pb[col]];
      if (xv == 0.0) continue;
      for (std::size_t row = 0; row < qb.size(); ++row)
        y[qb[row]] += block[row * pb.size() + col] * xv;
    }
  }
  return y;
}

Extensor Extensor::adjoint() const {
  Extensor t(dim_, codomain_, domain_);
  for (const auto& [key, block] : blocks_) {
    auto [p, q] = key;
    std::size_t rows = grade_blades(dim_, q).size();
    std::size_t cols = grade_blades(dim_, p).size();
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        t.at(q, r, p, c) = block[r * cols + c];
  }
  return t;
}

Extensor Extensor::compose(const Extensor& u) const {
  if (dim_ != u.dim_) throw DimensionError("extensor dimension mismatch");
  Extensor out(dim_, u.domain_, codomain_);
  for (const auto& [ukey, ublock] : u.blocks_) {
    auto [p, q] = ukey;
    for (const auto& [tkey, tblock] : blocks_) {
      auto [q2, r] = tkey;
      if (q2 != q) continue;
      std::size_t np = grade_blades(dim_, p).size();
      std::size_t nq = grade_blades(dim_, q).size();
      std::size_t nr = grade_blades(dim_, r).size();
      for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t k = 0; k < nq; ++k) {
          double tv = tblock[i * nq + k];
          if (tv == 0.0) continue;
          for (std::size_t j = 0; j < np; ++j)
            out.at(p, j, r, i) += tv * ublock[k * np + j];
        }
    }
  }
  return out;
}

Extensor Extensor::transformed(double s) const {
  Extensor t(*this);
  for (auto& [key, block] : t.blocks_)
    for (double& v : block) v *= s;
  return t;
}

Extensor& Extensor::operator+=(const Extensor& o) {
  if (dim_ != o.dim_ || !(domain_ == o.domain_) || !(codomain_ == o.codomain_))
    throw DimensionError("extensor shape mismatch in addition");
  for (const auto& [key, block] : o.blocks_) {
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
      blocks_[key] = block;
    } else {
      for (std::size_t i = 0; i < block.size(); ++i) it->second[i] += block[i];
    }
  }
  return *this;
}

Extensor& Extensor::operator-=(const Extensor& o) { return *this += o.transformed(-1.0); }

std::vector<double> Extensor::matrix11() const {
  std::vector<double> m(static_cast<std::size_t>(dim_) * dim_, 0.0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m[i * dim_ + j] = get(1, j, 1, i);
  return m;
}

double Extensor::frobenius() const {
  double s = 0.0;
  for (const auto& [key, block] : blocks_)
    for (double v : block) s += v * v;
  return std::sqrt(s);
}

double Extensor::max_entry() const {
  double s = 0.0;
  for (const auto& [key, block] : blocks_)
    for (double v : block) s = std::max(s, std::abs(v));
  return s;
}

Extensor operator+(Extensor a, const Extensor& b) { return a += b; }
Extensor operator-(Extensor a, const Extensor& b) { return a -= b; }
Extensor operator*(double s, const Extensor& t) { return t.transformed(s); }

Extensor sym_part(const Extensor& t) { return 0.5 * (t + t.adjoint()); }
Extensor antisym_part(const Extensor& t) { return 0.5 * (t - t.adjoint()); }

double trace(const Extensor& t) {
  double s = 0.0;
  for (int j = 0; j < t.dim(); ++j) s += t.get(1, j, 1, j);
  return s;
}

Multiform biform(const Extensor& t) {
  int n = t.dim();
  Multiform b(n);
  for (int j = 0; j < n; ++j) {
    Multiform tj = t(Multiform::basis1(n, j + 1));
    b += wedge(tj, Multiform::basis1(n, j + 1));
  }
  return b;
}

namespace {

// t(v_1) ^ ... ^ t(v_k) for the factors of blade b, as a multiform.
Multiform lifted_blade(const Extensor& t, Blade b) {
  int n = t.dim();
  Multiform acc = Multiform::scalar(n, 1.0);
  for (int i = 0; i < n; ++i)
    if ((b >> i) & 1u) acc = wedge(acc, t(Multiform::basis1(n, i + 1)));
  return acc;
}

}  // namespace

double determinant(const Extensor& t) {
  Blade top = (Blade{1} << t.dim()) - 1;
  return lifted_blade(t, top)[top];
}

Extensor extension(const Extensor& t, const std::vector<int>& grades) {
  int n = t.dim();
  Extensor out(n, GradeSet::of(grades, n), GradeSet::of(grades, n));
  for (int k : grades) {
    const auto& kb = grade_blades(n, k);
    for (std::size_t col = 0; col < kb.size(); ++col) {
      if (k == 0) {
        out.at(0, 0, 0, 0) = 1.0;
        continue;
      }
      Multiform img = lifted_blade(t, kb[col]);
      for (std::size_t row = 0; row < kb.size(); ++row) {
        double v = img[kb[row]];
        if (v != 0.0) out.at(k, col, k, row) = v;
      }
    }
  }
  return out;
}

Extensor extension(const Extensor& t) {
  std::vector<int> all(t.dim() + 1);
  for (int k = 0; k <= t.dim(); ++k) all[k] = k;
  return extension(t, all);
}

Extensor generalization(const Extensor& t) {
  int n = t.dim();
  Extensor out(n, GradeSet::all(n), GradeSet::all(n));
  std::vector<Multiform> imgs;
  imgs.reserve(n);
  for (int j = 1; j <= n; ++j) imgs.push_back(t(Multiform::basis1(n, j)));
  for (int k = 0; k <= n; ++k) {
    const auto& kb = grade_blades(n, k);
    for (std::size_t col = 0; col < kb.size(); ++col) {
      Multiform x = Multiform::blade(n, kb[col]);
      Multiform img(n);
      for (int j = 1; j <= n; ++j)
        img += wedge(imgs[j - 1], lcontract(Multiform::basis1(n, j), x));
      for (std::size_t row = 0; row < kb.size(); ++row) {
        double v = img[kb[row]];
        if (v != 0.0) out.at(k, col, k, row) = v;
      }
    }
  }
  return out;
}

Extensor inverse11(const Extensor& t, double tol) {
  int n = t.dim();
  double det = determinant(t);
  if (std::abs(det) <= tol) throw SingularExtensorError(det);
  Extensor adj_ext = extension(t.adjoint(), {n - 1});
  Multiform tau = Multiform::pseudoscalar(n);
  Multiform tau_inv = tilde(tau);  // tau tau~ = 1 for the unit fiducial volume
  Extensor out = Extensor::zero11(n);
  for (int j = 1; j <= n; ++j) {
    Multiform a_tau = clifford(Multiform::basis1(n, j), tau);
    Multiform col = clifford(adj_ext(a_tau), tau_inv) * (1.0 / det);
    for (int i = 1; i <= n; ++i) {
      double v = col[Blade{1} << (i - 1)];
      if (v != 0.0) out.at(1, j - 1, 1, i - 1) = v;
    }
  }
  return out;
}

bool is_normal(const Extensor& t, double tol) {
  Extensor p = sym_part(t), m = antisym_part(t);
  Extensor comm = p.compose(m) - m.compose(p);
  return comm.max_entry() < tol;
}

Extensor eta_extensor(int dim) {
  Extensor t = Extensor::zero11(dim);
  t.at(1, 0, 1, 0) = 1.0;
  for (int j = 1; j < dim; ++j) t.at(1, j, 1, j) = -1.0;
  return t;
}

Extensor random_extensor11(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Extensor t = Extensor::zero11(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t.at(1, j, 1, i) = u(rng);
  return t;
}

Multiform random_multiform(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multiform m(dim);
  for (Blade b = 0; b < m.size(); ++b) m[b] = u(rng);
  return m;
}

Multiform random_kform(int dim, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multiform m(dim);
  for (Blade b : grade_blades(dim, k)) m[b] = u(rng);
  return m;
}

}  // namespace multiform
