#include "multiform/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace multiform {

EigenSystem symmetric_eigen(int n, const std::vector<double>& m) {
  std::vector<double> a(m);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return s;
  };

  double scale = 0.0;
  for (double x : m) scale = std::max(scale, std::abs(x));
  double eps = std::max(scale, 1.0) * 1e-30;
  for (int sweep = 0; sweep < 100 && off() > eps; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        double app = a[p * n + p], aqq = a[q * n + q];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
  }

  EigenSystem es;
  es.values.resize(n);
  es.vectors.assign(n, std::vector<double>(n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = a[i * n + i];
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    bool pi = lam[i] > 0, pj = lam[j] > 0;
    if (pi != pj) return pi;
    return std::abs(lam[i]) > std::abs(lam[j]);
  });
  for (int r = 0; r < n; ++r) {
    int i = order[r];
    es.values[r] = lam[i];
    for (int k = 0; k < n; ++k) es.vectors[r][k] = v[k * n + i];
  }

  // Degenerate clusters: re-span deterministically by Gram-Schmidt of the
  // projected fiducial axes, so repeated calls produce identical vectors.
  double gap_tol = 1e-10 * std::max(scale, 1.0);
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && std::abs(es.values[end] - es.values[start]) < gap_tol) ++end;
    if (end - start > 1) {
      int k = end - start;
      // projector onto the cluster span
      std::vector<std::vector<double>> basis;
      for (int axis = 0; axis < n && static_cast<int>(basis.size()) < k; ++axis) {
        std::vector<double> w(n, 0.0);
        for (int r = start; r < end; ++r) {
          double c = es.vectors[r][axis];
          for (int j = 0; j < n; ++j) w[j] += c * es.vectors[r][j];
        }
        for (const auto& u : basis) {
          double c = std::inner_product(w.begin(), w.end(), u.begin(), 0.0);
          for (int j = 0; j < n; ++j) w[j] -= c * u[j];
        }
        double nn = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (nn > 1e-8) {
          for (double& x : w) x /= nn;
          basis.push_back(w);
        }
      }
      for (int r = start; r < end && r - start < static_cast<int>(basis.size()); ++r)
        es.vectors[r] = basis[r - start];
    }
    start = end;
  }

  // Orient: largest-magnitude component positive; ties resolved by position.
  for (auto& vec : es.vectors) {
    int arg = 0;
    for (int j = 1; j < n; ++j)
      if (std::abs(vec[j]) > std::abs(vec[arg])) arg = j;
    if (vec[arg] < 0)
      for (double& x : vec) x = -x;
  }
  return es;
}

MetricExtensor::MetricExtensor(const Extensor& g, double sym_tol, double det_tol)
    : base_(g),
      inv_(Extensor::zero11(g.dim())),
      ext_(g.dim(), GradeSet::all(g.dim()), GradeSet::all(g.dim())),
      ext_inv_(ext_) {
  int n = g.dim();
  auto m = g.matrix11();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m[i * n + j] - m[j * n + i]) > sym_tol)
        throw DegenerateMetricError("metric extensor is not symmetric");
  det_ = determinant(g);
  if (std::abs(det_) <= det_tol)
    throw DegenerateMetricError("metric extensor is degenerate, det = " + std::to_string(det_));
  inv_ = inverse11(g, det_tol);
  ext_ = extension(base_);
  ext_inv_ = extension(inv_);
  auto es = symmetric_eigen(n, m);
  int plus = 0, minus = 0;
  for (double l : es.values) {
    if (l > 1e-12)
      ++plus;
    else if (l < -1e-12)
      ++minus;
    else
      throw DegenerateMetricError("metric eigenvalue numerically zero");
  }
  signature_ = {plus, minus};
}

MetricExtensor MetricExtensor::from_matrix(int dim, const std::vector<double>& m) {
  return MetricExtensor(Extensor::from_matrix11(dim, m));
}

MetricExtensor MetricExtensor::canonical(int dim) {
  return MetricExtensor(Extensor::identity11(dim));
}

MetricExtensor MetricExtensor::eta(int dim) { return MetricExtensor(eta_extensor(dim)); }

double metric_dot(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  return dot(g.extended(x), y);
}

Multiform metric_lcontract(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  return lcontract(g.extended(x), y);
}

Multiform metric_rcontract(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  return rcontract(x, g.extended(y));
}

double inv_metric_dot(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  return dot(g.extended_inv(x), y);
}

Multiform inv_metric_lcontract(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  return lcontract(g.extended_inv(x), y);
}

namespace {

// a o Y for a 1-form a in the g-Clifford algebra.
Multiform cl_one(const MetricExtensor& g, const Multiform& a, const Multiform& y) {
  return metric_lcontract(g, a, y) + wedge(a, y);
}

// blade o Y, peeling the leading factor: (a ^ A') o Y = a o (A' o Y) - (a _|g A') o Y.
Multiform cl_blade(const MetricExtensor& g, Blade b, const Multiform& y) {
  if (b == 0) return y;
  int lead = std::countr_zero(b);
  Blade rest = b & (b - 1) & ~(Blade{1} << lead);
  rest = b ^ (Blade{1} << lead);
  Multiform a = Multiform::basis1(y.dim(), lead + 1);
  if (rest == 0) return cl_one(g, a, y);
  Multiform restY = cl_blade(g, rest, y);
  Multiform corr = metric_lcontract(g, a, Multiform::blade(y.dim(), rest));
  Multiform out = cl_one(g, a, restY);
  if (!corr.is_zero()) {
    // corr has grades |rest| - 2, recurse on its blades
    for (Blade c = 0; c < corr.size(); ++c)
      if (corr[c] != 0.0) out -= corr[c] * cl_blade(g, c, y);
  }
  return out;
}

}  // namespace

Multiform metric_clifford(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  if (x.dim() != y.dim()) throw DimensionError("multiform dimension mismatch");
  Multiform out(x.dim());
  for (Blade b = 0; b < x.size(); ++b)
    if (x[b] != 0.0) out += x[b] * cl_blade(g, b, y);
  return out;
}

Multiform metric_product(Product p, const MetricExtensor& g, const Multiform& x,
                         const Multiform& y) {
  switch (p) {
    case Product::Wedge: return wedge(x, y);
    case Product::Dot: return Multiform::scalar(x.dim(), metric_dot(g, x, y));
    case Product::LContract: return metric_lcontract(g, x, y);
    case Product::RContract: return metric_rcontract(g, x, y);
    case Product::Clifford: return metric_clifford(g, x, y);
  }
  throw ConfigError("unknown product tag");
}

Multiform metric_commutator(const MetricExtensor& g, const Multiform& x, const Multiform& y) {
  return 0.5 * (metric_clifford(g, x, y) - metric_clifford(g, y, x));
}

Distortion::Distortion(const Extensor& h, double det_tol)
    : h_(h), hadj_(h.adjoint()), hinv_(Extensor::zero11(h.dim())), hclub_(hinv_) {
  det_ = determinant(h_);
  if (std::abs(det_) <= det_tol) throw SingularExtensorError(det_);
  hinv_ = inverse11(h_, det_tol);
  hclub_ = hinv_.adjoint();
}

MetricExtensor Distortion::induced_metric() const {
  return MetricExtensor(hadj_.compose(eta_extensor(dim()).compose(h_)), 1e-9);
}

Distortion factorize_metric(const MetricExtensor& g) {
  int n = g.dim();
  auto es = symmetric_eigen(n, g.base().matrix11());
  int plus = 0;
  for (double l : es.values) {
    if (std::abs(l) < 1e-12) throw DegenerateMetricError("eigenvalue numerically zero");
    if (l > 0) ++plus;
  }
  if (plus != 1)
    throw SignatureError("metric signature (" + std::to_string(plus) + "," +
                         std::to_string(n - plus) + ") does not pair with eta (1," +
                         std::to_string(n - 1) + ")");
  // h(a) = sum_mu sqrt|lam^mu| (a . v^mu) beta^mu
  Extensor h = Extensor::zero11(n);
  for (int mu = 0; mu < n; ++mu) {
    double s = std::sqrt(std::abs(es.values[mu]));
    for (int j = 0; j < n; ++j) h.at(1, j, 1, mu) = s * es.vectors[mu][j];
  }
  return Distortion(h);
}

Distortion gauge_transform(const Distortion& d, const Extensor& L, double tol) {
  int n = d.dim();
  Extensor eta = eta_extensor(n);
  Extensor probe = L.adjoint().compose(eta.compose(L)) - eta;
  if (probe.max_entry() > tol)
    throw GaugeError("transform is not eta-orthogonal, residual " +
                     std::to_string(probe.max_entry()));
  return Distortion(L.compose(d.h()));
}

Extensor random_eta_orthogonal(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  // exp(eta A) with A antisymmetric is eta-orthogonal: (e^{eta A})~+ eta e^{eta A} = eta.
  int n = dim;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = u(rng);
      a[i * n + j] = v;
      a[j * n + i] = -v;
    }
  std::vector<double> gen(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double e = (i == 0) ? 1.0 : -1.0;  // eta row scaling
    for (int j = 0; j < n; ++j) gen[i * n + j] = e * a[i * n + j];
  }
  // matrix exponential by scaling and squaring with a short Taylor series
  std::vector<double> x(gen);
  int squarings = 6;
  for (double& v : x) v /= (1 << squarings);
  std::vector<double> result(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) result[i * n + i] = 1.0;
  std::vector<double> term(result);
  auto matmul = [n](const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> r(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double pik = p[i * n + k];
        if (pik == 0.0) continue;
        for (int j = 0; j < n; ++j) r[i * n + j] += pik * q[k * n + j];
      }
    return r;
  };
  for (int k = 1; k <= 16; ++k) {
    term = matmul(term, x);
    for (double& v : term) v /= k;
    for (std::size_t i = 0; i < result.size(); ++i) result[i] += term[i];
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return Extensor::from_matrix11(n, result);
}

}  // namespace multiform
