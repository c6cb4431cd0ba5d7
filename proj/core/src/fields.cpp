#include "multiform/fields.hpp"

#include <cmath>

namespace multiform {

Multiform PositionForm::as_form() const {
  Multiform m(dim());
  for (int i = 0; i < dim(); ++i) m[Blade{1} << i] = xi[i];
  return m;
}

PositionForm displaced(const PositionForm& x, const Multiform& a, double h) {
  PositionForm y = x;
  for (int i = 0; i < x.dim(); ++i) y.xi[i] += h * a[Blade{1} << i];
  return y;
}

MultiformField MultiformField::constant(const Multiform& v) {
  return MultiformField(v.dim(), [v](const PositionForm&) { return v; });
}

ExtensorField ExtensorField::constant(const Extensor& t) {
  return ExtensorField(t.dim(), [t](const PositionForm&) { return t; });
}

MetricField MetricField::constant(int dim, std::vector<double> matrix) {
  return MetricField(dim, [m = std::move(matrix)](const PositionForm&) { return m; });
}

Extensor MetricField::base_at(const PositionForm& x) const {
  return Extensor::from_matrix11(dim_, m_(x));
}

MetricExtensor MetricField::at(const PositionForm& x) const {
  return MetricExtensor::from_matrix(dim_, m_(x));
}

namespace {

double coord_scale(const PositionForm& x) {
  double s = 0.0;
  for (double c : x.xi) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace

Multiform field_dir_derivative(const MultiformField& f, const Multiform& a,
                               const PositionForm& x, const FDConfig& fd) {
  double h = fd.resolved_step(coord_scale(x));
  auto central = [&](double hh) {
    return (f(displaced(x, a, hh)) - f(displaced(x, a, -hh))) * (0.5 / hh);
  };
  if (fd.scheme == FDConfig::Scheme::Central) return central(h);
  return (4.0 / 3.0) * central(0.5 * h) - (1.0 / 3.0) * central(h);
}

Extensor field_dir_derivative(const ExtensorField& f, const Multiform& a,
                              const PositionForm& x, const FDConfig& fd) {
  double h = fd.resolved_step(coord_scale(x));
  auto central = [&](double hh) {
    return (1.0 / (2.0 * hh)) * (f(displaced(x, a, hh)) - f(displaced(x, a, -hh)));
  };
  if (fd.scheme == FDConfig::Scheme::Central) return central(h);
  return (4.0 / 3.0) * central(0.5 * h) + (-1.0 / 3.0) * central(h);
}

Extensor metric_dir_derivative(const MetricField& g, const Multiform& a,
                               const PositionForm& x, const FDConfig& fd) {
  int n = g.dim();
  double h = fd.resolved_step(coord_scale(x));
  auto central = [&](double hh) {
    auto p = g.matrix(displaced(x, a, hh));
    auto m = g.matrix(displaced(x, a, -hh));
    std::vector<double> d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = (p[i] - m[i]) / (2.0 * hh);
    return d;
  };
  std::vector<double> d;
  if (fd.scheme == FDConfig::Scheme::Central) {
    d = central(h);
  } else {
    auto d1 = central(h), d2 = central(0.5 * h);
    d.resize(d1.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (4.0 * d2[i] - d1[i]) / 3.0;
  }
  return Extensor::from_matrix11(n, d);
}

Multiform field_coord_derivative(const MultiformField& f, int mu, const PositionForm& x,
                                 const FDConfig& fd) {
  return field_dir_derivative(f, Multiform::basis1(f.dim(), mu + 1), x, fd);
}

Multiform lie_bracket(const OneFormField& a, const OneFormField& b, const PositionForm& x,
                      const FDConfig& fd) {
  return field_dir_derivative(b, a(x), x, fd) - field_dir_derivative(a, b(x), x, fd);
}

std::vector<double> FrameSpec::components(const Multiform& v, const PositionForm& x) const {
  int n = dim();
  // Solve E c = v with E columns the frame 1-forms at x.
  std::vector<double> m(static_cast<std::size_t>(n) * n), rhs(n);
  for (int j = 0; j < n; ++j) {
    Multiform ej = frame[j](x);
    for (int i = 0; i < n; ++i) m[i * n + j] = ej[Blade{1} << i];
  }
  for (int i = 0; i < n; ++i) rhs[i] = v[Blade{1} << i];
  // Gaussian elimination with partial pivoting.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) < 1e-10)
      throw DegenerateMetricError("frame is degenerate at evaluation point");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> c(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    for (int j = i + 1; j < n; ++j) s -= m[i * n + j] * c[j];
    c[i] = s / m[i * n + i];
  }
  return c;
}

Multiform FrameSpec::dual(int k, const PositionForm& x) const {
  int n = dim();
  Multiform out(n);
  for (int i = 0; i < n; ++i) {
    Multiform probe = Multiform::basis1(n, i + 1);
    out[Blade{1} << i] = components(probe, x)[k];
  }
  return out;
}

ConnectionField ConnectionField::zero(int dim) {
  return ConnectionField(
      dim, [dim](const Multiform&, const Multiform&, const PositionForm&) {
        return Multiform(dim);
      });
}

ConnectionField ConnectionField::levi_civita(const MetricField& g, const FDConfig& fd) {
  int n = g.dim();
  auto gamma = [g, fd, n](const Multiform& a, const Multiform& b,
                          const PositionForm& x) {
    MetricExtensor gx = g.at(x);
    // dg[mu] = (beta_mu . d g) as (1,1)-extensors
    std::vector<Extensor> dg;
    dg.reserve(n);
    for (int mu = 1; mu <= n; ++mu)
      dg.push_back(metric_dir_derivative(g, Multiform::basis1(n, mu), x, fd));
    auto dg_along = [&](const Multiform& v) {
      Extensor s = Extensor::zero11(n);
      for (int mu = 0; mu < n; ++mu) {
        double c = v[Blade{1} << mu];
        if (c != 0.0) s += c * dg[mu];
      }
      return s;
    };
    // first Christoffel with constant-extension arguments:
    // [a,b,c] = 1/2 ((a.dg)(b).c + (b.dg)(c).a - (c.dg)(a).b)
    Extensor da = dg_along(a), db = dg_along(b);
    Multiform out(n);
    for (int mu = 1; mu <= n; ++mu) {
      Multiform c = gx.apply_inv(Multiform::basis1(n, mu));
      Extensor dc = dg_along(c);
      double chr = 0.5 * (dot(da(b), c) + dot(db(c), a) - dot(dc(a), b));
      out += chr * Multiform::basis1(n, mu);
    }
    return out;
  };
  return ConnectionField(n, gamma);
}

ConnectionField ConnectionField::from_frame(
    const FrameSpec& frame, std::function<double(int, int, int, const PositionForm&)> coeffs,
    const FDConfig& fd) {
  int n = frame.dim();
  auto gamma = [frame, coeffs, fd, n](const Multiform& a, const Multiform& b,
                                      const PositionForm& x) {
    auto ac = frame.components(a, x);
    auto bc = frame.components(b, x);
    Multiform out(n);
    // gamma_a(b) = a^i b^j C^k_ij e_k - b^j (a . d e_j)
    for (int j = 0; j < n; ++j) {
      if (bc[j] == 0.0) continue;
      out -= bc[j] * field_dir_derivative(frame.frame[j], a, x, fd);
      if (coeffs)
        for (int i = 0; i < n; ++i) {
          if (ac[i] == 0.0) continue;
          for (int k = 0; k < n; ++k) {
            double c = coeffs(k, i, j, x);
            if (c != 0.0) out += ac[i] * bc[j] * c * frame.frame[k](x);
          }
        }
    }
    return out;
  };
  return ConnectionField(n, gamma);
}

Multiform ConnectionField::gamma(const Multiform& a, const Multiform& b,
                                 const PositionForm& x) const {
  return gamma_(a, b, x);
}

Extensor ConnectionField::gamma_extensor(const Multiform& a, const PositionForm& x) const {
  Extensor t = Extensor::zero11(dim_);
  for (int j = 1; j <= dim_; ++j) {
    Multiform img = gamma_(a, Multiform::basis1(dim_, j), x);
    for (int i = 1; i <= dim_; ++i) {
      double v = img[Blade{1} << (i - 1)];
      if (v != 0.0) t.at(1, j - 1, 1, i - 1) = v;
    }
  }
  return t;
}

Multiform ConnectionField::omega(const Multiform& a, const PositionForm& x) const {
  return 0.5 * biform(gamma_extensor(a, x));
}

Extensor ConnectionField::generalized(const Multiform& a, const PositionForm& x) const {
  return generalization(gamma_extensor(a, x));
}

Multiform cov_deriv(const ConnectionField& conn, const MultiformField& X,
                    const Multiform& a, const PositionForm& x, CovVariant v,
                    const FDConfig& fd) {
  Multiform dir = field_dir_derivative(X, a, x, fd);
  Extensor G = conn.generalized(a, x);
  if (v == CovVariant::Plus) return dir + G(X(x));
  return dir - G.adjoint()(X(x));
}

Extensor cov_deriv_extensor(const ConnectionField& conn, const ExtensorField& t,
                            const Multiform& a, const PositionForm& x, CovVariant v,
                            const FDConfig& fd) {
  int n = conn.dim();
  Extensor tx = t(x);
  Extensor G = conn.generalized(a, x);
  Extensor Gadj = G.adjoint();
  Extensor out(n, tx.domain(), tx.codomain());
  for (int p = 0; p <= n; ++p) {
    if (!tx.domain().contains(p)) continue;
    const auto& pb = grade_blades(n, p);
    for (std::size_t col = 0; col < pb.size(); ++col) {
      Multiform B = Multiform::blade(n, pb[col]);
      // nabla_a of the multiform field y -> t_y(B)
      MultiformField tB(n, [&t, B](const PositionForm& y) { return t(y)(B); });
      Multiform dir = field_dir_derivative(tB, a, x, fd);
      Multiform val;
      if (v == CovVariant::Plus) {
        // (nabla_a t)(B) = [a.d t(B) + Gamma_a(t(B))] - t(-Gamma_a~+(B))
        val = dir + G(tx(B)) + tx(grade_project(Gadj(B), tx.domain()));
      } else {
        val = dir - Gadj(tx(B)) - tx(grade_project(G(B), tx.domain()));
      }
      for (int q = 0; q <= n; ++q) {
        if (!tx.codomain().contains(q)) continue;
        const auto& qb = grade_blades(n, q);
        for (std::size_t row = 0; row < qb.size(); ++row) {
          double vv = val[qb[row]];
          if (vv != 0.0) out.at(p, col, q, row) = vv;
        }
      }
    }
  }
  return out;
}

}  // namespace multiform
