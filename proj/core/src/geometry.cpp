#include "multiform/geometry.hpp"

#include <cmath>

namespace multiform {

namespace {

// Scalar field f -> a.df at x (for Christoffel field arguments).
double scalar_dir_derivative(const std::function<double(const PositionForm&)>& f,
                             const Multiform& a, const PositionForm& x, const FDConfig& fd) {
  double scale = 0.0;
  for (double c : x.xi) scale = std::max(scale, std::abs(c));
  double h = fd.resolved_step(scale);
  auto central = [&](double hh) {
    return (f(displaced(x, a, hh)) - f(displaced(x, a, -hh))) / (2.0 * hh);
  };
  if (fd.scheme == FDConfig::Scheme::Central) return central(h);
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace

double christoffel_first(const MetricField& g, const OneFormField& a,
                         const OneFormField& b, const OneFormField& c,
                         const PositionForm& x, const FDConfig& fd) {
  auto gdot = [&g, &fd](const OneFormField& u, const OneFormField& v) {
    return [&g, &fd, u, v](const PositionForm& y) {
      return dot(g.base_at(y)(u(y)), v(y));
    };
  };
  Multiform av = a(x), bv = b(x), cv = c(x);
  Extensor gx = g.base_at(x);
  double term = scalar_dir_derivative(gdot(b, c), av, x, fd) +
                scalar_dir_derivative(gdot(c, a), bv, x, fd) -
                scalar_dir_derivative(gdot(a, b), cv, x, fd);
  term += dot(gx(cv), lie_bracket(a, b, x, fd));
  term += dot(gx(bv), lie_bracket(c, a, x, fd));
  term -= dot(gx(av), lie_bracket(b, c, x, fd));
  return 0.5 * term;
}

double christoffel_second(const MetricField& g, const OneFormField& a,
                          const OneFormField& b, const OneFormField& c,
                          const PositionForm& x, const FDConfig& fd) {
  // {c; a, b} = [a, b, g^-1(c)]
  OneFormField cinv(g.dim(), [&g, c](const PositionForm& y) {
    return inverse11(g.base_at(y))(c(y));
  });
  return christoffel_first(g, a, b, cinv, x, fd);
}

double christoffel_first_const(const MetricField& g, const Multiform& a,
                               const Multiform& b, const Multiform& c,
                               const PositionForm& x, const FDConfig& fd) {
  Extensor da = metric_dir_derivative(g, a, x, fd);
  Extensor db = metric_dir_derivative(g, b, x, fd);
  Extensor dc = metric_dir_derivative(g, c, x, fd);
  return 0.5 * (dot(da(b), c) + dot(db(c), a) - dot(dc(a), b));
}

Multiform torsion(const ConnectionField& conn, const Multiform& a, const Multiform& b,
                  const PositionForm& x) {
  return conn.gamma(a, b, x) - conn.gamma(b, a, x);
}

Multiform torsion_extensor(const ConnectionField& conn, const Multiform& B,
                           const PositionForm& x) {
  int n = conn.dim();
  Multiform out(n);
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      if (mu == nu) continue;
      Multiform bm = Multiform::basis1(n, mu), bn = Multiform::basis1(n, nu);
      double w = dot(B, wedge(bm, bn));
      if (w != 0.0) out += 0.5 * w * torsion(conn, bm, bn, x);
    }
  return out;
}

double nonmetricity(const ConnectionField& conn, const MetricField& g, const Multiform& a,
                    const Multiform& b, const Multiform& c, const PositionForm& x,
                    const FDConfig& fd) {
  // (nabla_a^- g)(b) = a.d(g(b)) - Gamma_a~+ (g(b)) - g(Gamma_a(b))
  Extensor ga = conn.gamma_extensor(a, x);
  Extensor gx = g.base_at(x);
  MultiformField gb(g.dim(), [&g, b](const PositionForm& y) { return g.base_at(y)(b); });
  Multiform val = field_dir_derivative(gb, a, x, fd) - ga.adjoint()(gx(b)) - gx(ga(b));
  return dot(val, c);
}

Multiform curvature_operator(const ConnectionField& conn, const OneFormField& a,
                             const OneFormField& b, const OneFormField& c,
                             const PositionForm& x, const FDConfig& fd) {
  int n = conn.dim();
  FDConfig outer = fd.outer();
  auto nabla = [&conn, &fd, n](const OneFormField& dir, const OneFormField& X) {
    return OneFormField(n, [&conn, &fd, dir, X, n](const PositionForm& y) {
      return cov_deriv(conn, X, dir(y), y, CovVariant::Plus, fd);
    });
  };
  OneFormField nbc = nabla(b, c), nac = nabla(a, c);
  // [nabla_a, nabla_b] c: the outer derivative sees FD-computed fields.
  Multiform first = field_dir_derivative(nbc, a(x), x, outer) +
                    conn.generalized(a(x), x)(nbc(x));
  Multiform second = field_dir_derivative(nac, b(x), x, outer) +
                     conn.generalized(b(x), x)(nac(x));
  Multiform bracket = lie_bracket(a, b, x, fd);
  Multiform third = cov_deriv(conn, c, bracket, x, CovVariant::Plus, fd);
  return first - second - third;
}

double riemann4(const ConnectionField& conn, const MetricField& g, const OneFormField& a,
                const OneFormField& b, const OneFormField& c, const OneFormField& w,
                const PositionForm& x, const FDConfig& fd) {
  return -dot(curvature_operator(conn, a, b, c, x, fd), g.base_at(x)(w(x)));
}

double curvature4(const ConnectionField& conn, const OneFormField& w, const OneFormField& a,
                  const OneFormField& b, const OneFormField& c, const PositionForm& x,
                  const FDConfig& fd) {
  return dot(w(x), curvature_operator(conn, b, c, a, x, fd));
}

Extensor riemann22(const ConnectionField& conn, const MetricField& g,
                   const PositionForm& x, const FDConfig& fd) {
  int n = conn.dim();
  Extensor r2(n, GradeSet::single(2, n), GradeSet::single(2, n));
  Extensor gx = g.base_at(x);
  const auto& blades2 = grade_blades(n, 2);
  for (std::size_t col = 0; col < blades2.size(); ++col) {
    Blade B = blades2[col];
    int mu = std::countr_zero(B);
    int nu = std::countr_zero(B ^ (Blade{1} << mu));
    OneFormField am = MultiformField::constant(Multiform::basis1(n, mu + 1));
    OneFormField an = MultiformField::constant(Multiform::basis1(n, nu + 1));
    // R2(b_mu ^ b_nu) row entries: R3(b_mu, b_nu, b_rho, b_sig)
    for (std::size_t row = 0; row < blades2.size(); ++row) {
      Blade C = blades2[row];
      int rho = std::countr_zero(C);
      int sig = std::countr_zero(C ^ (Blade{1} << rho));
      OneFormField ar = MultiformField::constant(Multiform::basis1(n, rho + 1));
      Multiform rc = curvature_operator(conn, am, an, ar, x, fd);
      double v = -dot(rc, gx(Multiform::basis1(n, sig + 1)));
      if (v != 0.0) r2.at(2, col, 2, row) = v;
    }
  }
  return r2;
}

Multiform ricci_from_riemann(const Extensor& r2, const MetricExtensor& gx,
                             const Multiform& b) {
  int n = gx.dim();
  Multiform out(n);
  for (int mu = 1; mu <= n; ++mu) {
    Multiform bm = Multiform::basis1(n, mu);
    Multiform blade2 = wedge(bm, b);
    if (blade2.is_zero()) continue;
    out += lcontract(gx.apply_inv(bm), r2(blade2));
  }
  return out;
}

Extensor ricci_extensor(const Extensor& r2, const MetricExtensor& gx) {
  int n = gx.dim();
  Extensor out = Extensor::zero11(n);
  for (int j = 1; j <= n; ++j) {
    Multiform col = ricci_from_riemann(r2, gx, Multiform::basis1(n, j));
    for (int i = 1; i <= n; ++i) {
      double v = col[Blade{1} << (i - 1)];
      if (v != 0.0) out.at(1, j - 1, 1, i - 1) = v;
    }
  }
  return out;
}

double scalar_curvature(const Extensor& r2, const MetricExtensor& gx) {
  int n = gx.dim();
  double s = 0.0;
  for (int nu = 1; nu <= n; ++nu) {
    Multiform bn = Multiform::basis1(n, nu);
    s += dot(gx.apply_inv(bn), ricci_from_riemann(r2, gx, bn));
  }
  return s;
}

Extensor einstein_extensor(const Extensor& r2, const MetricExtensor& gx) {
  double R = scalar_curvature(r2, gx);
  return ricci_extensor(r2, gx) - (0.5 * R) * gx.base();
}

Multiform gauge_rotation_small(const MetricField& g, const Multiform& a,
                               const PositionForm& x, const FDConfig& fd) {
  int n = g.dim();
  MetricExtensor gx = g.at(x);
  std::vector<Extensor> dg;
  dg.reserve(n);
  for (int mu = 1; mu <= n; ++mu)
    dg.push_back(metric_dir_derivative(g, Multiform::basis1(n, mu), x, fd));
  Multiform acc(n);
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      if (mu == nu) continue;
      Multiform bm = Multiform::basis1(n, mu), bn = Multiform::basis1(n, nu);
      double A = 0.5 * (dot(a, dg[mu - 1](bn)) - dot(a, dg[nu - 1](bm)));
      if (A != 0.0) acc += A * wedge(bm, bn);
    }
  return -0.5 * gx.extended_inv(acc);
}

Multiform gauge_rotation_big(const ExtensorField& h, const Multiform& a,
                             const PositionForm& x, const FDConfig& fd) {
  int n = h.dim();
  Extensor eta = eta_extensor(n);
  MetricField g(n, [h, eta](const PositionForm& y) {
    Extensor hy = h(y);
    return hy.adjoint().compose(eta.compose(hy)).matrix11();
  });
  // The h^-1(beta) arguments enter the first Christoffel operator as
  // position-dependent fields; their derivatives and brackets matter.
  OneFormField af = MultiformField::constant(a);
  Multiform acc(n);
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      if (mu == nu) continue;
      Multiform bm = Multiform::basis1(n, mu), bn = Multiform::basis1(n, nu);
      OneFormField uf(n, [h, bm](const PositionForm& y) { return inverse11(h(y))(bm); });
      OneFormField vf(n, [h, bn](const PositionForm& y) { return inverse11(h(y))(bn); });
      double chr = christoffel_first(g, af, uf, vf, x, fd);
      if (chr != 0.0) acc += chr * wedge(bm, bn);
    }
  Extensor eta_ext2 = extension(eta, {2});
  return -0.5 * eta_ext2(acc);
}

Extensor coupling_field(const ExtensorField& h, const Multiform& a, const PositionForm& x,
                        const FDConfig& fd) {
  int n = h.dim();
  Extensor eta = eta_extensor(n);
  Extensor hx = h(x);
  Extensor hinv = inverse11(hx);
  Extensor hclub = hinv.adjoint();
  Extensor dh = field_dir_derivative(h, a, x, fd);
  MetricField g(n, [h, eta](const PositionForm& y) {
    Extensor hy = h(y);
    return hy.adjoint().compose(eta.compose(hy)).matrix11();
  });
  Extensor dg = metric_dir_derivative(g, a, x, fd);
  return dh.compose(hinv) - 0.5 * eta.compose(hclub).compose(dg).compose(hinv);
}

GaugeCurvature gauge_curvature(const ExtensorField& h, const PositionForm& x,
                               const FDConfig& fd) {
  int n = h.dim();
  MetricExtensor eta = MetricExtensor::eta(n);
  FDConfig outer = fd.outer();
  auto Omega = [&h, &fd, n](const Multiform& a) {
    return MultiformField(n, [&h, &fd, a, n](const PositionForm& y) {
      return gauge_rotation_big(h, a, y, fd);
    });
  };
  Extensor r2(n, GradeSet::single(2, n), GradeSet::single(2, n));
  const auto& blades2 = grade_blades(n, 2);
  std::vector<MultiformField> om_fields;
  om_fields.reserve(n);
  for (int mu = 1; mu <= n; ++mu) om_fields.push_back(Omega(Multiform::basis1(n, mu)));
  for (std::size_t col = 0; col < blades2.size(); ++col) {
    Blade B = blades2[col];
    int mu = std::countr_zero(B);
    int nu = std::countr_zero(B ^ (Blade{1} << mu));
    // fiducial directions are constant fields: the bracket term vanishes
    Multiform val =
        field_dir_derivative(om_fields[nu], Multiform::basis1(n, mu + 1), x, outer) -
        field_dir_derivative(om_fields[mu], Multiform::basis1(n, nu + 1), x, outer) +
        metric_commutator(eta, om_fields[mu](x), om_fields[nu](x));
    for (std::size_t row = 0; row < blades2.size(); ++row) {
      double v = val[blades2[row]];
      if (v != 0.0) r2.at(2, col, 2, row) = v;
    }
  }
  GaugeCurvature out{r2, Extensor::zero11(n), 0.0, Extensor::zero11(n)};
  Extensor hx = h(x);
  Extensor hclub = inverse11(hx).adjoint();
  for (int j = 1; j <= n; ++j) {
    Multiform b = Multiform::basis1(n, j);
    Multiform col(n);
    for (int mu = 1; mu <= n; ++mu) {
      Multiform bm = Multiform::basis1(n, mu);
      Multiform blade2 = wedge(bm, b);
      if (blade2.is_zero()) continue;
      col += lcontract(hclub(bm), r2(blade2));
    }
    for (int i = 1; i <= n; ++i) {
      double v = col[Blade{1} << (i - 1)];
      if (v != 0.0) out.ricci.at(1, j - 1, 1, i - 1) = v;
    }
  }
  for (int nu = 1; nu <= n; ++nu) {
    Multiform bn = Multiform::basis1(n, nu);
    out.scalar += dot(hclub(bn), out.ricci(bn));
  }
  out.einstein = out.ricci - (0.5 * out.scalar) * hx;
  return out;
}

Multiform lc_differential(const MetricField& g, const MultiformField& X,
                          const PositionForm& x, LcDifferential kind, const FDConfig& fd) {
  int n = g.dim();
  ConnectionField lc = ConnectionField::levi_civita(g, fd);
  MetricExtensor gx = g.at(x);
  Multiform out(n);
  FDConfig outer = fd.outer();
  for (int mu = 1; mu <= n; ++mu) {
    Multiform bm = Multiform::basis1(n, mu);
    Multiform dmu = cov_deriv(lc, X, bm, x, CovVariant::Minus, fd);
    switch (kind) {
      case LcDifferential::Grad: out += metric_clifford(gx, bm, dmu); break;
      case LcDifferential::Div: out += metric_lcontract(gx, bm, dmu); break;
      case LcDifferential::Rot: out += wedge(bm, dmu); break;
    }
  }
  (void)outer;
  return out;
}

}  // namespace multiform
