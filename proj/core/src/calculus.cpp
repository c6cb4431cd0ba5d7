#include "multiform/calculus.hpp"

#include <cmath>
#include <limits>

namespace multiform {

namespace {
const double kCbrtEps = std::cbrt(std::numeric_limits<double>::epsilon());
}

double FDConfig::resolved_step(double scale) const {
  double base = (step > 0.0) ? step : kCbrtEps;
  return base * (1.0 + std::abs(scale));
}

double FDConfig::resolved_step2(double scale) const {
  double base = (step2 > 0.0) ? step2 : std::sqrt((step > 0.0) ? step : kCbrtEps);
  return base * (1.0 + std::abs(scale));
}

FDConfig FDConfig::outer() const {
  FDConfig o;
  o.step = (step2 > 0.0) ? step2 : std::sqrt((step > 0.0) ? step : kCbrtEps);
  o.step2 = std::sqrt(o.step);
  o.scheme = scheme;
  return o;
}

Multiform real_derivative(const std::function<Multiform(double)>& x, double l0,
                          const FDConfig& fd) {
  double h = fd.resolved_step(l0);
  auto central = [&](double hh) { return (x(l0 + hh) - x(l0 - hh)) * (0.5 / hh); };
  if (fd.scheme == FDConfig::Scheme::Central) return central(h);
  Multiform d1 = central(h), d2 = central(0.5 * h);
  return (4.0 / 3.0) * d2 - (1.0 / 3.0) * d1;
}

double real_derivative_scalar(const std::function<double(double)>& f, double l0,
                              const FDConfig& fd) {
  double h = fd.resolved_step(l0);
  auto central = [&](double hh) { return (f(l0 + hh) - f(l0 - hh)) * (0.5 / hh); };
  if (fd.scheme == FDConfig::Scheme::Central) return central(h);
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

Multiform directional_derivative(const MultiformFunction& f, const Multiform& x,
                                 const Multiform& a, const FDConfig& fd) {
  Multiform dir = grade_project(a, f.domain);
  // Step sized against ||X||, not ||A||: the displacement X + l <A>_X should
  // probe the scale the function actually varies on.
  double scale = norm(x) / std::max(norm(dir), 1e-30);
  FDConfig local{fd.resolved_step(scale), fd.step2, fd.scheme};
  return real_derivative([&](double l) { return f.eval(x + l * dir); }, 0.0, local);
}

Multiform derivative_star(const MultiformFunction& f, const Multiform& x, Product star,
                          const FDConfig& fd) {
  int n = x.dim();
  Multiform out(n);
  for (Blade b : f.domain.blades()) {
    Multiform e = Multiform::blade(n, b);
    Multiform dir = directional_derivative(f, x, e, fd);
    out += apply_product(star, e, dir);
  }
  return out;
}

Multiform derivative(const MultiformFunction& f, const Multiform& x, const FDConfig& fd) {
  return derivative_star(f, x, Product::Clifford, fd);
}

Multiform t_distorted_derivative(const MultiformFunction& f, const Multiform& x,
                                 const Extensor& t, Product star, const FDConfig& fd) {
  int n = x.dim();
  Extensor text = extension(t);
  Multiform out(n);
  for (Blade b : f.domain.blades()) {
    Multiform e = Multiform::blade(n, b);
    Multiform dir = directional_derivative(f, x, e, fd);
    out += apply_product(star, text(e), dir);
  }
  return out;
}

Multiform ExtensorFunctional::eval(const Extensor& t) const {
  std::vector<Multiform> imgs;
  imgs.reserve(anchors.size());
  for (const auto& a : anchors) imgs.push_back(t(a));
  return generator(imgs);
}

namespace {

// d_{t(X^i)} F with the other slots frozen at t(X^j).
Multiform slot_gradient(const ExtensorFunctional& f, const Extensor& t, std::size_t slot,
                        const FDConfig& fd) {
  std::vector<Multiform> frozen;
  frozen.reserve(f.anchors.size());
  for (const auto& a : f.anchors) frozen.push_back(t(a));
  int n = t.dim();
  MultiformFunction g{GradeSet::single(f.codomain_grade, n),
                      [&](const Multiform& y) {
                        std::vector<Multiform> args = frozen;
                        args[slot] = y;
                        return f.generator(args);
                      }};
  return derivative(g, frozen[slot], fd);
}

}  // namespace

Multiform functional_directional(const ExtensorFunctional& f, const Extensor& t,
                                 const Multiform& a, const FDConfig& fd) {
  int n = t.dim();
  Multiform out(n);
  for (std::size_t i = 0; i < f.anchors.size(); ++i) {
    double w = dot(a, f.anchors[i]);
    if (w == 0.0) continue;
    out += w * slot_gradient(f, t, i, fd);
  }
  return out;
}

Multiform functional_derivative(const ExtensorFunctional& f, const Extensor& t,
                                Product star, const FDConfig& fd) {
  int n = t.dim();
  Multiform out(n);
  for (std::size_t i = 0; i < f.anchors.size(); ++i)
    out += apply_product(star, f.anchors[i], slot_gradient(f, t, i, fd));
  return out;
}

double variational(const std::function<double(const Extensor&)>& f, const Extensor& t,
                   const Extensor& w, const FDConfig& fd) {
  double scale = t.frobenius() / std::max(w.frobenius(), 1e-30);
  FDConfig local{fd.resolved_step(scale), fd.step2, fd.scheme};
  return real_derivative_scalar([&](double l) { return f(t + l * w); }, 0.0, local);
}

}  // namespace multiform
