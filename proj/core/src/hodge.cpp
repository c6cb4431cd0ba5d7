#include "multiform/hodge.hpp"

#include <cmath>

namespace multiform {

HodgeContext::HodgeContext(int dim, std::shared_ptr<const MetricExtensor> g)
    : dim_(dim), g_(std::move(g)) {
  scale_ = std::sqrt(std::abs(g_->det()));
}

HodgeContext HodgeContext::canonical(int dim) {
  return HodgeContext(dim, std::make_shared<MetricExtensor>(MetricExtensor::canonical(dim)));
}

HodgeContext HodgeContext::standard_eta(int dim) {
  return HodgeContext(dim, std::make_shared<MetricExtensor>(MetricExtensor::eta(dim)));
}

HodgeContext HodgeContext::metric(MetricExtensor g) {
  int dim = g.dim();
  return HodgeContext(dim, std::make_shared<MetricExtensor>(std::move(g)));
}

Multiform HodgeContext::volume() const {
  return Multiform::pseudoscalar(dim_) * scale_;
}

Multiform HodgeContext::star(const Multiform& x) const { return hodge(*g_, x); }

Multiform HodgeContext::star_inverse(const Multiform& y) const {
  return hodge_inverse(*g_, y);
}

Multiform hodge_canonical(const Multiform& x) {
  return lcontract(tilde(x), Multiform::pseudoscalar(x.dim()));
}

Multiform hodge(const MetricExtensor& g, const Multiform& x) {
  double s = std::sqrt(std::abs(g.det()));
  return lcontract(g.extended_inv(tilde(x)), Multiform::pseudoscalar(x.dim())) * s;
}

Multiform hodge_inverse(const MetricExtensor& g, const Multiform& y) {
  // On grade r, star_g o star_g = sgn(det g) (-1)^{r(n-r)} id; invert gradewise.
  int n = y.dim();
  Multiform out(n);
  Multiform sy = hodge(g, y);
  for (int s = 0; s <= n; ++s) {
    Multiform part = k_part(y, s);
    if (part.is_zero()) continue;
    int r = n - s;  // grade of the preimage
    double factor = g.sign() * (((r * (n - r)) & 1) ? -1.0 : 1.0);
    out += k_part(hodge(g, part), r) * (1.0 / factor);
  }
  return out;
}

Multiform golden_rule_residual(const Distortion& d, const Multiform& x,
                               const Multiform& y, Product p) {
  MetricExtensor g = d.induced_metric();
  MetricExtensor eta = MetricExtensor::eta(d.dim());
  Extensor hx = extension(d.h());
  Multiform lhs = hx(metric_product(p, g, x, y));
  Multiform rhs = metric_product(p, eta, hx(x), hx(y));
  return lhs - rhs;
}

HodgeRelationResidual hodge_relation_residual(const Distortion& d, const Multiform& x,
                                              bool signed_form) {
  MetricExtensor g = d.induced_metric();
  Multiform star_g = hodge(g, x);

  // star_g = sgn(det g) / sqrt|det g| g_ext o star; the sign factor matters
  // whenever det g < 0, which is every Lorentz metric in even dimension.
  double s = std::sqrt(std::abs(g.det()));
  Multiform via_ext = g.extended(hodge_canonical(x)) * (g.sign() / s);

  MetricExtensor eta = MetricExtensor::eta(d.dim());
  Extensor hadj_ext = extension(d.adjoint());
  Extensor hclub_ext = extension(d.clubsuit());
  Multiform via_dist = hadj_ext(hodge(eta, hclub_ext(x)));
  if (signed_form && d.det() < 0) via_dist *= -1.0;

  return {max_abs(star_g - via_ext), max_abs(star_g - via_dist)};
}

}  // namespace multiform
