#pragma once

#include <memory>

#include "multiform/metric.hpp"

namespace multiform {

// Hodge star operators: canonical (X~ _| tau), eta, and metric variants.
// The metric star is X~ _|g^-1 tau_g with tau_g = sqrt|det g| tau.
class HodgeContext {
 public:
  static HodgeContext canonical(int dim);
  static HodgeContext standard_eta(int dim);
  static HodgeContext metric(MetricExtensor g);

  int dim() const { return dim_; }
  const MetricExtensor& g() const { return *g_; }
  Multiform volume() const;  // tau_g
  double volume_scale() const { return scale_; }

  Multiform star(const Multiform& x) const;
  Multiform star_inverse(const Multiform& y) const;

 private:
  HodgeContext(int dim, std::shared_ptr<const MetricExtensor> g);
  int dim_;
  std::shared_ptr<const MetricExtensor> g_;
  double scale_;  // sqrt|det g|
};

Multiform hodge_canonical(const Multiform& x);
Multiform hodge(const MetricExtensor& g, const Multiform& x);
Multiform hodge_inverse(const MetricExtensor& g, const Multiform& y);

// h(X *_g Y) - h(X) *_eta h(Y) for g = h~+ eta h; zero when the golden rule holds.
Multiform golden_rule_residual(const Distortion& d, const Multiform& x,
                               const Multiform& y, Product p);

struct HodgeRelationResidual {
  double via_extension;   // *_g = 1/sqrt|det g| g_ext o *          (canonical route)
  double via_distortion;  // *_g = [sgn det h] h_ext~+ o *_eta o h_ext-club
};

// Residuals of the two star interrelations; `signed_form` inserts sgn(det h).
HodgeRelationResidual hodge_relation_residual(const Distortion& d, const Multiform& x,
                                              bool signed_form);

}  // namespace multiform
