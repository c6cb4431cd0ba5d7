#pragma once

#include "multiform/fields.hpp"
#include "multiform/hodge.hpp"

namespace multiform {

// A homogeneous form field of fixed degree.
struct FormField {
  int degree = 0;
  MultiformField field;

  int dim() const { return field.dim(); }
  Multiform operator()(const PositionForm& x) const { return field(x); }
};

// dF = sum_mu beta^mu ^ dF/dxi^mu by coefficientwise finite differences.
Multiform exterior_derivative(const MultiformField& f, const PositionForm& x,
                              const FDConfig& fd = {});

// delta_g A_r = (-1)^r star_g^-1 d star_g A_r; the single FD lives in the d.
Multiform codifferential(const MetricField& g, const FormField& f, const PositionForm& x,
                         const FDConfig& fd = {});

}  // namespace multiform
