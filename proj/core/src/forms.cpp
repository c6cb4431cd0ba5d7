#include "multiform/forms.hpp"

namespace multiform {

Multiform exterior_derivative(const MultiformField& f, const PositionForm& x,
                              const FDConfig& fd) {
  int n = f.dim();
  Multiform out(n);
  for (int mu = 0; mu < n; ++mu)
    out += wedge(Multiform::basis1(n, mu + 1), field_coord_derivative(f, mu, x, fd));
  return out;
}

Multiform codifferential(const MetricField& g, const FormField& f, const PositionForm& x,
                         const FDConfig& fd) {
  int n = g.dim();
  MultiformField starred(n, [&g, &f](const PositionForm& y) {
    return hodge(g.at(y), f(y));
  });
  Multiform d = exterior_derivative(starred, x, fd);
  Multiform out = hodge_inverse(g.at(x), d);
  return (f.degree & 1) ? -out : out;
}

}  // namespace multiform
