#pragma once

#include <functional>
#include <vector>

#include "multiform/extensor.hpp"

namespace multiform {

// Finite-difference settings.  `step` drives first derivatives of closed-form
// data; `step2` drives derivatives of quantities that are themselves
// FD-computed (noisier), so it defaults to sqrt(step).
struct FDConfig {
  double step = 0.0;   // 0 -> cbrt(machine eps)
  double step2 = 0.0;  // 0 -> sqrt(resolved step)
  enum class Scheme { Central, Richardson } scheme = Scheme::Richardson;

  double resolved_step(double scale = 0.0) const;
  double resolved_step2(double scale = 0.0) const;
  FDConfig outer() const;  // config whose `step` is this step2 (for nesting)
};

// Central/Richardson derivative of a multiform-valued curve at l0.
Multiform real_derivative(const std::function<Multiform(double)>& x, double l0,
                          const FDConfig& fd = {});
double real_derivative_scalar(const std::function<double(double)>& f, double l0,
                              const FDConfig& fd = {});

// A multiform function of a multiform variable, restricted to given grades.
struct MultiformFunction {
  GradeSet domain;
  std::function<Multiform(const Multiform&)> eval;
};

// A . d_X F = d/dl F(X + l <A>_X) |_0, with <A>_X the domain-grade projection.
Multiform directional_derivative(const MultiformFunction& f, const Multiform& x,
                                 const Multiform& a, const FDConfig& fd = {});

// d_X * F = sum_J (1/nu!) eps^J * (eps_J . d_X F); Clifford for the plain
// derivative, else the requested product.
Multiform derivative_star(const MultiformFunction& f, const Multiform& x, Product star,
                          const FDConfig& fd = {});
Multiform derivative(const MultiformFunction& f, const Multiform& x,
                     const FDConfig& fd = {});

// The t-distortion t_ext(d_X) * F.
Multiform t_distorted_derivative(const MultiformFunction& f, const Multiform& x,
                                 const Extensor& t, Product star, const FDConfig& fd = {});

// A multiform functional of a (p,q)-extensor variable, induced by a generator
// function of k q-forms anchored at the p-forms X^1..X^k:
//   F[t] = generator(t(X^1), ..., t(X^k)).
struct ExtensorFunctional {
  std::vector<Multiform> anchors;
  int codomain_grade = 1;  // grade of t(X^i), the generator slot grade
  std::function<Multiform(const std::vector<Multiform>&)> generator;

  Multiform eval(const Extensor& t) const;
};

// sum_i (A . X^i) d_{t(X^i)} F
Multiform functional_directional(const ExtensorFunctional& f, const Extensor& t,
                                 const Multiform& a, const FDConfig& fd = {});

// d_t * F[t] = sum_i X^i * d_{t(X^i)} F
Multiform functional_derivative(const ExtensorFunctional& f, const Extensor& t,
                                Product star, const FDConfig& fd = {});

// Functional variation d/dl F[t + l w] |_0 of a scalar functional.
double variational(const std::function<double(const Extensor&)>& f, const Extensor& t,
                   const Extensor& w, const FDConfig& fd = {});

}  // namespace multiform
