#pragma once

#include <stdexcept>
#include <string>

namespace multiform {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct GradeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised by expand() when the supplied bases fail the reciprocity test.
struct InvalidPairError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularExtensorError : std::runtime_error {
  explicit SingularExtensorError(double d)
      : std::runtime_error("extensor is singular, det = " + std::to_string(d)),
        det(d) {}
  double det;
};

struct DegenerateMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GaugeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested outside a chart's validity region.
struct ChartDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace multiform
