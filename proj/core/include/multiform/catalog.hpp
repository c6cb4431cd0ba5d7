#pragma once

#include <map>
#include <optional>
#include <string>

#include "multiform/fields.hpp"

namespace multiform {

// A named chart + metric (optionally a closed-form distortion) + connection
// rule + validity predicate.  Catalog entries reproduce the worked examples;
// user geometries load from a JSON config.
struct GeometrySpec {
  std::string name;
  int dim = 4;
  std::vector<std::string> coords;
  MetricField metric;
  ExtensorField distortion;  // empty unless a closed-form h is known
  enum class ConnKind { LeviCivita, Explicit } conn_kind = ConnKind::LeviCivita;
  FrameSpec frame;  // for Explicit connections
  std::function<double(int, int, int, const PositionForm&)> frame_coeffs;  // optional
  std::function<bool(const PositionForm&)> valid;
  std::map<std::string, double> params;

  ConnectionField connection(const FDConfig& fd = {}) const;
  // Pointwise h: the closed form when present, else Theorem-2.1 factorization.
  Extensor h_at(const PositionForm& x) const;
  ExtensorField h_field() const;
};

extern const char* const kCatalogNames[7];

// name in {minkowski, schwarzschild_cartesian, schwarzschild_spherical,
// torus_flat_nonmetric, torus_teleparallel, sphere_levi_civita, sphere_nunes}
// or a path to a geometry config JSON file.
GeometrySpec catalog_load(const std::string& name,
                          const std::map<std::string, double>& params = {});

bool chart_valid(const GeometrySpec& spec, const PositionForm& x);

// Parses the geometry config JSON schema (metric entries as expression
// strings over the chart coordinates and params).
GeometrySpec load_geometry_config(const std::string& path);
GeometrySpec parse_geometry_config(const std::string& json_text);

}  // namespace multiform
