#include "multiform/catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "multiform/expression.hpp"
#include "multiform/metric.hpp"

namespace multiform {

namespace {

constexpr double kMargin = 1e-6;

MetricField schwarzschild_cartesian_metric(double m) {
  return MetricField(4, [m](const PositionForm& p) {
    double x = p.xi[1], y = p.xi[2], z = p.xi[3];
    double r2 = x * x + y * y + z * z;
    double r = std::sqrt(r2);
    double f = 1.0 - 2.0 * m / r;
    double c = (1.0 / f - 1.0) / r2;
    std::vector<double> g(16, 0.0);
    g[0] = f;
    double xs[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        g[(i + 1) * 4 + (j + 1)] = -c * xs[i] * xs[j];
        if (i == j) g[(i + 1) * 4 + (j + 1)] -= 1.0;
      }
    return g;
  });
}

ExtensorField schwarzschild_cartesian_h(double m) {
  // g = h~+ eta h with the symmetric square root: time sqrt(f), space
  // identity plus (1/sqrt(f) - 1) radial projector.
  return ExtensorField(4, [m](const PositionForm& p) {
    double x = p.xi[1], y = p.xi[2], z = p.xi[3];
    double r2 = x * x + y * y + z * z;
    double r = std::sqrt(r2);
    double f = 1.0 - 2.0 * m / r;
    double c = (1.0 / std::sqrt(f) - 1.0) / r2;
    std::vector<double> hm(16, 0.0);
    hm[0] = std::sqrt(f);
    double xs[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        hm[(i + 1) * 4 + (j + 1)] = c * xs[i] * xs[j];
        if (i == j) hm[(i + 1) * 4 + (j + 1)] += 1.0;
      }
    return Extensor::from_matrix11(4, hm);
  });
}

MetricField schwarzschild_spherical_metric(double m) {
  return MetricField(4, [m](const PositionForm& p) {
    double r = p.xi[1], th = p.xi[2];
    double f = 1.0 - 2.0 * m / r;
    std::vector<double> g(16, 0.0);
    g[0] = f;
    g[5] = -1.0 / f;
    g[10] = -r * r;
    g[15] = -r * r * std::sin(th) * std::sin(th);
    return g;
  });
}

ExtensorField schwarzschild_spherical_h(double m) {
  return ExtensorField(4, [m](const PositionForm& p) {
    double r = p.xi[1], th = p.xi[2];
    double f = 1.0 - 2.0 * m / r;
    std::vector<double> hm(16, 0.0);
    hm[0] = std::sqrt(f);
    hm[5] = 1.0 / std::sqrt(f);
    hm[10] = r;
    hm[15] = r * std::sin(th);
    return Extensor::from_matrix11(4, hm);
  });
}

FrameSpec orthonormal_frame_2d(std::function<double(const PositionForm&)> inv_scale2) {
  // e_1 = beta_1, e_2 = inv_scale2(x) beta_2
  FrameSpec fs;
  fs.kind = FrameSpec::Kind::Orthonormal;
  fs.frame.push_back(MultiformField(2, [](const PositionForm&) {
    return Multiform::basis1(2, 1);
  }));
  fs.frame.push_back(MultiformField(2, [s = std::move(inv_scale2)](const PositionForm& p) {
    return s(p) * Multiform::basis1(2, 2);
  }));
  return fs;
}

}  // namespace

const char* const kCatalogNames[7] = {
    "minkowski",         "schwarzschild_cartesian", "schwarzschild_spherical",
    "torus_flat_nonmetric", "torus_teleparallel",   "sphere_levi_civita",
    "sphere_nunes"};

ConnectionField GeometrySpec::connection(const FDConfig& fd) const {
  if (conn_kind == ConnKind::LeviCivita) return ConnectionField::levi_civita(metric, fd);
  return ConnectionField::from_frame(frame, frame_coeffs, fd);
}

Extensor GeometrySpec::h_at(const PositionForm& x) const {
  if (distortion) return distortion(x);
  return factorize_metric(metric.at(x)).h();
}

ExtensorField GeometrySpec::h_field() const {
  if (distortion) return distortion;
  MetricField g = metric;
  return ExtensorField(dim, [g](const PositionForm& x) {
    return factorize_metric(g.at(x)).h();
  });
}

GeometrySpec catalog_load(const std::string& name,
                          const std::map<std::string, double>& params) {
  auto param = [&params](const std::string& key, double def) {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
  };

  GeometrySpec spec;
  spec.name = name;
  spec.params = params;

  if (name == "minkowski") {
    spec.dim = 4;
    spec.coords = {"x0", "x1", "x2", "x3"};
    std::vector<double> eta(16, 0.0);
    eta[0] = 1.0;
    eta[5] = eta[10] = eta[15] = -1.0;
    spec.metric = MetricField::constant(4, eta);
    spec.distortion = ExtensorField::constant(Extensor::identity11(4));
    spec.valid = [](const PositionForm&) { return true; };
    return spec;
  }

  if (name == "schwarzschild_cartesian" || name == "schwarzschild_spherical") {
    double m = param("m", 1.0);
    if (m <= 0.0) throw ConfigError("schwarzschild mass must be positive");
    spec.dim = 4;
    spec.params["m"] = m;
    if (name == "schwarzschild_cartesian") {
      spec.coords = {"t", "x1", "x2", "x3"};
      spec.metric = schwarzschild_cartesian_metric(m);
      spec.distortion = schwarzschild_cartesian_h(m);
      spec.valid = [m](const PositionForm& p) {
        double r = std::sqrt(p.xi[1] * p.xi[1] + p.xi[2] * p.xi[2] + p.xi[3] * p.xi[3]);
        return r > kMargin && std::abs(r - 2.0 * m) > kMargin;
      };
    } else {
      spec.coords = {"t", "r", "theta", "phi"};
      spec.metric = schwarzschild_spherical_metric(m);
      spec.distortion = schwarzschild_spherical_h(m);
      spec.valid = [m](const PositionForm& p) {
        double r = p.xi[1], th = p.xi[2];
        return r > kMargin && std::abs(r - 2.0 * m) > kMargin && th > kMargin &&
               th < M_PI - kMargin;
      };
    }
    return spec;
  }

  if (name == "torus_flat_nonmetric" || name == "torus_teleparallel") {
    double R = param("R", 2.0), r = param("r", 1.0);
    if (!(R > r && r > 0.0)) throw ConfigError("torus parameters require R > r > 0");
    spec.dim = 2;
    spec.coords = {"x1", "x2"};
    spec.params["R"] = R;
    spec.params["r"] = r;
    spec.metric = MetricField(2, [R, r](const PositionForm& p) {
      double hh = R + r * std::cos(p.xi[0]);
      return std::vector<double>{r * r, 0.0, 0.0, hh * hh};
    });
    spec.conn_kind = GeometrySpec::ConnKind::Explicit;
    if (name == "torus_flat_nonmetric") {
      // coordinate frame declared parallel: gamma = 0
      spec.frame.kind = FrameSpec::Kind::Coordinate;
      for (int i = 1; i <= 2; ++i)
        spec.frame.frame.push_back(MultiformField::constant(Multiform::basis1(2, i)));
    } else {
      spec.frame = orthonormal_frame_2d([R, r](const PositionForm& p) {
        return 1.0 / (R + r * std::cos(p.xi[0]));
      });
      FrameSpec& fs = spec.frame;
      fs.frame[0] = MultiformField(2, [r](const PositionForm&) {
        return (1.0 / r) * Multiform::basis1(2, 1);
      });
    }
    spec.valid = [](const PositionForm&) { return true; };
    return spec;
  }

  if (name == "sphere_levi_civita" || name == "sphere_nunes") {
    spec.dim = 2;
    spec.coords = {"theta", "phi"};
    spec.metric = MetricField(2, [](const PositionForm& p) {
      double s = std::sin(p.xi[0]);
      return std::vector<double>{1.0, 0.0, 0.0, s * s};
    });
    if (name == "sphere_nunes") {
      spec.conn_kind = GeometrySpec::ConnKind::Explicit;
      spec.frame = orthonormal_frame_2d(
          [](const PositionForm& p) { return 1.0 / std::sin(p.xi[0]); });
    }
    spec.valid = [](const PositionForm& p) {
      return p.xi[0] > kMargin && p.xi[0] < M_PI - kMargin;
    };
    return spec;
  }

  // Anything else is treated as a config file path.
  return load_geometry_config(name);
}

bool chart_valid(const GeometrySpec& spec, const PositionForm& x) {
  if (x.dim() != spec.dim) return false;
  return spec.valid ? spec.valid(x) : true;
}

GeometrySpec parse_geometry_config(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  GeometrySpec spec;
  spec.name = j.value("name", "user");
  spec.dim = j.at("dim").get<int>();
  spec.coords = j.at("coords").get<std::vector<std::string>>();
  if (static_cast<int>(spec.coords.size()) != spec.dim)
    throw ConfigError("coords length must equal dim");
  for (auto& [key, value] : j.value("params", nlohmann::json::object()).items())
    spec.params[key] = value.get<double>();

  auto bind = [spec_coords = spec.coords,
               spec_params = spec.params](const PositionForm& p) {
    std::map<std::string, double> vars(spec_params.begin(), spec_params.end());
    for (std::size_t i = 0; i < spec_coords.size(); ++i) vars[spec_coords[i]] = p.xi[i];
    return vars;
  };

  auto mexpr = j.at("metric");
  std::vector<std::vector<Expression>> entries(spec.dim, std::vector<Expression>(spec.dim));
  for (int i = 0; i < spec.dim; ++i)
    for (int jj = 0; jj < spec.dim; ++jj)
      entries[i][jj] = Expression::parse(mexpr.at(i).at(jj).get<std::string>());
  int n = spec.dim;
  spec.metric = MetricField(n, [entries, bind, n](const PositionForm& p) {
    auto vars = bind(p);
    std::vector<double> g(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) g[i * n + jj] = entries[i][jj].eval(vars);
    return g;
  });

  auto conn = j.value("connection", nlohmann::json{{"kind", "levi_civita"}});
  std::string kind = conn.value("kind", "levi_civita");
  if (kind == "levi_civita") {
    spec.conn_kind = GeometrySpec::ConnKind::LeviCivita;
  } else if (kind == "explicit") {
    spec.conn_kind = GeometrySpec::ConnKind::Explicit;
    spec.frame.kind = FrameSpec::Kind::Custom;
    auto fr = conn.at("frame");
    for (int k = 0; k < n; ++k) {
      std::vector<Expression> comps;
      for (int i = 0; i < n; ++i)
        comps.push_back(Expression::parse(fr.at(k).at(i).get<std::string>()));
      spec.frame.frame.push_back(MultiformField(n, [comps, bind, n](const PositionForm& p) {
        auto vars = bind(p);
        Multiform v(n);
        for (int i = 0; i < n; ++i) v[Blade{1} << i] = comps[i].eval(vars);
        return v;
      }));
    }
    if (conn.contains("coeffs")) {
      std::map<std::string, Expression> coeffs;
      for (auto& [key, value] : conn.at("coeffs").items())
        coeffs[key] = Expression::parse(value.get<std::string>());
      spec.frame_coeffs = [coeffs, bind](int k, int i, int jj, const PositionForm& p) {
        std::string key = std::to_string(k) + "," + std::to_string(i) + "," +
                          std::to_string(jj);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) return 0.0;
        return it->second.eval(bind(p));
      };
    }
  } else {
    throw ConfigError("unknown connection kind: " + kind);
  }

  if (j.contains("valid")) {
    std::vector<Expression> preds;
    for (const auto& v : j.at("valid")) preds.push_back(Expression::parse(v.get<std::string>()));
    spec.valid = [preds, bind](const PositionForm& p) {
      auto vars = bind(p);
      for (const auto& e : preds)
        if (!(e.eval(vars) > kMargin)) return false;
      return true;
    };
  } else {
    spec.valid = [](const PositionForm&) { return true; };
  }
  return spec;
}

GeometrySpec load_geometry_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open geometry config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_geometry_config(ss.str());
}

}  // namespace multiform
