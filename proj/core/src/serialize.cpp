#include "multiform/serialize.hpp"

namespace multiform {

nlohmann::json to_json(const Multiform& x) {
  AlgebraContext ctx(x.dim());
  nlohmann::json coeffs = nlohmann::json::object();
  for (Blade b = 0; b < x.size(); ++b)
    if (x[b] != 0.0) coeffs[ctx.blade_label(b)] = x[b];
  return {{"dim", x.dim()}, {"coeffs", coeffs}};
}

Multiform multiform_from_json(const nlohmann::json& j) {
  int dim = j.at("dim").get<int>();
  AlgebraContext ctx(dim);
  Multiform x(dim);
  for (auto& [label, value] : j.at("coeffs").items())
    x[ctx.blade_from_label(label)] = value.get<double>();
  return x;
}

namespace {

std::vector<int> gradeset_list(const GradeSet& g, int dim) {
  std::vector<int> out;
  for (int k = 0; k <= dim; ++k)
    if (g.contains(k)) out.push_back(k);
  return out;
}

}  // namespace

nlohmann::json to_json(const Extensor& t) {
  int n = t.dim();
  auto dom = gradeset_list(t.domain(), n);
  auto cod = gradeset_list(t.codomain(), n);
  // Row-major over the concatenated blade bases of the grade sets.
  std::size_t cols = 0, rows = 0;
  for (int p : dom) cols += grade_blades(n, p).size();
  for (int q : cod) rows += grade_blades(n, q).size();
  std::vector<double> m(rows * cols, 0.0);
  std::size_t row0 = 0;
  for (int q : cod) {
    std::size_t nq = grade_blades(n, q).size();
    std::size_t col0 = 0;
    for (int p : dom) {
      std::size_t np = grade_blades(n, p).size();
      for (std::size_t r = 0; r < nq; ++r)
        for (std::size_t c = 0; c < np; ++c)
          m[(row0 + r) * cols + (col0 + c)] = t.get(p, c, q, r);
      col0 += np;
    }
    row0 += nq;
  }
  return {{"dim", n}, {"domain", dom}, {"codomain", cod}, {"matrix", m}};
}

Extensor extensor_from_json(const nlohmann::json& j) {
  int n = j.at("dim").get<int>();
  auto dom = j.at("domain").get<std::vector<int>>();
  auto cod = j.at("codomain").get<std::vector<int>>();
  auto m = j.at("matrix").get<std::vector<double>>();
  Extensor t(n, GradeSet::of(dom, n), GradeSet::of(cod, n));
  std::size_t cols = 0, rows = 0;
  for (int p : dom) cols += grade_blades(n, p).size();
  for (int q : cod) rows += grade_blades(n, q).size();
  if (m.size() != rows * cols) throw ConfigError("extensor matrix size mismatch");
  std::size_t row0 = 0;
  for (int q : cod) {
    std::size_t nq = grade_blades(n, q).size();
    std::size_t col0 = 0;
    for (int p : dom) {
      std::size_t np = grade_blades(n, p).size();
      for (std::size_t r = 0; r < nq; ++r)
        for (std::size_t c = 0; c < np; ++c) {
          double v = m[(row0 + r) * cols + (col0 + c)];
          if (v != 0.0) t.at(p, c, q, r) = v;
        }
      col0 += np;
    }
    row0 += nq;
  }
  return t;
}

std::vector<double> matrix_from_json(const nlohmann::json& j, int& dim_out) {
  if (j.is_array() && !j.empty() && j.at(0).is_array()) {
    int n = static_cast<int>(j.size());
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(j.at(i).size()) != n)
        throw ConfigError("matrix rows must have equal length");
      for (int c = 0; c < n; ++c) m[i * n + c] = j.at(i).at(c).get<double>();
    }
    dim_out = n;
    return m;
  }
  throw ConfigError("expected a JSON array-of-arrays matrix");
}

}  // namespace multiform
