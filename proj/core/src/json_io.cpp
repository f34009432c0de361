#include "ybfk/json_io.hpp"

#include "ybfk/error.hpp"

#include <charconv>
#include <fstream>

namespace ybfk {

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(mpz_class(std::to_string(j.get<long long>()), 10));
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const GroupElement& g) { return to_json(g.matrix()); }

Json to_json(const LieAlgebra& a, const std::vector<Rational>& c) {
  if (c.size() != a.dim())
    throw DimensionMismatch("coefficient vector does not match the algebra");
  Json out = Json::object();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) != 0)
      out[a.basis_names()[k]] = to_json(c[k]);
  return out;
}

Json algebra_to_json(const LieAlgebra& a) {
  Json j;
  j["label"] = a.label();
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i + 1; k < a.dim(); ++k) {
      const auto& terms = a.bracket_terms(i, k);
      if (terms.empty())
        continue;
      Json t = Json::array();
      for (const auto& term : terms)
        t.push_back(Json::array({term.index, to_json(term.coeff)}));
      brackets.push_back(Json::array({i, k, std::move(t)}));
    }
  j["brackets"] = std::move(brackets);
  if (a.realized()) {
    Json mats = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k)
      mats.push_back(to_json(a.realization(k)));
    j["matrices"] = std::move(mats);
  }
  return j;
}

namespace {

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

std::size_t index_from_json(const Json& j, std::size_t dim) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError("expected a basis index, got " + j.dump());
  const auto k = j.get<std::size_t>();
  if (k >= dim)
    throw ParseError("basis index " + std::to_string(k) + " out of range");
  return k;
}

std::vector<BracketEntry> brackets_from_json(const Json& j, std::size_t dim) {
  std::vector<BracketEntry> out;
  if (!j.is_array())
    throw ParseError("\"brackets\" must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_array())
      throw ParseError("bracket entries have the form [i, j, [[k, \"p/q\"], ...]]");
    const auto i = index_from_json(e[0], dim);
    const auto k = index_from_json(e[1], dim);
    if (i >= k)
      throw ParseError("bracket entries need i < j");
    std::vector<BracketTerm> terms;
    for (const auto& t : e[2]) {
      if (!t.is_array() || t.size() != 2)
        throw ParseError("bracket terms have the form [k, \"p/q\"]");
      terms.push_back({index_from_json(t[0], dim), rational_from_json(t[1])});
    }
    out.emplace_back(i, k, std::move(terms));
  }
  return out;
}

} // namespace

AlgebraPtr algebra_from_json(const Json& j) {
  if (j.is_string())
    return builtin_algebra(j.get<std::string>());
  if (!j.is_object())
    throw ParseError("algebra must be a builtin name or an object");
  if (!j.contains("basis") || !j["basis"].is_array())
    throw ParseError("algebra object needs a \"basis\" array");
  const auto names = j["basis"].get<std::vector<std::string>>();
  if (j.contains("dim") && j["dim"].get<std::size_t>() != names.size())
    throw ParseError("\"dim\" disagrees with the basis length");
  const std::string label = j.value("label", std::string("inline"));

  if (j.contains("matrices")) {
    std::vector<QMatrix> mats;
    for (const auto& m : j["matrices"])
      mats.push_back(matrix_from_json(m));
    if (mats.size() != names.size())
      throw ParseError("one matrix per basis element is required");
    auto a = std::make_shared<const LieAlgebra>(LieAlgebra::from_matrices(label, names, std::move(mats)));
    if (j.contains("brackets")) {
      const LieAlgebra stated(label, names, brackets_from_json(j["brackets"], names.size()));
      if (!(stated == *a))
        throw ParseError("stated brackets disagree with the matrix commutators");
    }
    return a;
  }
  if (!j.contains("brackets"))
    throw ParseError("algebra object needs \"brackets\" or \"matrices\"");
  return std::make_shared<const LieAlgebra>(label, names, brackets_from_json(j["brackets"], names.size()));
}

Json bivector_to_json(const Bivector& r, bool inline_algebra) {
  Json j;
  j["algebra"] = inline_algebra ? algebra_to_json(*r.parent()) : Json(r.parent()->label());
  Json entries = Json::array();
  for (const auto& [key, c] : r.entries())
    entries.push_back(Json::array({key.first, key.second, to_json(c)}));
  j["entries"] = std::move(entries);
  return j;
}

Bivector bivector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("entries"))
    throw ParseError("r-matrix JSON needs \"algebra\" and \"entries\"");
  Bivector r(algebra_from_json(j["algebra"]));
  if (!j["entries"].is_array())
    throw ParseError("\"entries\" must be an array");
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("entries have the form [u, v, \"p/q\"]");
    const auto u = index_from_json(e[0], r.dim());
    const auto v = index_from_json(e[1], r.dim());
    if (u >= v)
      throw ParseError("entries need u < v");
    r.set(u, v, r.entry(u, v) + rational_from_json(e[2]));
  }
  return r;
}

Bivector load_bivector(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return bivector_from_json(j);
}

Bivector builtin_bivector(std::string_view name) {
  const auto sl2 = [] { return make_sl(2); };
  if (name == "sl2-jordanian") {
    const auto a = sl2();
    return Bivector::wedge(a, Vector::unit(3, 0), Vector::unit(3, 2));
  }
  if (name == "sl2-nonsolution") {
    const auto a = sl2();
    return Bivector::wedge(a, Vector::unit(3, 0), Vector::unit(3, 1));
  }
  constexpr std::string_view prefix = "jordanian-";
  if (name.starts_with(prefix)) {
    std::size_t n = 0;
    const auto rest = name.substr(prefix.size());
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && n >= 2 && n <= 9)
      return jordanian_r(n).r;
  }
  throw ParseError("unknown builtin r-matrix '" + std::string(name) + "'");
}

} // namespace ybfk
