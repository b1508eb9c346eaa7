#include "plp/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("bad value for ") + what);
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"num/den\" string or an integer");
}

Json to_json(const Poly& f) {
  Json a = Json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  QMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix polymatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  PolyMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = poly_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const Interval& J) { return J.to_string(); }

Json to_json(const FilteredPhiModule& d) {
  return Json{{"p", d.prime().value()},
              {"dim", d.dim()},
              {"phi", to_json(d.phi())},
              {"weights", d.weights()},
              {"basis", to_json(d.basis())}};
}

FilteredPhiModule module_from_json(const Json& j) {
  const Prime p(as<long>(field(j, "p"), "p"));
  QMatrix phi = qmatrix_from_json(field(j, "phi"));
  auto weights = as<std::vector<long>>(field(j, "weights"), "weights");
  if (j.contains("dim") && as<std::size_t>(j.at("dim"), "dim") != weights.size())
    throw std::invalid_argument("dim does not match the number of weights");
  if (j.contains("basis")) return FilteredPhiModule(p, std::move(phi), std::move(weights), qmatrix_from_json(j.at("basis")));
  return FilteredPhiModule(p, std::move(phi), std::move(weights));
}

FilteredPhiModule load_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open module file " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("module file " + path + " is not valid JSON: " + e.what());
  }
  return module_from_json(j);
}

Json to_json(const Refinement& r) {
  Json alphas = Json::array();
  for (const auto& a : r.alphas) alphas.push_back(to_json(a));
  return Json{{"eigenbasis", to_json(r.eigenbasis)}, {"alphas", alphas}, {"P", to_json(r.P)}};
}

Refinement refinement_from_json(const Json& j) {
  Refinement r;
  r.eigenbasis = qmatrix_from_json(field(j, "eigenbasis"));
  for (const auto& a : field(j, "alphas")) r.alphas.push_back(rational_from_json(a));
  r.P = qmatrix_from_json(field(j, "P"));
  return r;
}

Json to_json(const ZState& s) {
  Json theta = Json::array();
  for (const auto& level : s.theta) {
    Json row = Json::array();
    for (const auto& f : level) row.push_back(to_json(f));
    theta.push_back(std::move(row));
  }
  Json out{{"p", s.tower.p.value()},
           {"u", to_json(s.tower.u)},
           {"J", to_json(s.J)},
           {"N", s.N},
           {"n", s.level},
           {"mode", to_string(s.mode)},
           {"module", to_json(s.module)},
           {"Z", to_json(s.Z)},
           {"theta", theta}};
  if (s.refinement) out["refinement"] = to_json(*s.refinement);
  return out;
}

ZState zstate_from_json(const Json& j) {
  const Tower t(as<long>(field(j, "p"), "p"), rational_from_json(field(j, "u")));
  const std::string mode = as<std::string>(field(j, "mode"), "mode");
  if (mode != "standard" && mode != "negative_n") throw std::invalid_argument("unknown mode " + mode);
  std::optional<Refinement> r;
  if (j.contains("refinement")) r = refinement_from_json(j.at("refinement"));
  ZState s = start_recursion(t, module_from_json(field(j, "module")), parse_interval(as<std::string>(field(j, "J"), "J")),
                             as<long>(field(j, "N"), "N"), mode == "standard" ? ZMode::standard : ZMode::negative_n,
                             std::move(r));
  s.level = as<long>(field(j, "n"), "n");
  s.Z = polymatrix_from_json(field(j, "Z"));
  for (const auto& level : field(j, "theta")) {
    std::vector<Poly> row;
    for (const auto& f : level) row.push_back(poly_from_json(f));
    s.theta.push_back(std::move(row));
  }
  if (static_cast<long>(s.theta.size()) != s.level - s.N + 1)
    throw std::invalid_argument("theta history does not match levels N..n");
  return s;
}

Json to_json(const DivisorReport& r) {
  Json inv = Json::array(), exp = Json::array();
  for (const auto& f : r.invariants.divisors) inv.push_back(to_json(f));
  for (const auto& f : r.expected) exp.push_back(to_json(f));
  return Json{{"det_divisible", r.det_divisible}, {"invariants", inv},  {"expected", exp},
              {"matches", r.matches},             {"exact_claim", r.exact_claim}, {"ok", r.ok()}};
}

Json to_json(const SlopeTrace& t) {
  Json levels = Json::array();
  for (const auto& l : t.levels)
    levels.push_back(Json{{"n", l.n}, {"log_norm", l.log_norm.is_neg_infinite() ? Json("-inf") : to_json(l.log_norm.value())}});
  Json b{{"general_lower", to_json(t.brackets.general_lower)}, {"general_upper", to_json(t.brackets.general_upper)}};
  if (t.brackets.smith_lower) {
    b["smith_lower"] = to_json(*t.brackets.smith_lower);
    b["smith_upper"] = to_json(*t.brackets.smith_upper);
  }
  if (t.brackets.refinement_upper) b["refinement_upper"] = to_json(*t.brackets.refinement_upper);
  Json out{{"levels", levels},
           {"candidate", to_json(t.candidate)},
           {"slope_estimate", to_json(t.slope_estimate)},
           {"candidate_dominates", t.candidate_dominates},
           {"brackets", b},
           {"general_ok", t.general_ok}};
  out["estimate_above_general_lower"] = t.estimate_above_general_lower;
  if (t.smith_ok) out["smith_ok"] = *t.smith_ok;
  if (t.estimate_above_smith_lower) out["estimate_above_smith_lower"] = *t.estimate_above_smith_lower;
  if (t.refinement_ok) out["refinement_ok"] = *t.refinement_ok;
  return out;
}

Json to_json(const Report& r) {
  // rows as arrays aligned with `columns`, so column order survives
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < r.columns.size(); ++k) row.push_back(r.rows[i][k]);
    row.push_back(r.ok[i] ? "ok" : "violation");
    rows.push_back(std::move(row));
  }
  std::vector<std::string> cols = r.columns;
  cols.push_back("status");
  return Json{{"kind", r.kind}, {"columns", cols}, {"rows", rows}, {"notes", r.notes}, {"all_ok", r.all_ok()}};
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.columns) out << csv_cell(c) << ',';
  out << "status\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (const auto& cell : r.rows[i]) out << csv_cell(cell) << ',';
    out << (r.ok[i] ? "ok" : "violation") << '\n';
  }
  return out.str();
}

}  // namespace plp
