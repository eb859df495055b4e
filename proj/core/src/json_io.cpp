#include "stasheff/json_io.hpp"

#include <regex>
#include <sstream>

#include "stasheff/error.hpp"

namespace stasheff::json_io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaViolation, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int as_small_int(const json& j, const char* what) {
  auto v = as_int(j, what);
  if (v < -1'000'000 || v > 1'000'000) schema(std::string(what) + " out of range");
  return static_cast<int>(v);
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  return j;
}

Rational as_rational(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    static const std::regex re(R"(\s*-?\d+(/\d+)?\s*)");
    const auto text = j.get<std::string>();
    if (!std::regex_match(text, re)) schema(std::string(what) + " is not a rational \"p/q\"");
    try {
      Rational r(text);
      return r;
    } catch (const std::exception&) {
      schema(std::string(what) + " is not a rational \"p/q\"");
    }
  }
  schema(std::string(what) + " must be an integer or a \"p/q\" string");
}

json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt num = boost::multiprecision::numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(num);
    }
  }
  return r.str();
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

int n_gon_of(const json& j) {
  int n = as_small_int(field(j, "n_gon"), "n_gon");
  if (n < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  return n;
}

template <class Scalar, class Reader>
BasicWeightedGraph<Scalar> read_graph(const json& j, Reader read) {
  const int n = n_gon_of(j);
  std::vector<typename BasicWeightedGraph<Scalar>::Triplet> triplets;
  for (const auto& t : as_array(field(j, "weights"), "weights")) {
    if (!t.is_array() || t.size() != 3) schema("weight entries are [i, j, w]");
    triplets.emplace_back(as_small_int(t[0], "vertex"), as_small_int(t[1], "vertex"), read(t[2]));
  }
  return BasicWeightedGraph<Scalar>::from_triplets(n, triplets);
}

}  // namespace

json document(const std::string& key, json payload) {
  json doc = json::object();
  doc["format"] = kFormatVersion;
  doc[key] = std::move(payload);
  return doc;
}

const json& payload(const json& doc, const std::string& key) {
  if (doc.is_object() && doc.contains("format")) {
    if (!doc["format"].is_number_integer() || doc["format"].get<int>() != kFormatVersion) {
      schema("unsupported format version");
    }
  }
  if (doc.is_object() && doc.contains(key)) return doc.at(key);
  return doc;
}

json to_json(const Segment& s) { return json::array({s.i, s.j}); }

Segment segment_from_json(const json& j, int n_gon) {
  if (!j.is_array() || j.size() != 2) schema("segments are [i, j]");
  return make_segment(as_small_int(j[0], "vertex"), as_small_int(j[1], "vertex"), n_gon);
}

json to_json(const Triangulation& t) {
  json out = json::array();
  for (const auto& d : t.diagonals()) out.push_back(to_json(d));
  return out;
}

Triangulation triangulation_from_json(const json& j, int n_gon) {
  std::vector<Segment> diags;
  for (const auto& s : as_array(j, "chart")) diags.push_back(segment_from_json(s, n_gon));
  return Triangulation(n_gon, std::move(diags));
}

Triangulation parse_chart(const std::string& text, int n_gon) {
  static const std::regex re(R"(\s*(\d+)\s*-\s*(\d+)\s*)");
  std::vector<Segment> diags;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, re)) schema("chart entries look like \"1-3\"");
    diags.push_back(make_segment(std::stoi(m[1]), std::stoi(m[2]), n_gon));
  }
  return Triangulation(n_gon, std::move(diags));
}

json to_json(const WeightedGraph& g) {
  json w = json::array();
  for (const auto& [i, j, v] : g.triplets()) w.push_back(json::array({i, j, v}));
  return {{"n_gon", g.n_gon()}, {"weights", w}};
}

WeightedGraph graph_from_json(const json& j) {
  return read_graph<std::int64_t>(j, [](const json& v) { return as_int(v, "weight"); });
}

json to_json(const Lamination& l) {
  json out = to_json(l.graph());
  out["domain"] = "int";
  return out;
}

json to_json(const RationalLamination& l) {
  json w = json::array();
  for (const auto& [i, j, v] : l.graph().triplets()) w.push_back(json::array({i, j, rational_json(v)}));
  return {{"n_gon", l.n_gon()}, {"weights", w}, {"domain", "rat"}};
}

Lamination lamination_from_json(const json& j) {
  if (j.is_object() && j.contains("domain") && j["domain"] != "int") schema("expected an integer lamination");
  return Lamination(graph_from_json(j));
}

RationalLamination rational_lamination_from_json(const json& j) {
  if (j.is_object() && j.contains("domain") && j["domain"] != "int" && j["domain"] != "rat") {
    schema("domain must be \"int\" or \"rat\"");
  }
  return RationalLamination(read_graph<Rational>(j, [](const json& v) { return as_rational(v, "weight"); }));
}

std::vector<Lamination> laminations_from_json(const json& j) {
  std::vector<Lamination> out;
  for (const auto& l : as_array(payload(j, "points"), "points")) out.push_back(lamination_from_json(l));
  return out;
}

json to_json(const TropicalCoords& c) {
  json values = json::array();
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    const auto& d = c.chart.diagonals()[k];
    values.push_back(json::array({d.i, d.j, c.values[k]}));
  }
  return {{"chart", to_json(c.chart)}, {"values", values}};
}

TropicalCoords coords_from_json(const json& j, int n_gon) {
  Triangulation t = triangulation_from_json(field(j, "chart"), n_gon);
  std::vector<std::int64_t> values(t.size());
  std::vector<bool> seen(t.size(), false);
  for (const auto& v : as_array(field(j, "values"), "values")) {
    if (!v.is_array() || v.size() != 3) schema("values are [i, j, a]");
    Segment s = make_segment(as_small_int(v[0], "vertex"), as_small_int(v[1], "vertex"), n_gon);
    int k = t.index_of(s);
    if (k < 0) throw Error(ErrorCode::NotADiagonal, "value on a segment outside the chart");
    values[static_cast<std::size_t>(k)] = as_int(v[2], "coordinate");
    seen[static_cast<std::size_t>(k)] = true;
  }
  for (bool b : seen)
    if (!b) schema("every chart diagonal needs a value");
  return make_coords(std::move(t), std::move(values));
}

json to_json(const StasheffSpec& s) {
  json c = json::array();
  for (const auto& [d, v] : s.values()) c.push_back(json::array({d.i, d.j, v}));
  return {{"n_gon", s.n_gon()}, {"c", c}};
}

StasheffSpec spec_from_json(const json& doc) {
  const json& j = payload(doc, "spec");
  const int n = n_gon_of(j);
  std::map<Segment, std::int64_t> c;
  for (const auto& e : as_array(field(j, "c"), "c")) {
    if (!e.is_array() || e.size() != 3) schema("bounds are [i, j, c]");
    Segment s = make_segment(as_small_int(e[0], "vertex"), as_small_int(e[1], "vertex"), n);
    if (!c.emplace(s, as_int(e[2], "bound")).second) schema("repeated diagonal in spec");
  }
  return StasheffSpec(n, c);
}

json to_json(const Expansion& e) {
  json out = json::array();
  for (const auto& [l, c] : e.coeffs) out.push_back({{"lamination", to_json(l)}, {"coeff", bigint_json(c)}});
  return out;
}

json to_json(const LaurentPolynomial& f) {
  json terms = json::array();
  // Highest term first, matching the text form.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    terms.push_back(json::array({it->first, bigint_json(it->second)}));
  }
  return {{"vars", f.vars()}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const json& j) {
  std::vector<std::string> vars;
  for (const auto& v : as_array(field(j, "vars"), "vars")) {
    if (!v.is_string()) schema("variable names are strings");
    vars.push_back(v.get<std::string>());
  }
  LaurentPolynomial f(vars);
  for (const auto& t : as_array(field(j, "terms"), "terms")) {
    if (!t.is_array() || t.size() != 2) schema("terms are [exponents, coeff]");
    Exponent e;
    for (const auto& x : as_array(t[0], "exponents")) e.push_back(as_small_int(x, "exponent"));
    if (e.size() != vars.size()) schema("exponent length differs from the variable count");
    const Rational c = as_rational(t[1], "coefficient");
    if (boost::multiprecision::denominator(c) != 1) schema("coefficients are integers");
    f.add_term(e, boost::multiprecision::numerator(c));
  }
  return f;
}

json to_json(const Seed& s) {
  json d = json::array();
  for (const auto& v : s.d) d.push_back(rational_json(v));
  json frozen = json::array();
  for (bool b : s.frozen) frozen.push_back(b);
  return {{"epsilon", s.epsilon}, {"frozen", frozen}, {"d", d}, {"labels", s.labels}};
}

Seed seed_from_json(const json& doc) {
  const json& j = payload(doc, "seed");
  std::vector<std::vector<int>> eps;
  for (const auto& row : as_array(field(j, "epsilon"), "epsilon")) {
    std::vector<int> r;
    for (const auto& v : as_array(row, "epsilon row")) r.push_back(as_small_int(v, "epsilon entry"));
    eps.push_back(std::move(r));
  }
  std::vector<bool> frozen;
  if (j.contains("frozen")) {
    for (const auto& v : as_array(j["frozen"], "frozen")) {
      if (v.is_boolean()) frozen.push_back(v.get<bool>());
      else frozen.push_back(as_int(v, "frozen flag") != 0);
    }
  }
  std::vector<Rational> d;
  if (j.contains("d")) {
    for (const auto& v : as_array(j["d"], "d")) d.push_back(as_rational(v, "multiplier"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& v : as_array(j["labels"], "labels")) {
      if (!v.is_string()) schema("labels are strings");
      labels.push_back(v.get<std::string>());
    }
  }
  return make_seed(std::move(eps), std::move(frozen), std::move(d), std::move(labels));
}

}  // namespace stasheff::json_io
