#include "lcdecomp/json_io.hpp"

#include "lcdecomp/error.hpp"

namespace lcdecomp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Orientation orientation_from(const Json& j) {
  if (!j.is_string()) bad("orientation must be a string");
  const auto s = j.get<std::string>();
  if (s == "V") return Orientation::V;
  if (s == "Vstar") return Orientation::Vstar;
  bad("orientation must be \"V\" or \"Vstar\"");
}

}  // namespace

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const RatFunc& f) {
  Json num = Json::object();
  for (const auto& [d, c] : f.numerator().terms()) num[std::to_string(d)] = format_rational(c);
  return {{"num", num}, {"poles", f.pole_power()}};
}

Json to_json(const Table& t) {
  Json e = Json::array();
  for (const auto& x : t.entries) e.push_back(to_json(x));
  return {{"n", t.n}, {"orientation", orientation_name(t.orientation)}, {"entries", e}};
}

Json to_json(const DegreeSequence& d) { return {{"degrees", d.degrees()}, {"n", d.n()}}; }

Json to_json(const GeneratorRef& g) { return {{"family", family_name(g.family)}, {"params", g.params}, {"e", g.e}}; }

Json to_json(const PointModule& p) { return {{"point", p.polynomial ? "k[x]" : "k"}, {"shift", p.shift}}; }

Json to_json(const TermGenerator& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

Json to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back({{"coeff", format_rational(t.coeff)}, {"generator", to_json(t.generator)}});
  return {{"terms", terms}, {"residual_zero", d.residual_zero()}};
}

Json to_json(const Witness& w) {
  Json v = Json::object();
  for (const auto& [pos, y] : w.values) v[std::to_string(pos.first)][std::to_string(pos.second)] = format_rational(y);
  return {{"denominator_power", w.denominator_power}, {"values", v}};
}

Json to_json(const NonVertexCertificate& c) {
  Json j{{"certified", c.certified}, {"reason", c.reason}};
  if (!c.reason.empty() && c.reason != "entry 1 is zero") {
    j["pole_order"] = c.order;
    j["limit"] = format_rational(c.limit);
  }
  return j;
}

Json to_json(const MonomialIdeal& I) { return {{"n", I.n()}, {"gens", I.gens()}}; }

Json to_json(const GradedModule& M) {
  Json s = Json::array();
  for (const auto& x : M.summands())
    s.push_back({{"kind", x.kind == SummandKind::Quotient ? "quotient" : "ideal"},
                 {"ideal", to_json(x.ideal)},
                 {"shift", x.shift}});
  return {{"n", M.n()}, {"summands", s}};
}

Json to_json(const Factor& f) {
  Json j = to_json(f.table);
  j["dim"] = f.dim;
  return j;
}

Json to_json(const FactorList& f, int n) {
  Json a = Json::array();
  for (const auto& x : f) a.push_back(to_json(x));
  return {{"n", n}, {"factors", a}};
}

Json to_json(const FiltrationResult& f) {
  Json levels = Json::array();
  for (int i = 0; i <= f.n; ++i) {
    Json ks = Json::array();
    for (const auto& s : f.summands) ks.push_back(to_json(s.K[static_cast<std::size_t>(i + 1)]));
    levels.push_back({{"i", i},
                      {"nonzero", static_cast<bool>(f.nonzero[static_cast<std::size_t>(i)])},
                      {"K", ks},
                      {"table", to_json(f.submodule_tables[static_cast<std::size_t>(i)])}});
  }
  Json factors = Json::array();
  for (const auto& x : f.factors) {
    Json j{{"dim", x.dim}, {"table", to_json(x.table)}};
    j["module"] = x.module ? to_json(*x.module) : Json(nullptr);
    factors.push_back(j);
  }
  return {{"n", f.n}, {"levels", levels}, {"factors", factors}};
}

Json to_json(const Classification& c) {
  return {{"dim", c.dim},        {"depth", c.depth},     {"isCM", c.isCM},
          {"isACM", c.isACM},    {"isSaCM", c.isSaCM},   {"isSeqCM", c.isSeqCM}};
}

Json to_json(const Verdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
  Json res = Json::array();
  for (const auto& r : v.residuals) res.push_back(to_json(r));
  return {{"holds", v.holds}, {"checks", checks}, {"residuals", res}};
}

Json to_json(const DiagramTables& d) {
  return {{"F", to_json(d.F)},
          {"Gamma", to_json(d.Gamma)},
          {"GammaModF", to_json(d.GammaModF)},
          {"McapF", to_json(d.McapF)},
          {"M", to_json(d.M)},
          {"MmodMcapF", to_json(d.MmodMcapF)},
          {"hs_FmodMcapF", to_json(d.hs_FmodMcapF)},
          {"hs_GammaModM", to_json(d.hs_GammaModM)},
          {"hs_GammaModMF", to_json(d.hs_GammaModMF)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a \"p/q\" string or an integer");
}

RatFunc ratfunc_from_json(const Json& j) {
  const Json& num = field(j, "num");
  if (!num.is_object()) bad("'num' must be an object mapping degrees to rationals");
  LaurentPoly p;
  for (auto it = num.begin(); it != num.end(); ++it) {
    int deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoi(it.key(), &used);
      if (used != it.key().size()) bad("bad degree key '" + it.key() + "'");
    } catch (const std::logic_error&) {
      bad("bad degree key '" + it.key() + "'");
    }
    p.add_term(deg, rational_from_json(it.value()));
  }
  const int k = j.contains("poles") ? as_int(j["poles"], "poles") : 0;
  if (k < 0) bad("'poles' must be nonnegative");
  return RatFunc(p, k);
}

Table table_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) bad("n must be nonnegative");
  const Orientation o = j.contains("orientation") ? orientation_from(j["orientation"]) : Orientation::V;
  const Json& e = field(j, "entries");
  if (!e.is_array()) bad("'entries' must be an array");
  std::vector<RatFunc> entries;
  for (const auto& x : e) entries.push_back(ratfunc_from_json(x));
  if (entries.size() != static_cast<std::size_t>(n + 1)) bad("table needs exactly n+1 entries");
  return Table(n, o, entries);
}

DegreeSequence degree_sequence_from_json(const Json& j, int n) {
  const Json& d = j.is_array() ? j : field(j, "degrees");
  if (!d.is_array()) bad("degrees must be an array");
  std::vector<int> v;
  for (const auto& x : d) v.push_back(as_int(x, "degree"));
  if (j.is_object() && j.contains("n")) n = as_int(j["n"], "n");
  return DegreeSequence(v, n);
}

GeneratorRef generator_from_json(const Json& j) {
  const Json& f = field(j, "family");
  if (!f.is_string()) bad("family must be a string");
  GeneratorRef g{parse_family(f.get<std::string>()), {}, as_int(field(j, "e"), "e")};
  const Json& p = field(j, "params");
  if (!p.is_array()) bad("params must be an array");
  for (const auto& x : p) g.params.push_back(as_int(x, "param"));
  validate_generator(g);
  return g;
}

MonomialIdeal ideal_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& g = field(j, "gens");
  if (!g.is_array()) bad("'gens' must be an array");
  std::vector<Exponent> gens;
  for (const auto& e : g) {
    if (!e.is_array()) bad("each generator must be an exponent array");
    Exponent x;
    for (const auto& v : e) x.push_back(as_int(v, "exponent"));
    gens.push_back(x);
  }
  return MonomialIdeal(n, gens);
}

GradedModule module_from_json(const Json& j) {
  if (!j.is_object()) bad("module must be an object");
  if (!j.contains("summands")) return GradedModule::quotient(ideal_from_json(j));
  const Json& s = j["summands"];
  if (!s.is_array()) bad("'summands' must be an array");
  std::vector<Summand> out;
  int n = j.contains("n") ? as_int(j["n"], "n") : -1;
  for (const auto& x : s) {
    const Json& k = field(x, "kind");
    if (!k.is_string()) bad("kind must be a string");
    const auto kind = k.get<std::string>();
    if (kind != "quotient" && kind != "ideal") bad("kind must be \"quotient\" or \"ideal\"");
    MonomialIdeal I = ideal_from_json(field(x, "ideal"));
    if (n < 0) n = I.n();
    const int shift = x.contains("shift") ? as_int(x["shift"], "shift") : 0;
    out.push_back({kind == "quotient" ? SummandKind::Quotient : SummandKind::Ideal, I, shift});
  }
  if (n < 1) bad("cannot determine n for an empty module; supply \"n\"");
  return GradedModule(n, out);
}

FactorList factors_from_json(const Json& j, int* n_out) {
  const Json& a = j.is_array() ? j : field(j, "factors");
  if (!a.is_array()) bad("'factors' must be an array");
  int n = j.is_object() && j.contains("n") ? as_int(j["n"], "n") : -1;
  FactorList out;
  for (const auto& x : a) {
    Table t = table_from_json(x);
    if (!x.contains("orientation")) t.orientation = Orientation::Vstar;
    if (n < 0) n = t.n;
    out.push_back({as_int(field(x, "dim"), "dim"), t});
  }
  if (n < 0) bad("cannot determine n for an empty factor list; supply \"n\"");
  if (n_out) *n_out = n;
  return out;
}

DiagramTables diagram_from_json(const Json& j) {
  auto T = [&](const char* k) { return table_from_json(field(j, k)); };
  auto H = [&](const char* k) { return ratfunc_from_json(field(j, k)); };
  return {T("F"), T("Gamma"), T("GammaModF"), T("McapF"), T("M"), T("MmodMcapF"),
          H("hs_FmodMcapF"), H("hs_GammaModM"), H("hs_GammaModMF")};
}

Decomposition decomposition_from_json(const Json& j, int n, Orientation o) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  Decomposition d;
  d.residual = Table(n, o);
  for (const auto& t : terms) {
    const Rational c = rational_from_json(field(t, "coeff"));
    const Json& g = field(t, "generator");
    if (g.contains("family"))
      d.terms.push_back({c, generator_from_json(g)});
    else if (g.contains("degrees"))
      d.terms.push_back({c, degree_sequence_from_json(g, n)});
    else if (g.contains("point")) {
      const Json& p = field(g, "point");
      if (!p.is_string() || (p != "k" && p != "k[x]")) bad("point must be \"k\" or \"k[x]\"");
      d.terms.push_back({c, PointModule{p == "k[x]", as_int(field(g, "shift"), "shift")}});
    } else {
      bad("unrecognized generator");
    }
  }
  return d;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lcdecomp
