#include "cli.hpp"

#include "lcdecomp/cone_maps.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/json_io.hpp"
#include "lcdecomp/pretty.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace lcdecomp::cli {

namespace {

const std::vector<std::string> kVerbs = {"betti",      "hilbert",     "ext",          "lc",
                                         "bs-decompose", "pd1-decompose", "sacm-decompose", "vertex-test",
                                         "certify-nonvertex", "filtration", "classify", "gamma",
                                         "thm68",      "gdp"};

struct Window {
  int lo = -10, hi = 10;
};

Window parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "--window expects lo:hi");
  Window w;
  try {
    std::size_t a = 0, b = 0;
    w.lo = std::stoi(s.substr(0, colon), &a);
    w.hi = std::stoi(s.substr(colon + 1), &b);
    if (a != colon || b != s.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidInput, "--window expects integers lo:hi");
  }
  if (w.lo > w.hi) throw Error(ErrorCode::EmptyWindow, "--window has lo > hi");
  return w;
}

bool looks_like_table(const Json& j) { return j.is_object() && j.contains("entries"); }
bool looks_like_module(const Json& j) { return j.is_object() && (j.contains("summands") || j.contains("gens")); }

struct Output {
  Json doc;
  std::string pretty;
};

Json nonvertex_refs(const Decomposition& d) {
  Json refs = Json::array();
  for (const auto& t : d.terms) {
    const auto* g = std::get_if<GeneratorRef>(&t.generator);
    if (!g || g->family != Family::A3) continue;
    refs.push_back({{"generator", to_json(*g)}, {"certificate", to_json(non_vertex_certificate(generator_table(*g)))}});
  }
  return refs;
}

Output run_verb(const std::string& verb, const Json& in, const Window& w) {
  Output o;
  o.doc["command"] = verb;
  std::ostringstream pp;
  if (verb == "betti") {
    const Table b = graded_betti(module_from_json(in));
    o.doc["betti"] = to_json(b);
    pp << pretty_betti(b);
  } else if (verb == "hilbert") {
    const RatFunc h = hilbert_series(module_from_json(in));
    o.doc["hilbert_series"] = to_json(h);
    Table t(0, Orientation::V, {h});
    pp << pretty_table(t, w.lo, w.hi);
  } else if (verb == "ext") {
    const Table e = ext_table(module_from_json(in));
    o.doc["ext"] = to_json(e);
    pp << pretty_table(e, w.lo, w.hi);
  } else if (verb == "lc") {
    const Table h = local_coh_table(module_from_json(in));
    o.doc["lc"] = to_json(h);
    pp << pretty_table(h, w.lo, w.hi);
  } else if (verb == "bs-decompose") {
    const Table b = looks_like_table(in) ? table_from_json(in) : graded_betti(module_from_json(in));
    const Decomposition d = bs_greedy(b);
    o.doc["betti"] = to_json(b);
    o.doc["decomposition"] = to_json(d);
    pp << pretty_betti(b) << pretty_decomposition(d);
  } else if (verb == "pd1-decompose") {
    Decomposition d;
    if (looks_like_table(in)) {
      const Table betaN = table_from_json(in);
      d = decompose_pd1(betaN);
      o.doc["ext"] = to_json(L1(betaN));
    } else {
      const GradedModule M = module_from_json(in);
      d = decompose_pd1(M);
      o.doc["ext"] = to_json(ext_table(M));
    }
    o.doc["decomposition"] = to_json(d);
    o.doc["nonvertex"] = nonvertex_refs(d);
    pp << pretty_decomposition(d);
    for (const auto& r : o.doc["nonvertex"])
      pp << "  " << r["generator"]["family"].get<std::string>() << " term: "
         << r["certificate"]["reason"].get<std::string>() << "\n";
  } else if (verb == "sacm-decompose") {
    FactorList f;
    int n = 0;
    if (looks_like_module(in)) {
      const GradedModule M = module_from_json(in);
      n = M.n();
      f = factor_list(dimension_filtration(M));
    } else {
      f = factors_from_json(in, &n);
    }
    const Decomposition d = decompose_sacm(f, n);
    o.doc["factors"] = to_json(f, n);
    o.doc["lc"] = to_json(sacm_assemble(f, n));
    o.doc["decomposition"] = to_json(d);
    pp << pretty_decomposition(d);
  } else if (verb == "vertex-test") {
    const GeneratorRef g = generator_from_json(in);
    o.doc["generator"] = to_json(g);
    o.doc["vertex"] = vertex_test(g);
    pp << g.to_string() << (vertex_test(g) ? " is" : " is not") << " a vertex\n";
  } else if (verb == "certify-nonvertex") {
    const Table t = in.contains("family") ? generator_table(generator_from_json(in)) : table_from_json(in);
    const auto c = non_vertex_certificate(t);
    o.doc["table"] = to_json(t);
    o.doc["certificate"] = to_json(c);
    pp << (c.certified ? "certified: " : "inconclusive: ") << c.reason << "\n";
  } else if (verb == "filtration") {
    const auto f = dimension_filtration(module_from_json(in));
    o.doc["filtration"] = to_json(f);
    for (const auto& x : f.factors) {
      pp << "factor of dimension " << x.dim;
      if (x.module) pp << ": " << x.module->to_string();
      pp << "\n" << pretty_table(x.table, w.lo, w.hi);
    }
  } else if (verb == "classify") {
    const auto c = classify(module_from_json(in));
    o.doc["classification"] = to_json(c);
    pp << "dim " << c.dim << ", depth " << c.depth << (c.isCM ? ", CM" : "") << (c.isACM ? ", aCM" : "")
       << (c.isSeqCM ? ", sequentially CM" : "") << (c.isSaCM ? ", saCM" : "") << "\n";
  } else if (verb == "gamma") {
    const auto g = gamma_module(module_from_json(in));
    o.doc["gamma"] = to_json(g.gamma);
    o.doc["quotient_hs"] = to_json(g.quotient_hs);
    pp << "Gamma = " << g.gamma.to_string() << "\nHS(Gamma/M) = " << g.quotient_hs.to_string() << "\n";
  } else if (verb == "thm68") {
    Table HM, HTor, HQuot;
    RatFunc h;
    if (looks_like_module(in)) {
      const GradedModule M = module_from_json(in);
      const GradedModule G = gamma_module(M).gamma;
      const auto [torM, quotM] = torsion_split(M);
      const GradedModule Q = torsion_split(G).second;
      HM = local_coh_cech(M);
      HTor = local_coh_cech(torM);
      HQuot = local_coh_cech(quotM);
      h = local_coh_cech(Q)[1];
    } else {
      HM = table_from_json(in.at("HM"));
      HTor = table_from_json(in.at("HTor"));
      HQuot = table_from_json(in.at("HQuot"));
      h = ratfunc_from_json(in.at("hs_h1Q"));
    }
    const Verdict v = thm68_check(HM, HTor, HQuot, h);
    o.doc["hs_h1Q"] = to_json(h);
    o.doc["verdict"] = to_json(v);
    pp << (v.holds ? "identity holds" : "identity FAILS") << "\n";
  } else if (verb == "gdp") {
    DiagramTables D;
    bool asserted = true;
    if (in.contains("module")) {
      std::vector<std::size_t> idx;
      for (const auto& x : in.at("F_summands")) idx.push_back(x.get<std::size_t>());
      D = split_diagram(module_from_json(in["module"]), idx);
    } else {
      D = diagram_from_json(in);
      if (in.contains("connecting_map_zero")) asserted = in["connecting_map_zero"].get<bool>();
    }
    const Verdict v = gdp_check(D, asserted);
    o.doc["diagram"] = to_json(D);
    o.doc["verdict"] = to_json(v);
    for (const auto& c : v.checks) pp << (c.ok ? "  ok   " : "  FAIL ") << c.name << "\n";
  }
  o.pretty = pp.str();
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args0, std::ostream& out, std::ostream& err) {
  // "--window -3:4" would otherwise be read as an unknown short option
  std::vector<std::string> args;
  for (std::size_t i = 0; i < args0.size(); ++i) {
    if (args0[i] == "--window" && i + 1 < args0.size()) {
      args.push_back("--window=" + args0[++i]);
      continue;
    }
    args.push_back(args0[i]);
  }

  CLI::App app{"Exact Betti, Ext and local cohomology tables and their cone decompositions"};
  std::string verb, input, inline_json, window = "-10:10", out_path;
  bool pretty = false;
  app.add_option("verb", verb, "command to run")->required()->check(CLI::IsMember(kVerbs));
  app.add_option("--input", input, "read the input document from FILE");
  app.add_option("--inline", inline_json, "input document given on the command line");
  app.add_option("--window", window, "series display window lo:hi");
  app.add_flag("--pretty", pretty, "also print a human-readable rendering");
  app.add_option("--out", out_path, "write the JSON result to FILE");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (input.empty() == inline_json.empty())
      throw Error(ErrorCode::InvalidInput, "give exactly one of --input FILE or --inline JSON");
    const Window w = parse_window(window);
    const Json in = parse_json_text(input.empty() ? inline_json : read_file(input));
    Output o;
    try {
      o = run_verb(verb, in, w);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("schema error: ") + e.what());
    }
    const std::string text = o.doc.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + out_path);
      f << text;
    }
    if (pretty) out << o.pretty;
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 4;
  }
}

}  // namespace lcdecomp::cli
