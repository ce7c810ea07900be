#include "lcdecomp/pure_tables.hpp"

#include "lcdecomp/cone_maps.hpp"
#include "lcdecomp/error.hpp"

#include <sstream>

namespace lcdecomp {

DegreeSequence::DegreeSequence(std::vector<int> degrees, int n) : d_(std::move(degrees)), n_(n) {
  if (d_.size() < 2) throw Error(ErrorCode::InvalidParams, "degree sequence needs at least two degrees");
  if (s() > n_) throw Error(ErrorCode::InvalidParams, "degree sequence longer than n + 1");
  for (std::size_t i = 1; i < d_.size(); ++i)
    if (d_[i] <= d_[i - 1]) throw Error(ErrorCode::InvalidParams, "degree sequence must be strictly increasing");
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i];
  os << ")";
  return os.str();
}

std::vector<Rational> pi_coefficients(const DegreeSequence& d) {
  const int s = d.s();
  Integer top = 1;
  for (int j = 1; j <= s; ++j) top *= d[j] - d[0];
  std::vector<Rational> out;
  for (int i = 0; i <= s; ++i) {
    Integer bottom = 1;
    for (int j = 0; j <= s; ++j)
      if (j != i) bottom *= d[j] - d[i];
    Rational q(top, bottom);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

LaurentPoly pi_poly(const DegreeSequence& d) {
  const auto c = pi_coefficients(d);
  LaurentPoly p;
  for (int i = 0; i <= d.s(); ++i) p.add_term(d[i], c[static_cast<std::size_t>(i)]);
  return p;
}

std::pair<LaurentPoly, LaurentPoly> alpha_split(const DegreeSequence& d) {
  const auto c = pi_coefficients(d);
  LaurentPoly a, b;
  for (int i = 0; i <= d.s(); ++i) (i <= 1 ? a : b).add_term(d[i], c[static_cast<std::size_t>(i)]);
  return {a, b};
}

Table pure_betti(const DegreeSequence& d) {
  const auto c = pi_coefficients(d);
  Table t(d.n(), Orientation::V);
  for (int i = 0; i <= d.s(); ++i) {
    Rational v = c[static_cast<std::size_t>(i)];
    if (i % 2) v = -v;
    t[i] = RatFunc::monomial(d[i], v);
  }
  return t;
}

bool has_property_P(const DegreeSequence& d) {
  if (d[1] - d[0] != 1) return false;
  for (int j = 2; j <= d.s(); ++j)
    if (d[j] != d[2] + j - 2) return false;
  return true;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::A3: return "A3";
    case Family::A4: return "A4";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A1") return Family::A1;
  if (name == "A2") return Family::A2;
  if (name == "A3") return Family::A3;
  if (name == "A4") return Family::A4;
  throw Error(ErrorCode::InvalidInput, "unknown generator family '" + name + "'");
}

std::string GeneratorRef::to_string() const {
  std::ostringstream os;
  os << family_name(family) << "(";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ")@e=" << e;
  return os.str();
}

void validate_generator(const GeneratorRef& g) {
  auto bad = [&](const std::string& why) { return Error(ErrorCode::InvalidParams, g.to_string() + ": " + why); };
  if (g.e < 1) throw bad("ambient e must be >= 1");
  const std::size_t want = g.family == Family::A1 || g.family == Family::A4 ? 1 : g.family == Family::A2 ? 2 : 3;
  if (g.params.size() != want) throw bad("wrong number of parameters");
  switch (g.family) {
    case Family::A1:
    case Family::A4:
      return;
    case Family::A2:
      if (g.e < 2) throw bad("A2 needs e >= 2");
      if (g.params[1] < g.params[0] + 2) throw bad("needs d2 >= d0 + 2");
      return;
    case Family::A3:
      if (g.params[1] < g.params[0] + 2) throw bad("needs d2 >= d0 + 2");
      if (g.params[2] < 2 || g.params[2] > g.e - 1) throw bad("needs 2 <= s <= e - 1");
      return;
  }
}

DegreeSequence generator_sequence(const GeneratorRef& g) {
  validate_generator(g);
  const int d0 = g.params[0];
  std::vector<int> d{d0, d0 + 1};
  int s = 1;
  if (g.family == Family::A2) s = g.e;
  if (g.family == Family::A3) s = g.params[2];
  if (g.family == Family::A4) throw Error(ErrorCode::InvalidParams, "A4 has no degree sequence");
  for (int j = 2; j <= s; ++j) d.push_back(g.params[1] + j - 2);
  return DegreeSequence(d, g.e);
}

std::pair<int, int> generator_support(const GeneratorRef& g) {
  validate_generator(g);
  if (g.family == Family::A4) return {g.params[0], g.params[0]};
  const auto d = generator_sequence(g);
  return {d.front(), d.back()};
}

static Table pad(const Table& t, int n) {
  if (n < 0 || n == t.n) return t;
  if (n < t.n) throw Error(ErrorCode::InvalidParams, "cannot pad a table to a smaller ring");
  Table out(n, t.orientation);
  for (int i = 0; i <= t.n; ++i) out[i] = t[i];
  return out;
}

Table generator_table(const GeneratorRef& g, int n) {
  validate_generator(g);
  Table t(g.e, Orientation::V);
  if (g.family == Family::A4) {
    t[0] = RatFunc::monomial(g.params[0], 1, g.e);
  } else {
    t = L1(pure_betti(generator_sequence(g)));
  }
  return pad(t, n);
}

Table generator_lc_table(const GeneratorRef& g, int n) { return pad(L0(generator_table(g)), n); }

std::vector<GeneratorRef> enumerate_generators(int lo, int hi, int e, const std::set<Family>& families) {
  if (lo > hi) throw Error(ErrorCode::EmptyWindow, "enumerate_generators: empty window");
  std::vector<GeneratorRef> out;
  if (families.count(Family::A1))
    for (int d0 = lo; d0 + 1 <= hi; ++d0) out.push_back({Family::A1, {d0}, e});
  if (families.count(Family::A2) && e >= 2)
    for (int d0 = lo; d0 <= hi; ++d0)
      for (int d2 = d0 + 2; d2 + e - 2 <= hi; ++d2) out.push_back({Family::A2, {d0, d2}, e});
  if (families.count(Family::A3))
    for (int d0 = lo; d0 <= hi; ++d0)
      for (int d2 = d0 + 2; d2 <= hi; ++d2)
        for (int s = 2; s <= e - 1 && d2 + s - 2 <= hi; ++s) out.push_back({Family::A3, {d0, d2, s}, e});
  if (families.count(Family::A4))
    for (int d = lo; d <= hi; ++d) out.push_back({Family::A4, {d}, e});
  return out;
}

}  // namespace lcdecomp
