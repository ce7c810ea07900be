#include "corpus.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/gamma_dim3.hpp"
#include "lcdecomp/monomial_engine.hpp"

#include <catch_amalgamated.hpp>

using namespace lcdecomp;

namespace {

MonomialIdeal I3(std::vector<Exponent> g) { return MonomialIdeal(3, std::move(g)); }

const MonomialIdeal kMax = MonomialIdeal::max_power(3, 1);

LaurentPoly poly(std::initializer_list<std::pair<int, Rational>> terms) {
  LaurentPoly p;
  for (const auto& [d, c] : terms) p.add_term(d, c);
  return p;
}

bool has_code(ErrorCode c, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == c;
  }
  return false;
}

bool all_ok(const Verdict& v) {
  bool ok = v.holds;
  for (const auto& c : v.checks) ok = ok && c.ok;
  return ok;
}

/// Modules over n = 3 that satisfy the Gamma hypotheses: ideal summands, free summands and
/// quotients by a principal ideal.
GradedModule random_gamma_module(std::mt19937& g) {
  std::vector<Summand> parts;
  for (int c = corpus::uniform(g, 1, 3); c > 0; --c) {
    const int shift = corpus::uniform(g, -2, 2);
    switch (corpus::uniform(g, 0, 3)) {
      case 0:
        parts.push_back({SummandKind::Quotient, MonomialIdeal(3), shift});
        break;
      case 1: {
        Exponent f(3, 0);
        for (auto& x : f) x = corpus::uniform(g, 0, 2);
        if (total_degree(f) == 0) f[1] = 2;
        parts.push_back({SummandKind::Quotient, MonomialIdeal(3, {f}), shift});
        break;
      }
      default:
        parts.push_back({SummandKind::Ideal, corpus::random_ideal(g, 3, 4, 3), shift});
    }
  }
  return GradedModule(3, parts);
}

}  // namespace

TEST_CASE("gamma_module examples") {
  auto m = gamma_module(GradedModule::ideal(kMax));
  CHECK(hilbert_series(m.gamma) == hilbert_series(GradedModule::free(3)));
  CHECK(m.quotient_hs == RatFunc(Rational(1)));
  auto m2 = gamma_module(GradedModule::ideal(MonomialIdeal::max_power(3, 2)));
  CHECK(m2.gamma.summands()[0].ideal.is_unit());
  CHECK(m2.quotient_hs == RatFunc(poly({{0, 1}, {1, 3}})));
  GradedModule xy = GradedModule::ideal(I3({{1, 0, 0}, {0, 1, 0}}));
  auto p = gamma_module(xy);
  CHECK(p.gamma == xy);
  CHECK(p.quotient_hs.is_zero());
}

TEST_CASE("gamma_module errors") {
  CHECK(has_code(ErrorCode::DepthZero, [] { gamma_module(GradedModule::quotient(kMax)); }));
  CHECK(has_code(ErrorCode::HasDim1Submodule,
                 [] { gamma_module(GradedModule::quotient(I3({{1, 1, 0}, {1, 0, 1}}))); }));
  CHECK(has_code(ErrorCode::ZeroModule, [] { gamma_module(GradedModule(3)); }));
  CHECK(has_code(ErrorCode::InvalidParams, [] { gamma_module(GradedModule::free(2)); }));
}

TEST_CASE("torsion_split examples") {
  GradedModule a = GradedModule::free(3, 2) + GradedModule::quotient(I3({{1, 0, 0}}));
  auto [t, q] = torsion_split(a);
  CHECK(t == GradedModule::quotient(I3({{1, 0, 0}})));
  CHECK(q == GradedModule::free(3, 2));
  GradedModule b = GradedModule::ideal(kMax) + GradedModule::quotient(I3({{1, 1, 0}}));
  auto [t2, q2] = torsion_split(b);
  CHECK(t2 == GradedModule::quotient(I3({{1, 1, 0}})));
  CHECK(q2 == GradedModule::ideal(kMax));
  auto [t3, q3] = torsion_split(GradedModule::free(3));
  CHECK(t3.is_zero());
  CHECK(q3 == GradedModule::free(3));
}

TEST_CASE("thm68 examples") {
  GradedModule M = GradedModule::ideal(kMax) + GradedModule::quotient(I3({{1, 0, 0}}));
  auto [tor, quot] = torsion_split(M);
  auto v = thm68_check(local_coh_cech(M), local_coh_cech(tor), local_coh_cech(quot), RatFunc());
  CHECK(all_ok(v));

  std::mt19937 g(68);
  Table HT = corpus::random_table(g, 3, Orientation::Vstar), HQ = corpus::random_table(g, 3, Orientation::Vstar);
  const RatFunc h = RatFunc::monomial(2);
  Table err(3, Orientation::Vstar);
  err[1] = h;
  err[2] = h;
  Table HM = HT + HQ - err;
  CHECK(all_ok(thm68_check(HM, HT, HQ, h)));
  auto bad = thm68_check(HM, HT, HQ, h + RatFunc::monomial(1));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.residuals.size() == 4);
  CHECK(bad.residuals[0].is_zero());
  CHECK_FALSE(bad.residuals[1].is_zero());
  CHECK_FALSE(bad.residuals[2].is_zero());
  CHECK(bad.residuals[3].is_zero());

  CHECK(has_code(ErrorCode::ShapeMismatch, [&] { thm68_check(Table(2, Orientation::Vstar), HT, HQ, h); }));
  CHECK(has_code(ErrorCode::InfiniteLength, [&] { thm68_check(HM, HT, HQ, RatFunc(LaurentPoly::constant(1), 1)); }));
}

TEST_CASE("gdp examples") {
  GradedModule M = GradedModule::ideal(kMax) + GradedModule::quotient(I3({{1, 0, 0}}));
  for (std::size_t k = 0; k < 2; ++k) CHECK(all_ok(gdp_check(split_diagram(M, {k}))));
  GradedModule two = GradedModule::ideal(kMax) + GradedModule::ideal(MonomialIdeal::max_power(3, 2), 1);
  DiagramTables D = split_diagram(two, {0});
  CHECK(D.Gamma == local_coh_cech(GradedModule::free(3) + GradedModule::free(3, 1)));
  CHECK(all_ok(gdp_check(D)));

  DiagramTables bad = D;
  bad.F = local_coh_cech(GradedModule::quotient(I3({{1, 1, 0}, {1, 0, 1}})));
  CHECK(has_code(ErrorCode::HypothesisViolated, [&] { gdp_check(bad); }));
  DiagramTables inf = D;
  inf.hs_GammaModM = RatFunc(LaurentPoly::constant(1), 1);
  CHECK(has_code(ErrorCode::HypothesisViolated, [&] { gdp_check(inf); }));
  CHECK(has_code(ErrorCode::HypothesisViolated, [&] { gdp_check(D, false); }));

  DiagramTables wrong = D;
  wrong.M = wrong.M + wrong.M;
  CHECK_FALSE(gdp_check(wrong).holds);
}

TEST_CASE("matlis dual and prop67") {
  CHECK(matlis_dual_hs(RatFunc(poly({{0, 1}, {1, 3}}))) == RatFunc(poly({{0, 1}, {-1, 3}})));
  CHECK(matlis_dual_hs(RatFunc()).is_zero());
  CHECK(matlis_dual_hs(RatFunc::monomial(2)) == RatFunc::monomial(-2));
  CHECK(has_code(ErrorCode::InfiniteLength, [] { matlis_dual_hs(RatFunc(LaurentPoly::constant(1), 2)); }));
  CHECK(all_ok(prop67_check(RatFunc(), RatFunc())));
  CHECK(all_ok(prop67_check(RatFunc(poly({{0, 2}, {1, 1}})), RatFunc(poly({{0, 2}, {1, 1}})))));
  CHECK_FALSE(prop67_check(RatFunc::monomial(1), RatFunc()).holds);
}

TEST_CASE("Gamma properties on random modules") {
  std::mt19937 g(5005);
  int done = 0;
  for (int trial = 0; trial < 80; ++trial) {
    GradedModule M = random_gamma_module(g);
    if (M.is_zero()) continue;
    const auto cls = classify(M);
    if (cls.depth < 1 || dimension_filtration(M).nonzero[1]) continue;
    ++done;
    const auto G = gamma_module(M);
    CHECK(G.quotient_hs.is_polynomial());
    CHECK(hilbert_series(G.gamma) == hilbert_series(M) + G.quotient_hs);
    const Table HM = local_coh_cech(M), HG = local_coh_cech(G.gamma);
    CHECK(HM[0].is_zero());
    CHECK(HM[1] == G.quotient_hs);
    CHECK(HM[2] == HG[2]);
    CHECK(HM[3] == HG[3]);
    CHECK(depth_of_table(HG) >= 2);
    const auto again = gamma_module(G.gamma);
    CHECK(again.gamma == G.gamma);
    CHECK(again.quotient_hs.is_zero());

    auto [tor, quot] = torsion_split(G.gamma);
    if (!tor.is_zero()) {
      auto c = classify(tor);
      CHECK(c.isCM);
      CHECK(c.dim == 2);
    }
    auto [mtor, mquot] = torsion_split(M);
    const RatFunc h = local_coh_cech(quot)[1];
    CHECK(all_ok(thm68_check(HM, local_coh_cech(mtor), local_coh_cech(mquot), h)));

    for (std::size_t k = 0; k < M.summands().size(); ++k) CHECK(all_ok(gdp_check(split_diagram(M, {k}))));
  }
  CHECK(done > 30);
}
