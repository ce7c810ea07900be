#include "corpus.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/monomial_engine.hpp"
#include "lcdecomp/sacm.hpp"

#include <catch_amalgamated.hpp>

using namespace lcdecomp;

namespace {

MonomialIdeal I3(std::vector<Exponent> g) { return MonomialIdeal(3, std::move(g)); }

const MonomialIdeal kTwoLines = I3({{1, 1, 0}, {1, 0, 1}});

bool has_code(ErrorCode c, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == c;
  }
  return false;
}

Table recompose(const Decomposition& d, int n) {
  Table s(n, Orientation::Vstar);
  for (const auto& t : d.terms) s = s + t.coeff * term_lc_table(t.generator, n);
  return s;
}

void check_legal(const Decomposition& d, int dim) {
  for (const auto& t : d.terms) {
    CHECK(t.coeff > 0);
    if (dim <= 1) {
      REQUIRE(std::holds_alternative<PointModule>(t.generator));
      if (dim == 0) CHECK_FALSE(std::get<PointModule>(t.generator).polynomial);
    } else {
      REQUIRE(std::holds_alternative<GeneratorRef>(t.generator));
      CHECK(std::get<GeneratorRef>(t.generator).e == dim);
    }
  }
}

}  // namespace

TEST_CASE("assemble examples") {
  Table Hk = local_coh_cech(GradedModule::quotient(MonomialIdeal::max_power(3, 1)));
  CHECK(sacm_assemble({{0, Hk}}, 3) == Hk);
  CHECK(sacm_assemble({}, 3) == Table(3, Orientation::Vstar));
  Table N1 = local_coh_cech(GradedModule::quotient(I3({{0, 1, 0}, {0, 0, 1}}), -1));
  Table N2 = local_coh_cech(GradedModule::quotient(I3({{1, 0, 0}})));
  CHECK(sacm_assemble({{1, N1}, {2, N2}}, 3) == local_coh_table(GradedModule::quotient(kTwoLines)));
  CHECK(has_code(ErrorCode::BadFactorShape, [&] { sacm_assemble({{2, Hk}}, 3); }));
}

TEST_CASE("regrade") {
  Table k2 = local_coh_cech(GradedModule::quotient(MonomialIdeal::max_power(2, 1)));
  Table k3 = regrade(k2, 2, 3, 1);
  CHECK(k3 == local_coh_cech(GradedModule::quotient(MonomialIdeal::max_power(3, 1))));
  CHECK(regrade(k3, 3, 3, 2) == Rational(2) * k3);
  CHECK(regrade(k3, 3, 1, 1).n == 1);
  Table R = local_coh_cech(GradedModule::free(3));
  CHECK(has_code(ErrorCode::NonzeroDroppedEntry, [&] { regrade(R, 3, 2, 1); }));
}

TEST_CASE("point module tables match the engine") {
  for (int a : {-2, 0, 3}) {
    CHECK(point_module_table({false, a}, 3) ==
          local_coh_cech(GradedModule::quotient(MonomialIdeal::max_power(3, 1), a)));
    CHECK(point_module_table({true, a}, 3) ==
          local_coh_cech(GradedModule::quotient(I3({{0, 1, 0}, {0, 0, 1}}), a)));
  }
}

TEST_CASE("decompose_sacm examples") {
  Table Hk = point_module_table({false, 2}, 3);
  auto d = decompose_sacm({{0, Hk}}, 3);
  REQUIRE(d.terms.size() == 1);
  CHECK(std::get<PointModule>(d.terms[0].generator) == PointModule{false, 2});
  CHECK(d.residual_zero());

  auto f = dimension_filtration(GradedModule::quotient(kTwoLines));
  auto two = decompose_sacm(factor_list(f), 3);
  CHECK(two.residual_zero());
  CHECK(recompose(two, 3) == local_coh_table(GradedModule::quotient(kTwoLines)));

  GradedModule free = GradedModule::free(3, 1) + GradedModule::free(3, -2);
  auto fr = decompose_sacm(factor_list(dimension_filtration(free)), 3);
  CHECK(fr.residual_zero());
  for (const auto& t : fr.terms) CHECK(std::get<GeneratorRef>(t.generator).family == Family::A4);

  Table bad = Hk + local_coh_cech(GradedModule::quotient(I3({{1, 0, 0}})));
  CHECK(has_code(ErrorCode::NotSaCM, [&] { decompose_sacm({{2, bad}}, 3); }));
}

TEST_CASE("saCM additivity, depth and decompositions on random quotients") {
  std::mt19937 g(20250);
  int sacm = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = corpus::uniform(g, 2, 3);
    MonomialIdeal I = corpus::random_ideal(g, n, 4, 3);
    const int shift = corpus::uniform(g, -2, 2);
    GradedModule M = GradedModule::quotient(I, shift);
    if (!classify(M).isSaCM) continue;
    ++sacm;
    auto f = dimension_filtration(M);
    FactorList fl;
    const auto& K = f.summands[0].K;
    for (const auto& x : f.factors) {
      // factor tables recomputed from the factor modules, or from K_i / K_{i-1} by the Cech route
      const Table t = x.module ? local_coh_cech(*x.module)
                               : local_coh_subquotient(K[static_cast<std::size_t>(x.dim + 1)],
                                                       K[static_cast<std::size_t>(x.dim)], shift);
      CHECK(t == x.table);
      fl.push_back({x.dim, t});
      CHECK(has_factor_shape(fl.back()));
    }
    CHECK(sacm_assemble(fl, n) == local_coh_table(M));
    for (int i = 0; i <= n; ++i) {
      const MonomialIdeal& Ki = K[static_cast<std::size_t>(i + 1)];
      if (Ki.is_unit()) continue;
      CHECK(depth_of_table(local_coh_cech(GradedModule::quotient(Ki, shift))) >= i);
    }
    for (const auto& fac : fl) {
      auto d = decompose_sacm({fac}, n);
      CHECK(d.residual_zero());
      check_legal(d, fac.dim);
    }
    auto all = decompose_sacm(fl, n);
    CHECK(all.residual_zero());
    CHECK(recompose(all, n) == local_coh_table(M));
  }
  CHECK(sacm > 20);
}
