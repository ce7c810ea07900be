#include "corpus.hpp"
#include "lcdecomp/cone_maps.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/linalg.hpp"
#include "lcdecomp/pure_tables.hpp"

#include <catch_amalgamated.hpp>

using namespace lcdecomp;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, Rational>> terms) {
  LaurentPoly p;
  for (const auto& [d, c] : terms) p.add_term(d, c);
  return p;
}

DegreeSequence seq(std::vector<int> d, int n = 3) { return DegreeSequence(std::move(d), n); }

bool has_code(ErrorCode c, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == c;
  }
  return false;
}

}  // namespace

TEST_CASE("pi_poly on the printed sequences") {
  CHECK(pi_poly(seq({0, 1, 2, 3})) == poly({{0, 1}, {1, -3}, {2, 3}, {3, -1}}));
  CHECK(pi_poly(seq({0, 1, 3, 4})) == poly({{0, 1}, {1, -2}, {3, 2}, {4, -1}}));
  CHECK(pi_poly(seq({0, 2})) == poly({{0, 1}, {2, -1}}));
}

TEST_CASE("alpha_split") {
  auto [a, b] = alpha_split(seq({0, 1, 3, 4}));
  CHECK(a == poly({{0, 1}, {1, -2}}));
  CHECK(b == poly({{3, 2}, {4, -1}}));
  auto [a2, b2] = alpha_split(seq({5, 6}));
  CHECK(a2 == poly({{5, 1}, {6, -1}}));
  CHECK(b2.is_zero());
  auto [a3, b3] = alpha_split(seq({0, 1, 3}));
  CHECK(a3 == poly({{0, 1}, {1, Rational(-3, 2)}}));
  CHECK(b3 == poly({{3, Rational(1, 2)}}));
}

TEST_CASE("pure_betti") {
  Table k = pure_betti(seq({0, 1, 2, 3}));
  CHECK(k[0] == RatFunc::monomial(0));
  CHECK(k[1] == RatFunc::monomial(1, 3));
  CHECK(k[2] == RatFunc::monomial(2, 3));
  CHECK(k[3] == RatFunc::monomial(3, 1));
  Table a = pure_betti(seq({0, 1}));
  CHECK(a[1] == RatFunc::monomial(1));
  CHECK(a[2].is_zero());
  Table b = pure_betti(seq({0, 1, 3}));
  CHECK(b[1] == RatFunc::monomial(1, Rational(3, 2)));
  CHECK(b[2] == RatFunc::monomial(3, Rational(1, 2)));
  CHECK(b[3].is_zero());
}

TEST_CASE("property P") {
  CHECK(has_property_P(seq({0, 1, 3, 4, 5}, 4)));
  CHECK_FALSE(has_property_P(seq({0, 2, 3})));
  CHECK_FALSE(has_property_P(seq({0, 1, 3, 5})));
  CHECK(has_property_P(seq({4, 5})));
}

TEST_CASE("degree sequence validation") {
  CHECK(has_code(ErrorCode::InvalidParams, [] { seq({0}); }));
  CHECK(has_code(ErrorCode::InvalidParams, [] { seq({0, 0}); }));
  CHECK(has_code(ErrorCode::InvalidParams, [] { seq({0, 1, 2, 3, 4}); }));
}

TEST_CASE("generator tables") {
  Table a1 = generator_table({Family::A1, {0}, 3});
  CHECK(a1[0].is_zero());
  CHECK(a1[1] == RatFunc(LaurentPoly::one_minus_t_pow(1), 3));
  CHECK(a1[2].is_zero());
  Table a4 = generator_table({Family::A4, {2}, 3});
  CHECK(a4[0] == RatFunc::monomial(2, 1, 3));
  CHECK(a4[1].is_zero());
  Table a2 = generator_table({Family::A2, {0, 2}, 3});
  CHECK(a2[0] == RatFunc(poly({{2, 3}, {3, -1}}), 3));
  CHECK(a2[1] == RatFunc::monomial(0));
  // padded to a bigger ring: same entries, more zeros
  Table p = generator_table({Family::A2, {0, 2}, 3}, 5);
  CHECK(p.n == 5);
  CHECK(p[0] == a2[0]);
  CHECK(p[4].is_zero());
  CHECK(has_code(ErrorCode::InvalidParams, [] { generator_table({Family::A2, {0, 1}, 3}); }));
  CHECK(has_code(ErrorCode::InvalidParams, [] { generator_table({Family::A3, {0, 2, 3}, 3}); }));
  CHECK(has_code(ErrorCode::InvalidParams, [] { generator_table({Family::A3, {0, 2, 1}, 3}); }));
  CHECK(has_code(ErrorCode::InvalidParams, [] { generator_table({Family::A1, {0, 2}, 3}); }));
}

TEST_CASE("enumerate_generators") {
  auto a1 = enumerate_generators(0, 1, 3, {Family::A1});
  REQUIRE(a1.size() == 1);
  CHECK(a1[0] == GeneratorRef{Family::A1, {0}, 3});
  // the support of A2(d0, d2) at e = 3 is d0 .. d2 + 1
  auto a2 = enumerate_generators(0, 4, 3, {Family::A2});
  CHECK(a2 == std::vector<GeneratorRef>{{Family::A2, {0, 2}, 3}, {Family::A2, {0, 3}, 3}, {Family::A2, {1, 3}, 3}});
  auto a4 = enumerate_generators(0, 3, 3, {Family::A4});
  CHECK(a4.size() == 4);
  CHECK(a4.front().params == std::vector<int>{0});
  CHECK(a4.back().params == std::vector<int>{3});
  CHECK(enumerate_generators(0, 5, 2, {Family::A3}).empty());
  CHECK(has_code(ErrorCode::EmptyWindow, [] { enumerate_generators(2, 1, 3, {Family::A1}); }));
  auto all = enumerate_generators(-1, 3, 3, {Family::A1, Family::A2, Family::A3, Family::A4});
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& g : all) {
    auto [lo, hi] = generator_support(g);
    CHECK(lo >= -1);
    CHECK(hi <= 3);
  }
}

TEST_CASE("pi properties on random degree sequences") {
  std::mt19937 g(4817);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = corpus::uniform(g, 1, 6);
    const DegreeSequence d = corpus::random_sequence(g, n, -5, 10);
    const int s = d.s();
    const LaurentPoly p = pi_poly(d);
    CHECK(p.one_minus_t_multiplicity() == s);
    const auto c = pi_coefficients(d);
    CHECK(c[0] == 1);
    for (int i = 0; i <= s; ++i) CHECK(sign(c[static_cast<std::size_t>(i)]) == (i % 2 ? -1 : 1));
    const auto pd = pole_data(RatFunc(p, s));
    CHECK(pd.order == 0);
    CHECK(pd.limit > 0);
    auto [a, b] = alpha_split(d);
    CHECK(a + b == p);
    const Table beta = pure_betti(d);
    for (int i = 0; i <= n; ++i) {
      if (i <= s) {
        CHECK(beta[i].numerator().size() == 1);
        CHECK(beta[i].numerator().all_coeffs_nonnegative());
      } else {
        CHECK(beta[i].is_zero());
      }
    }
    // polynomials supported on d and divisible by (1-t)^{s1} form a space of dimension s - s1 + 1;
    // divisibility is the vanishing of the moments sum c_i (d_i - d_0)^k for k < s1
    for (int s1 = 0; s1 <= s; ++s1) {
      QMatrix m;
      for (int k = 0; k < s1; ++k) {
        std::vector<Rational> row;
        for (int i = 0; i <= s; ++i) {
          Integer pw;
          mpz_pow_ui(pw.get_mpz_t(), Integer(d[i] - d[0]).get_mpz_t(), static_cast<unsigned long>(k));
          row.push_back(Rational(pw));
        }
        m.push_back(row);
      }
      const auto basis = nullspace(m, static_cast<std::size_t>(s + 1));
      CHECK(static_cast<int>(basis.size()) == s - s1 + 1);
      for (const auto& v : basis) {
        LaurentPoly q;
        for (int i = 0; i <= s; ++i) q.add_term(d[i], v[static_cast<std::size_t>(i)]);
        CHECK(q.one_minus_t_multiplicity() >= s1);
      }
    }
  }
}
