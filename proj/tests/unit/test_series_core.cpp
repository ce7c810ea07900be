#include "corpus.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/table.hpp"

#include <catch_amalgamated.hpp>

using namespace lcdecomp;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, Rational>> terms) {
  LaurentPoly p;
  for (const auto& [d, c] : terms) p.add_term(d, c);
  return p;
}

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-3")) == "-3/1");
  CHECK(format_rational(parse_rational("0/7")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
}

TEST_CASE("normalization divides out (1-t)") {
  RatFunc a(poly({{0, 1}, {2, -1}}), 1);
  CHECK(a.pole_power() == 0);
  CHECK(a.numerator() == poly({{0, 1}, {1, 1}}));

  RatFunc b(poly({{0, 1}, {1, -3}, {2, 3}, {3, -1}}), 3);
  CHECK(b.pole_power() == 0);
  CHECK(b.numerator() == LaurentPoly::constant(1));

  RatFunc c(LaurentPoly::monomial(4), 2);
  CHECK(c.pole_power() == 2);
  CHECK(c.numerator() == LaurentPoly::monomial(4));

  RatFunc z(LaurentPoly(), 5);
  CHECK(z.is_zero());
  CHECK(z.pole_power() == 0);
}

TEST_CASE("pole_data") {
  auto p1 = pole_data(RatFunc::monomial(7, 1, 3));
  CHECK(p1.order == 3);
  CHECK(p1.limit == 1);

  // 1 - 2t + 2t^3 - t^4 = (1-t)^3 (1+t)
  auto p2 = pole_data(RatFunc(poly({{0, 1}, {1, -2}, {3, 2}, {4, -1}}), 3));
  CHECK(p2.order == 0);
  CHECK(p2.limit == 2);

  auto p3 = pole_data(RatFunc(poly({{0, 1}, {1, Rational(1, 2)}}), 1));
  CHECK(p3.order == 1);
  CHECK(p3.limit == Rational(3, 2));

  auto p4 = pole_data(RatFunc(LaurentPoly::one_minus_t_pow(2) * LaurentPoly::monomial(0, 5)));
  CHECK(p4.order == -2);
  CHECK(p4.limit == 5);

  CHECK_THROWS_MATCHES(pole_data(RatFunc()), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::ZeroInput;
                       }));
}

TEST_CASE("invert_variable") {
  CHECK(invert_variable(RatFunc::monomial(0, 1, 1), 0) == RatFunc::monomial(1, -1, 1));
  CHECK(invert_variable(RatFunc::monomial(5), 0) == RatFunc::monomial(-5));
  CHECK(invert_variable(RatFunc::monomial(5), 2) == RatFunc::monomial(-3));
}

TEST_CASE("expand in both directions") {
  CHECK(expand(RatFunc::monomial(0, 1, 1), 0, 3, Orientation::V) == ints({1, 1, 1, 1}));
  CHECK(expand(RatFunc::monomial(1, -1, 1), -3, 0, Orientation::Vstar) == ints({1, 1, 1, 1}));
  RatFunc p(poly({{-2, 3}, {1, -1}}));
  CHECK(expand(p, -2, 1, Orientation::V) == ints({3, 0, 0, -1}));
  CHECK(expand(p, -2, 1, Orientation::Vstar) == ints({3, 0, 0, -1}));
  // 1/(1-t)^2 = sum (j+1) t^j
  CHECK(expand(RatFunc::monomial(0, 1, 2), 0, 3, Orientation::V) == ints({1, 2, 3, 4}));
  CHECK(expand(RatFunc::monomial(0, 1, 2), -4, -1, Orientation::Vstar) == ints({3, 2, 1, 0}));
  CHECK_THROWS_AS(expand(p, 2, 1, Orientation::V), Error);
}

TEST_CASE("table_combine") {
  std::mt19937 g(11);
  Table T = corpus::random_table(g, 3, Orientation::V);
  CHECK(table_combine({{1, T}, {-1, T}}).is_zero());
  Table D = table_combine({{2, T}});
  for (int i = 0; i <= 3; ++i) CHECK(D[i] == T[i] + T[i]);
  Table S(3, Orientation::Vstar), W(2, Orientation::V);
  CHECK_THROWS_MATCHES(table_combine({{1, T}, {1, S}}), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::MixedOrientation;
                       }));
  CHECK_THROWS_MATCHES(table_combine({{1, T}, {1, W}}), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::MixedDimension;
                       }));
}

TEST_CASE("series_core properties on random functions") {
  std::mt19937 g(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const RatFunc f = corpus::random_ratfunc(g), h = corpus::random_ratfunc(g);
    // idempotent normalization
    CHECK(RatFunc(f.numerator(), f.pole_power()) == f);
    CHECK(ratfunc_normalize(f.numerator_over(f.pole_power() + 2), f.pole_power() + 2) == f);
    // involution
    CHECK(invert_variable(invert_variable(f, 0), 0) == f);
    for (auto dir : {Orientation::V, Orientation::Vstar}) {
      const auto ef = expand(f, -12, 12, dir), eh = expand(h, -12, 12, dir), es = expand(f + h, -12, 12, dir);
      for (std::size_t k = 0; k < ef.size(); ++k) CHECK(es[k] == ef[k] + eh[k]);
      // the series of (1-t) f is the first difference of the series of f
      const auto ed = expand(f.times_one_minus_t(1), -11, 12, dir), ew = expand(f, -12, 12, dir);
      for (std::size_t k = 0; k < ed.size(); ++k) CHECK(ed[k] == ew[k + 1] - ew[k]);
    }
  }
}
