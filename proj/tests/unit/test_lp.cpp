#include "corpus.hpp"
#include "lcdecomp/lp.hpp"

#include <catch_amalgamated.hpp>

using namespace lcdecomp;

namespace {

void check_result(const QMatrix& A, const std::vector<Rational>& b, const LPResult& r) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : r.x.size();
  if (r.feasible) {
    REQUIRE(r.x.size() == cols);
    for (const auto& v : r.x) CHECK(v >= 0);
    for (std::size_t i = 0; i < rows; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += A[i][j] * r.x[j];
      CHECK(s == b[i]);
    }
  } else {
    REQUIRE(r.y.size() == rows);
    Rational yb = 0;
    for (std::size_t i = 0; i < rows; ++i) yb += r.y[i] * b[i];
    CHECK(yb > 0);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < rows; ++i) s += r.y[i] * A[i][j];
      CHECK(s <= 0);
    }
  }
}

}  // namespace

TEST_CASE("small feasible and infeasible systems") {
  QMatrix A{{1, 1}, {1, -1}};
  std::vector<Rational> b{3, 1};
  auto r = lp_feasible(A, b);
  REQUIRE(r.feasible);
  CHECK(r.x == std::vector<Rational>{2, 1});

  auto bad = lp_feasible(QMatrix{{1, 1}}, {-1});
  CHECK_FALSE(bad.feasible);
  check_result(QMatrix{{1, 1}}, {-1}, bad);

  // x1 = 1, x1 = 2
  QMatrix C{{1}, {1}};
  auto c = lp_feasible(C, {1, 2});
  CHECK_FALSE(c.feasible);
  check_result(C, {1, 2}, c);

  // redundant rows
  QMatrix D{{1, 2, 0}, {2, 4, 0}, {0, 0, 1}};
  auto d = lp_feasible(D, {Rational(1, 2), 1, 0});
  REQUIRE(d.feasible);
  check_result(D, {Rational(1, 2), 1, 0}, d);

  auto z = lp_feasible(QMatrix{{0, 0}}, {0});
  CHECK(z.feasible);
}

TEST_CASE("random feasible systems recover a solution") {
  std::mt19937 g(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = corpus::uniform(g, 1, 6), cols = corpus::uniform(g, 1, 8);
    QMatrix A(rows, std::vector<Rational>(cols));
    for (auto& row : A)
      for (auto& v : row) v = corpus::frac(corpus::uniform(g, -4, 4), corpus::uniform(g, 1, 3));
    std::vector<Rational> x(cols);
    for (auto& v : x) v = corpus::uniform(g, 0, 2) ? corpus::frac(corpus::uniform(g, 0, 5), corpus::uniform(g, 1, 4)) : 0;
    std::vector<Rational> b(rows, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) b[i] += A[i][j] * x[j];
    auto r = lp_feasible(A, b);
    CHECK(r.feasible);
    check_result(A, b, r);
  }
}

TEST_CASE("random systems always carry a valid certificate") {
  std::mt19937 g(2718);
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = corpus::uniform(g, 1, 5), cols = corpus::uniform(g, 1, 5);
    QMatrix A(rows, std::vector<Rational>(cols));
    for (auto& row : A)
      for (auto& v : row) v = corpus::uniform(g, -3, 3);
    std::vector<Rational> b(rows);
    for (auto& v : b) v = corpus::uniform(g, -3, 3);
    auto r = lp_feasible(A, b);
    if (!r.feasible) ++infeasible;
    check_result(A, b, r);
  }
  CHECK(infeasible > 0);
}
