#include "lcdecomp/lp.hpp"

#include "lcdecomp/error.hpp"

namespace lcdecomp {

LPResult lp_feasible(const QMatrix& A, const std::vector<Rational>& b) {
  const std::size_t m = b.size();
  if (A.size() != m) throw Error(ErrorCode::InvalidParams, "lp_feasible: row count mismatch");
  const std::size_t N = m ? A[0].size() : 0;
  for (const auto& row : A)
    if (row.size() != N) throw Error(ErrorCode::InvalidParams, "lp_feasible: ragged matrix");

  LPResult res;
  if (m == 0) {
    res.feasible = true;
    res.x.assign(N, Rational(0));
    return res;
  }

  const std::size_t W = N + m;  // structural columns, then artificials
  std::vector<int> flip(m, 1);
  QMatrix T(m, std::vector<Rational>(W + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) flip[i] = -1;
    for (std::size_t j = 0; j < N; ++j) T[i][j] = flip[i] * A[i][j];
    T[i][N + i] = 1;
    T[i][W] = flip[i] * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = N + i;

  // reduced costs of the phase-one objective (sum of artificials)
  std::vector<Rational> rc(W + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < N; ++j) rc[j] -= T[i][j];
  for (std::size_t i = 0; i < m; ++i) rc[W] -= T[i][W];

  for (;;) {
    std::size_t enter = W;
    for (std::size_t j = 0; j < W; ++j)
      if (rc[j] < 0) {
        enter = j;
        break;
      }
    if (enter == W) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][W] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error(ErrorCode::LPInfeasible, "phase one unbounded (internal error)");
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= W; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    if (rc[enter] != 0) {
      const Rational f = rc[enter];
      for (std::size_t j = 0; j <= W; ++j)
        if (T[leave][j] != 0) rc[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  // rc[W] is minus the optimal phase-one objective
  if (rc[W] == 0) {
    res.feasible = true;
    res.x.assign(N, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < N) res.x[basis[i]] = T[i][W];
    return res;
  }
  res.y.resize(m);
  for (std::size_t i = 0; i < m; ++i) res.y[i] = (1 - rc[N + i]) * flip[i];
  return res;
}

}  // namespace lcdecomp
