#ifndef LCDECOMP_LP_HPP
#define LCDECOMP_LP_HPP

#include "lcdecomp/linalg.hpp"

#include <vector>

namespace lcdecomp {

/// Outcome of deciding {x : A x = b, x >= 0} != {}.
/// feasible: x is a solution. Otherwise y satisfies y^T A <= 0 and y^T b > 0.
struct LPResult {
  bool feasible = false;
  std::vector<Rational> x;
  std::vector<Rational> y;
};

/// Exact phase-one simplex with Bland's rule. A is rows x cols, b has one entry per row.
LPResult lp_feasible(const QMatrix& A, const std::vector<Rational>& b);

}  // namespace lcdecomp

#endif
