#ifndef LCDECOMP_CONE_MAPS_HPP
#define LCDECOMP_CONE_MAPS_HPP

#include "lcdecomp/table.hpp"

#include <utility>

namespace lcdecomp {

/// Local duality: entry i of the result is t^{-n} E_{n-i}(t^{-1}).
Table L0(const Table& E);
Table L0_inv(const Table& H);

/// (1-t)^{-n} (sum_{i>=2} (-1)^i b_i, sum_{i>=0} (-1)^i b_i, 0, ..., 0)
Table L1(const Table& beta);

/// (1-t)^n (f1 - f0, f0, f2, ..., fn)
Table L2(const Table& f);
Table L2_inv(const Table& g);

/// (beta_0(M), beta_1(M)) = (beta_1(N)(t^{-1}), beta_0(N)(t^{-1})).
std::pair<RatFunc, RatFunc> transpose_betti(const Table& betaN);

}  // namespace lcdecomp

#endif
