#ifndef LCDECOMP_LINALG_HPP
#define LCDECOMP_LINALG_HPP

#include "lcdecomp/rational.hpp"

#include <vector>

namespace lcdecomp {

using ZMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (Bareiss) elimination; the argument is consumed.
std::size_t bareiss_rank(ZMatrix m);

/// Rank over Q, by clearing row denominators and running Bareiss.
std::size_t rank(const QMatrix& m);

/// Basis of {x : m x = 0} from the reduced row echelon form.
/// `cols` is needed when m has no rows.
QMatrix nullspace(const QMatrix& m, std::size_t cols);

}  // namespace lcdecomp

#endif
