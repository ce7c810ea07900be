#ifndef LCDECOMP_PRETTY_HPP
#define LCDECOMP_PRETTY_HPP

#include "lcdecomp/cone_decomp.hpp"
#include "lcdecomp/table.hpp"

#include <string>

namespace lcdecomp {

/// One line per entry: closed form, then the series coefficients on [lo, hi].
std::string pretty_table(const Table& t, int lo, int hi);

/// Conventional shifted Betti diagram: column i, row j holds beta_{i, i+j}.
/// Entries must be polynomials.
std::string pretty_betti(const Table& beta);

std::string pretty_decomposition(const Decomposition& d);

}  // namespace lcdecomp

#endif
