#ifndef LCDECOMP_SACM_HPP
#define LCDECOMP_SACM_HPP

#include "lcdecomp/cone_decomp.hpp"
#include "lcdecomp/monomial_engine.hpp"

#include <vector>

namespace lcdecomp {

struct Factor {
  int dim;
  Table table;  // Vstar
};

using FactorList = std::vector<Factor>;

/// True iff only entries dim-1 and dim are nonzero.
bool has_factor_shape(const Factor& f);

/// Sum of the factor tables; n is needed for the empty list.
Table sacm_assemble(const FactorList& factors, int n);

/// scalar * T with zero entries appended (or removed, when they are zero) above n_from.
Table regrade(const Table& T, int n_from, int n_to, const Rational& scalar);

/// H(k(a)) = (t^{-a}, 0, ...), H(k[x](a)) = (0, -t^{-a}/(1-t), 0, ...).
Table point_module_table(const PointModule& p, int n);

/// Vstar table of a decomposition term over n variables.
Table term_lc_table(const TermGenerator& g, int n);

/// Rounds of window widening tried for factors of dimension >= 2.
inline constexpr int kSacmWidenRounds = 8;

Decomposition decompose_sacm(const FactorList& factors, int n);

FactorList factor_list(const FiltrationResult& f);

}  // namespace lcdecomp

#endif
