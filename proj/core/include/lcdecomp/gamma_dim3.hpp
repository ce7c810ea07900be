#ifndef LCDECOMP_GAMMA_DIM3_HPP
#define LCDECOMP_GAMMA_DIM3_HPP

#include "lcdecomp/monomial.hpp"
#include "lcdecomp/table.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lcdecomp {

struct GammaResult {
  GradedModule gamma;
  RatFunc quotient_hs;  // HS(Gamma(M)/M)
};

/// Gamma(M) = M^sat for n = 3, depth(M) >= 1 and no dimension 1 submodule.
GammaResult gamma_module(const GradedModule& M);

/// (torsion part, torsion-free part), summand by summand.
std::pair<GradedModule, GradedModule> torsion_split(const GradedModule& M);

struct Check {
  std::string name;
  bool ok;
};

struct Verdict {
  bool holds = true;
  std::vector<Check> checks;
  std::vector<RatFunc> residuals;  // per-entry residuals where the verdict is a table identity
};

/// Checks HM = HTor + HQuot - (0, h, h, 0) with h = hs_h1Q.
Verdict thm68_check(const Table& HM, const Table& HTor, const Table& HQuot, const RatFunc& hs_h1Q);

struct DiagramTables {
  Table F, Gamma, GammaModF, McapF, M, MmodMcapF;
  RatFunc hs_FmodMcapF, hs_GammaModM, hs_GammaModMF;
};

/// Verifies the conclusions of the decomposition principle for a 3x3 diagram of modules with
/// Gamma, F and Gamma/F of depth >= 2 and finite-length cokernels. The vanishing of the
/// connecting map cannot be read off tables, so the caller asserts it.
Verdict gdp_check(const DiagramTables& D, bool connecting_map_zero = true);

/// Diagram for M = sum of summands with F the sum of Gamma of the chosen summands. Gamma splits
/// summand by summand, so every row and column is split exact.
DiagramTables split_diagram(const GradedModule& M, const std::vector<std::size_t>& F_summands);

RatFunc matlis_dual_hs(const RatFunc& hs);

Verdict prop67_check(const RatFunc& hs_h1Q, const RatFunc& hs_h0L);

}  // namespace lcdecomp

#endif
