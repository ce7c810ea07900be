#ifndef LCDECOMP_MONOMIAL_ENGINE_HPP
#define LCDECOMP_MONOMIAL_ENGINE_HPP

#include "lcdecomp/monomial.hpp"
#include "lcdecomp/table.hpp"

#include <optional>
#include <vector>

namespace lcdecomp {

MonomialIdeal ideal_colon(const MonomialIdeal& I, const Exponent& g);
/// (I : J); (I : 0) is the unit ideal.
MonomialIdeal ideal_colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_saturate(const MonomialIdeal& I);
MonomialIdeal ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);

struct IrreducibleComponent {
  MonomialIdeal component;
  std::vector<int> prime;  // 0-based variable indices generating the radical

  int dim(int n) const { return n - static_cast<int>(prime.size()); }
};

/// Irredundant irreducible decomposition. Throws ZeroOrUnitIdeal.
std::vector<IrreducibleComponent> primary_decomposition(const MonomialIdeal& I);

/// Numerator K with HS(R/I) = K / (1-t)^n.
LaurentPoly hilbert_numerator(const MonomialIdeal& I);
RatFunc hilbert_series(const GradedModule& M);

/// Graded Betti numbers in series form (unshifted).
Table graded_betti(const GradedModule& M);

/// Generator counts above this raise ResourceCap in ext_table.
inline constexpr std::size_t kExtGeneratorCap = 12;

Table ext_table(const GradedModule& M);
/// L0(ext_table(M)).
Table local_coh_table(const GradedModule& M);

/// Local cohomology of (J/K)(shift) for monomial ideals K contained in J, via the Cech complex.
Table local_coh_subquotient(const MonomialIdeal& J, const MonomialIdeal& K, int shift);
/// Summand-wise Cech computation; independent of ext_table.
Table local_coh_cech(const GradedModule& M);

/// Index of the first nonzero entry; n + 1 for the zero table.
int depth_of_table(const Table& H);

struct FiltrationSummand {
  // K[i] for i = -1..n stored at index i + 1; M_i = K_i / K_{-1}. Ideal summands use K_i = 0 for i < n.
  std::vector<MonomialIdeal> K;
};

struct FiltrationFactor {
  int dim;
  Table table;                        // local cohomology of N_dim
  std::optional<GradedModule> module;  // when every summand piece is cyclic or an ideal
};

struct FiltrationResult {
  int n;
  std::vector<FiltrationSummand> summands;
  std::vector<Table> submodule_tables;  // H(M_i), i = 0..n
  std::vector<FiltrationFactor> factors;  // nonzero N_i only, ascending i
  std::vector<bool> nonzero;             // nonzero[i] iff M_i != 0
};

FiltrationResult dimension_filtration(const GradedModule& M);

struct Classification {
  int dim = 0;
  int depth = 0;
  bool isCM = false;
  bool isACM = false;
  bool isSaCM = false;
  bool isSeqCM = false;
};

Classification classify(const GradedModule& M);

int projective_dimension(const GradedModule& M);

}  // namespace lcdecomp

#endif
