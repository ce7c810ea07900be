#ifndef LCDECOMP_CONE_DECOMP_HPP
#define LCDECOMP_CONE_DECOMP_HPP

#include "lcdecomp/monomial.hpp"
#include "lcdecomp/pure_tables.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lcdecomp {

/// k(shift) or, with polynomial = true, k[x](shift); used for dimension 0 and 1 factors.
struct PointModule {
  bool polynomial = false;
  int shift = 0;

  friend auto operator<=>(const PointModule&, const PointModule&) = default;
};

using TermGenerator = std::variant<GeneratorRef, DegreeSequence, PointModule>;

struct Term {
  Rational coeff;
  TermGenerator generator;
};

struct Decomposition {
  std::vector<Term> terms;
  Table residual;

  bool residual_zero() const { return residual.is_zero(); }
};

std::string term_generator_string(const TermGenerator& g);

Decomposition bs_greedy(const Table& beta);

struct MoveResult {
  Rational c1;
  DegreeSequence d1;
  Rational c2;
  DegreeSequence d2;
};

/// pi_d = c1 pi_{d1} + c2 pi_{d2} with d1 = d[i+1 -> a], d2 = d[i -> a]. Needs d_i < a < d_{i+1}.
MoveResult split_step(const DegreeSequence& d, int i, int a);

/// Solves c1 pi_d + c2 pi_{d'} = pi_{d''} (d' = d with d_s + 1 as last degree, d'' = d extended by d_s + 1)
/// and returns the rearranged pair (-c2/c1, d', 1/c1, d''). Needs 2 <= s <= n - 1.
MoveResult lengthen_step(const DegreeSequence& d);
/// The (c1, c2) underlying lengthen_step.
std::pair<Rational, Rational> lengthen_coefficients(const DegreeSequence& d);

/// L2 L1 of pure_betti(d), i.e. (alpha_d, alpha'_d, 0, ..., 0).
Table b_vector(const DegreeSequence& d);

/// Positive combination of property-P sequences of the same length recomposing b_d.
Decomposition reduce_to_P(const DegreeSequence& d);

/// L1(betaN) as a combination of A1, A2 and A3 generators at e = n.
Decomposition decompose_pd1(const Table& betaN);
/// E(M) for a module of projective dimension <= 1, free summands giving A4 terms.
Decomposition decompose_pd1(const GradedModule& M);

bool vertex_test(const GeneratorRef& g);

struct NonVertexCertificate {
  bool certified = false;
  int order = 0;
  Rational limit;
  std::string reason;
};

NonVertexCertificate non_vertex_certificate(const Table& T);

/// Separating functional: values on (entry, degree) positions of numerators over (1-t)^denominator_power.
struct Witness {
  int denominator_power = 0;
  std::map<std::pair<int, int>, Rational> values;

  Rational evaluate(const Table& T) const;
};

struct MembershipResult {
  bool feasible = false;
  Decomposition decomposition;
  Witness witness;
};

/// Exact LP over Q deciding whether target is a nonnegative combination of the tables.
/// Decomposition terms carry the supplied labels; zero coefficients are dropped.
MembershipResult cone_membership_tables(const Table& target, const std::vector<Table>& tables,
                                        const std::vector<TermGenerator>& labels);

MembershipResult cone_membership_lp(const Table& target, const std::vector<GeneratorRef>& generators);

}  // namespace lcdecomp

#endif
