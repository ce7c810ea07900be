// Seeded generators for the property tests and the acceptance suite.
#ifndef LCDECOMP_TESTS_CORPUS_HPP
#define LCDECOMP_TESTS_CORPUS_HPP

#include "lcdecomp/monomial.hpp"
#include "lcdecomp/pure_tables.hpp"
#include "lcdecomp/ratfunc.hpp"
#include "lcdecomp/table.hpp"

#include <random>
#include <set>
#include <vector>

namespace corpus {

using lcdecomp::DegreeSequence;
using lcdecomp::Exponent;
using lcdecomp::LaurentPoly;
using lcdecomp::MonomialIdeal;
using lcdecomp::Orientation;
using lcdecomp::RatFunc;
using lcdecomp::Rational;
using lcdecomp::Table;

inline int uniform(std::mt19937& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

/// a/b in lowest terms; gmpxx leaves two-argument construction uncanonicalized.
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Proper nonzero monomial ideal: up to max_gens generators of total degree 1..max_deg.
inline MonomialIdeal random_ideal(std::mt19937& g, int n, int max_gens, int max_deg) {
  for (;;) {
    const int r = uniform(g, 1, max_gens);
    std::vector<Exponent> gens;
    for (int k = 0; k < r; ++k) {
      const int deg = uniform(g, 1, max_deg);
      Exponent e(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < deg; ++j) ++e[static_cast<std::size_t>(uniform(g, 0, n - 1))];
      gens.push_back(e);
    }
    MonomialIdeal I(n, gens);
    if (!I.is_zero() && !I.is_unit()) return I;
  }
}

/// Strictly increasing degrees in [lo, hi], length s + 1 with 1 <= s <= n.
inline DegreeSequence random_sequence(std::mt19937& g, int n, int lo, int hi, int min_s = 1, int max_s = -1) {
  if (max_s < 0) max_s = n;
  const int s = uniform(g, min_s, std::min(max_s, hi - lo));
  std::set<int> d;
  while (static_cast<int>(d.size()) < s + 1) d.insert(uniform(g, lo, hi));
  return DegreeSequence(std::vector<int>(d.begin(), d.end()), n);
}

inline LaurentPoly random_poly(std::mt19937& g, int lo, int hi, int terms) {
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) p.add_term(uniform(g, lo, hi), frac(uniform(g, -6, 6), uniform(g, 1, 4)));
  return p;
}

inline RatFunc random_ratfunc(std::mt19937& g, int max_poles = 3) {
  return RatFunc(random_poly(g, -4, 4, uniform(g, 0, 4)), uniform(g, 0, max_poles));
}

inline Table random_table(std::mt19937& g, int n, Orientation o) {
  Table t(n, o);
  for (int i = 0; i <= n; ++i) t[i] = random_ratfunc(g, n);
  return t;
}

}  // namespace corpus

#endif
