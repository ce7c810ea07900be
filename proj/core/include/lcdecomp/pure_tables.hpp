#ifndef LCDECOMP_PURE_TABLES_HPP
#define LCDECOMP_PURE_TABLES_HPP

#include "lcdecomp/table.hpp"

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lcdecomp {

/// d_0 < d_1 < ... < d_s with 1 <= s <= n.
class DegreeSequence {
 public:
  DegreeSequence(std::vector<int> degrees, int n);

  const std::vector<int>& degrees() const { return d_; }
  int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
  int s() const { return static_cast<int>(d_.size()) - 1; }
  int n() const { return n_; }
  int front() const { return d_.front(); }
  int back() const { return d_.back(); }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
  std::string to_string() const;

 private:
  std::vector<int> d_;
  int n_;
};

/// pi_{d,d_i}, normalized so that the first is 1.
std::vector<Rational> pi_coefficients(const DegreeSequence& d);
LaurentPoly pi_poly(const DegreeSequence& d);
/// (terms of degree <= d_1, terms of degree >= d_2)
std::pair<LaurentPoly, LaurentPoly> alpha_split(const DegreeSequence& d);
Table pure_betti(const DegreeSequence& d);
bool has_property_P(const DegreeSequence& d);

enum class Family { A1, A2, A3, A4 };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// params: (d0) for A1, (d0, d2) for A2, (d0, d2, s) for A3, (d) for A4; e is the ambient ring size.
struct GeneratorRef {
  Family family;
  std::vector<int> params;
  int e;

  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
  std::string to_string() const;
};

/// Throws InvalidParams unless g names a generator.
void validate_generator(const GeneratorRef& g);

/// The property-P sequence behind an A1/A2/A3 generator (ring size e). Not defined for A4.
DegreeSequence generator_sequence(const GeneratorRef& g);

/// Smallest and largest degree involved: the span of the degree sequence, or {d} for A4.
std::pair<int, int> generator_support(const GeneratorRef& g);

/// Ext-table of the generator over a ring of size e, zero-padded to n >= e (n = e when n < 0).
Table generator_table(const GeneratorRef& g, int n = -1);

/// Local cohomology table of the generator, padded the same way.
Table generator_lc_table(const GeneratorRef& g, int n = -1);

/// All generators of the given families whose support lies in [lo, hi], sorted.
std::vector<GeneratorRef> enumerate_generators(int lo, int hi, int e, const std::set<Family>& families);

}  // namespace lcdecomp

#endif
