#ifndef LCDECOMP_MONOMIAL_HPP
#define LCDECOMP_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace lcdecomp {

using Exponent = std::vector<int>;

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent gcd(const Exponent& a, const Exponent& b);
int total_degree(const Exponent& a);

/// Monomial ideal in n variables with a minimal, sorted generating set.
/// The zero ideal has no generators; the unit ideal is generated by the zero vector.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n = 0) : n_(n) {}
  MonomialIdeal(int n, std::vector<Exponent> gens);

  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Exponent(static_cast<std::size_t>(n), 0)}); }
  /// The maximal ideal raised to the power p.
  static MonomialIdeal max_power(int n, int p);

  int n() const { return n_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Exponent& m) const;
  bool contains(const MonomialIdeal& J) const;

  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;
  std::string to_string() const;

 private:
  int n_;
  std::vector<Exponent> gens_;
};

enum class SummandKind { Quotient, Ideal };

/// Quotient: (R/I)(shift). Ideal: I(shift), a submodule of R(shift).
struct Summand {
  SummandKind kind;
  MonomialIdeal ideal;
  int shift = 0;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Finite direct sum of shifted monomial quotients and ideals over one ring.
class GradedModule {
 public:
  explicit GradedModule(int n = 0) : n_(n) {}
  GradedModule(int n, std::vector<Summand> summands);

  static GradedModule quotient(const MonomialIdeal& I, int shift = 0);
  static GradedModule ideal(const MonomialIdeal& J, int shift = 0);
  static GradedModule free(int n, int shift = 0);

  int n() const { return n_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  GradedModule operator+(const GradedModule& o) const;

  friend bool operator==(const GradedModule&, const GradedModule&) = default;
  std::string to_string() const;

 private:
  int n_;
  std::vector<Summand> summands_;
};

}  // namespace lcdecomp

#endif
