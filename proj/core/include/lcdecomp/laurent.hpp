#ifndef LCDECOMP_LAURENT_HPP
#define LCDECOMP_LAURENT_HPP

#include "lcdecomp/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace lcdecomp {

/// Sparse Laurent polynomial in t with rational coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Terms& terms);

  static LaurentPoly monomial(int degree, const Rational& coeff = 1);
  static LaurentPoly constant(const Rational& c) { return monomial(0, c); }
  /// (1-t)^k for k >= 0.
  static LaurentPoly one_minus_t_pow(int k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int degree) const;
  void add_term(int degree, const Rational& c);

  // Both require a nonzero polynomial.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  Rational eval_at_one() const;
  bool all_coeffs_nonnegative() const;

  /// t^k * p
  LaurentPoly shifted(int k) const;
  /// p(t^{-1})
  LaurentPoly inverted() const;
  /// q with p = (1-t) q, if it exists.
  std::optional<LaurentPoly> divide_one_minus_t() const;
  /// Multiplicity of the root t = 1 (p must be nonzero).
  int one_minus_t_multiplicity() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace lcdecomp

#endif
