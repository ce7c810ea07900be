#ifndef LCDECOMP_RATFUNC_HPP
#define LCDECOMP_RATFUNC_HPP

#include "lcdecomp/laurent.hpp"

#include <string>
#include <vector>

namespace lcdecomp {

enum class Orientation { V, Vstar };

/// numerator / (1-t)^k, always kept normalized: if k > 0 then numerator(1) != 0,
/// and zero is (0, 0). Normalized forms are unique, so == is exact equality of functions.
class RatFunc {
 public:
  RatFunc() = default;
  /// A negative k multiplies the numerator by (1-t)^{-k}.
  RatFunc(const LaurentPoly& numerator, int k = 0);
  explicit RatFunc(const Rational& c) : RatFunc(LaurentPoly::constant(c)) {}

  static RatFunc monomial(int degree, const Rational& c = 1, int k = 0) {
    return RatFunc(LaurentPoly::monomial(degree, c), k);
  }

  const LaurentPoly& numerator() const { return num_; }
  int pole_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return k_ == 0; }

  /// Numerator when written over (1-t)^K; requires K >= pole_power().
  LaurentPoly numerator_over(int K) const;

  RatFunc times_t(int k) const { return RatFunc(num_.shifted(k), k_); }
  /// Multiplies by (1-t)^m, m of either sign.
  RatFunc times_one_minus_t(int m) const { return RatFunc(num_, k_ - m); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const Rational& c);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const Rational& c) { return a *= c; }
  friend RatFunc operator*(const Rational& c, RatFunc a) { return a *= c; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return *this * Rational(-1); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.k_ == b.k_ && a.num_ == b.num_; }

  std::string to_string() const;

 private:
  LaurentPoly num_;
  int k_ = 0;
};

RatFunc ratfunc_normalize(const LaurentPoly& p, int k);

struct PoleData {
  int order;
  Rational limit;
};

/// order = k for k > 0; for polynomials, minus the multiplicity of the root 1.
/// limit = ((1-t)^order f)(1). Throws ZeroInput on f = 0.
PoleData pole_data(const RatFunc& f);

/// t^twist * f(t^{-1}), in normalized form.
RatFunc invert_variable(const RatFunc& f, int twist);

/// Series coefficients at degrees lo..hi. V expands in t, Vstar in t^{-1}.
std::vector<Rational> expand(const RatFunc& f, int lo, int hi, Orientation dir);

}  // namespace lcdecomp

#endif
