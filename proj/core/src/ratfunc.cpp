#include "lcdecomp/ratfunc.hpp"

#include "lcdecomp/error.hpp"

#include <sstream>

namespace lcdecomp {

RatFunc ratfunc_normalize(const LaurentPoly& p, int k) { return RatFunc(p, k); }

RatFunc::RatFunc(const LaurentPoly& numerator, int k) : num_(numerator), k_(k) {
  if (k_ < 0) {
    num_ = num_ * LaurentPoly::one_minus_t_pow(-k_);
    k_ = 0;
  }
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto q = num_.divide_one_minus_t();
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

LaurentPoly RatFunc::numerator_over(int K) const {
  if (K < k_) throw Error(ErrorCode::InvalidParams, "numerator_over: exponent below pole order");
  if (K == k_) return num_;
  return num_ * LaurentPoly::one_minus_t_pow(K - k_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int K = std::max(k_, o.k_);
  *this = RatFunc(numerator_over(K) + o.numerator_over(K), K);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const Rational& c) {
  if (c == 0) return *this = RatFunc();
  num_ *= c;
  return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.k_ + b.k_);
}

std::string RatFunc::to_string() const {
  if (k_ == 0) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(1-t)";
  if (k_ != 1) os << "^" << k_;
  return os.str();
}

PoleData pole_data(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "pole_data of the zero function");
  if (f.pole_power() > 0) return {f.pole_power(), f.numerator().eval_at_one()};
  LaurentPoly p = f.numerator();
  int m = 0;
  while (auto q = p.divide_one_minus_t()) {
    p = std::move(*q);
    ++m;
  }
  return {-m, p.eval_at_one()};
}

RatFunc invert_variable(const RatFunc& f, int twist) {
  // 1/(1-t^{-1})^k = (-1)^k t^k / (1-t)^k
  const int k = f.pole_power();
  LaurentPoly p = f.numerator().inverted().shifted(k + twist);
  if (k % 2) p *= Rational(-1);
  return RatFunc(p, k);
}

std::vector<Rational> expand(const RatFunc& f, int lo, int hi, Orientation dir) {
  if (lo > hi) throw Error(ErrorCode::EmptyWindow, "expand: lo > hi");
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  const int k = f.pole_power();
  for (int d = lo; d <= hi; ++d) {
    Rational s = 0;
    for (const auto& [e, c] : f.numerator().terms()) {
      if (k == 0) {
        if (e == d) s += c;
        continue;
      }
      if (dir == Orientation::V) {
        if (d - e >= 0) s += c * Rational(binomial(d - e + k - 1, k - 1));
      } else {
        if (e - d - 1 >= 0) {
          Rational b(binomial(e - d - 1, k - 1));
          s += (k % 2 ? -c : c) * b;
        }
      }
    }
    out[static_cast<std::size_t>(d - lo)] = s;
  }
  return out;
}

}  // namespace lcdecomp
