#include "lcdecomp/laurent.hpp"

#include <sstream>

namespace lcdecomp {

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (const auto& [d, c] : terms)
    if (c != 0) terms_.emplace(d, c);
}

LaurentPoly LaurentPoly::monomial(int degree, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(degree, coeff);
  return p;
}

LaurentPoly LaurentPoly::one_minus_t_pow(int k) {
  LaurentPoly p;
  for (int j = 0; j <= k; ++j) {
    Rational c(binomial(k, j));
    if (j % 2) c = -c;
    p.add_term(j, c);
  }
  return p;
}

Rational LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int degree, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::eval_at_one() const {
  Rational s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::all_coeffs_nonnegative() const {
  for (const auto& [d, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), d + k, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(-d, c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_one_minus_t() const {
  if (is_zero()) return LaurentPoly();
  if (eval_at_one() != 0) return std::nullopt;
  // q_d = sum_{e <= d} p_e on [lo, hi-1]
  LaurentPoly q;
  Rational run = 0;
  const int hi = max_degree();
  auto it = terms_.begin();
  for (int d = min_degree(); d < hi; ++d) {
    if (it != terms_.end() && it->first == d) {
      run += it->second;
      ++it;
    }
    if (run != 0) q.terms_.emplace_hint(q.terms_.end(), d, run);
  }
  return q;
}

int LaurentPoly::one_minus_t_multiplicity() const {
  int m = 0;
  LaurentPoly p = *this;
  while (!p.is_zero()) {
    auto q = p.divide_one_minus_t();
    if (!q) break;
    p = std::move(*q);
    ++m;
  }
  return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (d == 0) {
      os << display_rational(mag);
      continue;
    }
    if (!unit) {
      if (mag.get_den() == 1)
        os << display_rational(mag);
      else
        os << "(" << display_rational(mag) << ")";
    }
    os << "t";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

}  // namespace lcdecomp
