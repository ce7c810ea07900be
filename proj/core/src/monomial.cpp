#include "lcdecomp/monomial.hpp"

#include "lcdecomp/error.hpp"

#include <algorithm>
#include <sstream>

namespace lcdecomp {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent gcd(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

int total_degree(const Exponent& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Exponent> gens) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "monomial ideal needs n >= 1");
  for (const auto& g : gens) {
    if (g.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::InvalidInput, "generator length differs from n");
    for (int v : g)
      if (v < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
  }
  std::sort(gens.begin(), gens.end(),
            [](const Exponent& a, const Exponent& b) {
              const int da = total_degree(a), db = total_degree(b);
              return da != db ? da < db : a > b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens_)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::max_power(int n, int p) {
  std::vector<Exponent> gens;
  Exponent cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      gens.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(var)] = v;
      self(self, var + 1, left - v);
    }
  };
  rec(rec, 0, p);
  return MonomialIdeal(n, gens);
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }

bool MonomialIdeal::contains(const Exponent& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
  for (const auto& g : J.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) os << ",";
    bool any = false;
    for (std::size_t i = 0; i < gens_[k].size(); ++i) {
      if (gens_[k][i] == 0) continue;
      os << "x" << i + 1;
      if (gens_[k][i] > 1) os << "^" << gens_[k][i];
      any = true;
    }
    if (!any) os << "1";
  }
  os << ")";
  return os.str();
}

GradedModule::GradedModule(int n, std::vector<Summand> summands) : n_(n) {
  for (auto& s : summands) {
    if (s.ideal.n() != n) throw Error(ErrorCode::InvalidInput, "summand over a different ring");
    if (s.kind == SummandKind::Quotient && s.ideal.is_unit()) continue;
    if (s.kind == SummandKind::Ideal && s.ideal.is_zero()) continue;
    summands_.push_back(std::move(s));
  }
}

GradedModule GradedModule::quotient(const MonomialIdeal& I, int shift) {
  return GradedModule(I.n(), {{SummandKind::Quotient, I, shift}});
}

GradedModule GradedModule::ideal(const MonomialIdeal& J, int shift) {
  return GradedModule(J.n(), {{SummandKind::Ideal, J, shift}});
}

GradedModule GradedModule::free(int n, int shift) { return quotient(MonomialIdeal(n), shift); }

GradedModule GradedModule::operator+(const GradedModule& o) const {
  if (o.n_ != n_) throw Error(ErrorCode::MixedDimension, "direct sum over different rings");
  auto s = summands_;
  s.insert(s.end(), o.summands_.begin(), o.summands_.end());
  return GradedModule(n_, s);
}

std::string GradedModule::to_string() const {
  if (summands_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    const auto& s = summands_[k];
    if (k) os << " + ";
    if (s.kind == SummandKind::Quotient)
      os << (s.ideal.is_zero() ? "R" : "R/" + s.ideal.to_string());
    else
      os << s.ideal.to_string();
    if (s.shift) os << "(" << s.shift << ")";
  }
  return os.str();
}

}  // namespace lcdecomp
