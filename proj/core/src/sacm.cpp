#include "lcdecomp/sacm.hpp"

#include "lcdecomp/cone_maps.hpp"
#include "lcdecomp/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace lcdecomp {

bool has_factor_shape(const Factor& f) {
  if (f.dim < 0 || f.dim > f.table.n) return false;
  for (int i = 0; i <= f.table.n; ++i)
    if (i != f.dim && i != f.dim - 1 && !f.table[i].is_zero()) return false;
  return true;
}

Table sacm_assemble(const FactorList& factors, int n) {
  Table out(n, Orientation::Vstar);
  for (const auto& f : factors) {
    if (f.table.orientation != Orientation::Vstar)
      throw Error(ErrorCode::MixedOrientation, "factor tables are local cohomology tables");
    if (!has_factor_shape(f))
      throw Error(ErrorCode::BadFactorShape, "factor of dimension " + std::to_string(f.dim) +
                                                 " has entries outside {dim-1, dim}");
    out = out + f.table;
  }
  return out;
}

Table regrade(const Table& T, int n_from, int n_to, const Rational& scalar) {
  if (T.n != n_from) throw Error(ErrorCode::InvalidParams, "regrade: table is not over n_from variables");
  if (n_to < 0) throw Error(ErrorCode::InvalidParams, "regrade: negative target size");
  if (scalar <= 0) throw Error(ErrorCode::InvalidParams, "regrade: scalar must be positive");
  for (int i = n_to + 1; i <= n_from; ++i)
    if (!T[i].is_zero()) throw Error(ErrorCode::NonzeroDroppedEntry, "regrade would drop entry " + std::to_string(i));
  Table out(n_to, T.orientation);
  for (int i = 0; i <= std::min(n_from, n_to); ++i) out[i] = scalar * T[i];
  return out;
}

Table point_module_table(const PointModule& p, int n) {
  Table t(n, Orientation::Vstar);
  if (!p.polynomial) {
    t[0] = RatFunc::monomial(-p.shift);
  } else {
    if (n < 1) throw Error(ErrorCode::InvalidParams, "k[x] needs n >= 1");
    t[1] = RatFunc::monomial(-p.shift, -1, 1);
  }
  return t;
}

Table term_lc_table(const TermGenerator& g, int n) {
  if (auto* r = std::get_if<GeneratorRef>(&g)) return generator_lc_table(*r, n);
  if (auto* p = std::get_if<PointModule>(&g)) return point_module_table(*p, n);
  throw Error(ErrorCode::InvalidParams, "degree sequences have no local cohomology table here");
}

namespace {

void add_point_terms(const LaurentPoly& p, bool polynomial, Decomposition& out) {
  for (const auto& [deg, c] : p.terms()) {
    if (c < 0) throw Error(ErrorCode::LPInfeasible, "factor table is not a nonnegative point-module combination");
    out.terms.push_back({c, PointModule{polynomial, -deg}});
  }
}

void decompose_low(const Factor& f, Decomposition& out) {
  const Table& T = f.table;
  if (!T[0].is_polynomial()) throw Error(ErrorCode::LPInfeasible, "H^0 of a factor must have finite length");
  add_point_terms(T[0].numerator(), false, out);
  if (f.dim == 1) {
    const RatFunc q = -T[1].times_one_minus_t(1);
    if (!q.is_polynomial()) throw Error(ErrorCode::LPInfeasible, "H^1 of a dimension 1 factor has a higher pole");
    add_point_terms(q.numerator(), true, out);
  }
}

void decompose_high(const Factor& f, Decomposition& out) {
  const int e = f.dim;
  const Table target = regrade(f.table, f.table.n, e, 1);
  const Table E = L0_inv(target);
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& x : E.entries) {
    if (x.is_zero()) continue;
    if (x.pole_power() > e) throw Error(ErrorCode::LPInfeasible, "factor table has a pole beyond its dimension");
    const LaurentPoly p = x.numerator_over(e);
    lo = std::min(lo, p.min_degree());
    hi = std::max(hi, p.max_degree());
  }
  std::set<Family> fams{Family::A1, Family::A2, Family::A4};
  if (e >= 3) fams.insert(Family::A3);
  for (int round = 0; round < kSacmWidenRounds; ++round) {
    const auto gens = enumerate_generators(lo - round, hi + round, e, fams);
    const auto res = cone_membership_lp(target, gens);
    if (!res.feasible) continue;
    for (const auto& t : res.decomposition.terms) out.terms.push_back(t);
    return;
  }
  throw Error(ErrorCode::LPInfeasible, "no decomposition of the dimension " + std::to_string(e) + " factor found");
}

}  // namespace

Decomposition decompose_sacm(const FactorList& factors0, int n) {
  FactorList factors = factors0;
  std::stable_sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.dim < b.dim; });
  Decomposition out;
  for (const auto& f : factors) {
    if (f.table.n != n) throw Error(ErrorCode::MixedDimension, "factor over a different ring");
    if (f.table.orientation != Orientation::Vstar) throw Error(ErrorCode::MixedOrientation, "factor must be Vstar");
    if (!has_factor_shape(f)) throw Error(ErrorCode::NotSaCM, "factor of dimension " + std::to_string(f.dim) +
                                                                  " is neither CM nor almost CM");
    if (f.table.is_zero()) continue;
    if (f.dim <= 1)
      decompose_low(f, out);
    else
      decompose_high(f, out);
  }
  std::vector<std::pair<Rational, Table>> combo{{Rational(1), sacm_assemble(factors, n)}};
  for (const auto& t : out.terms) combo.emplace_back(-t.coeff, term_lc_table(t.generator, n));
  out.residual = table_combine(combo);
  return out;
}

FactorList factor_list(const FiltrationResult& f) {
  FactorList out;
  for (const auto& x : f.factors) out.push_back({x.dim, x.table});
  return out;
}

}  // namespace lcdecomp
