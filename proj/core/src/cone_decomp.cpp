#include "lcdecomp/cone_decomp.hpp"

#include "lcdecomp/cone_maps.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/lp.hpp"
#include "lcdecomp/monomial_engine.hpp"

#include <algorithm>
#include <set>

namespace lcdecomp {

std::string term_generator_string(const TermGenerator& g) {
  if (auto* r = std::get_if<GeneratorRef>(&g)) return r->to_string();
  if (auto* d = std::get_if<DegreeSequence>(&g)) return d->to_string();
  const auto& p = std::get<PointModule>(g);
  return std::string(p.polynomial ? "k[x]" : "k") + "(" + std::to_string(p.shift) + ")";
}

Decomposition bs_greedy(const Table& beta0) {
  if (beta0.orientation != Orientation::V) throw Error(ErrorCode::MixedOrientation, "bs_greedy expects a V table");
  const int n = beta0.n;
  for (const auto& e : beta0.entries)
    if (!e.is_polynomial() || !e.numerator().all_coeffs_nonnegative())
      throw Error(ErrorCode::NotDecomposable, "Betti entries must be polynomials with nonnegative coefficients");
  Decomposition out;
  Table beta = beta0;
  while (!beta.is_zero()) {
    int p = n;
    while (beta[p].is_zero()) --p;
    if (p == 0) throw Error(ErrorCode::NotDecomposable, "remaining table is concentrated in column 0");
    std::vector<int> d;
    for (int i = 0; i <= p; ++i) {
      if (beta[i].is_zero()) throw Error(ErrorCode::NotDecomposable, "zero column inside the table");
      d.push_back(beta[i].numerator().min_degree());
      if (i && d[static_cast<std::size_t>(i)] <= d[static_cast<std::size_t>(i - 1)])
        throw Error(ErrorCode::NotDecomposable, "bottom strand degrees are not increasing");
    }
    DegreeSequence seq(d, n);
    Table pure = pure_betti(seq);
    Rational c = -1;
    for (int i = 0; i <= p; ++i) {
      Rational ratio = beta[i].numerator().coeff(d[static_cast<std::size_t>(i)]) /
                       pure[i].numerator().coeff(d[static_cast<std::size_t>(i)]);
      if (c < 0 || ratio < c) c = ratio;
    }
    beta = beta - c * pure;
    for (const auto& e : beta.entries)
      if (!e.numerator().all_coeffs_nonnegative())
        throw Error(ErrorCode::NotDecomposable, "greedy step produced a negative entry");
    out.terms.push_back({c, seq});
  }
  out.residual = beta;
  return out;
}

namespace {

DegreeSequence replaced(const DegreeSequence& d, int idx, int value) {
  auto v = d.degrees();
  v[static_cast<std::size_t>(idx)] = value;
  return DegreeSequence(v, d.n());
}

}  // namespace

MoveResult split_step(const DegreeSequence& d, int i, int a) {
  if (i < 0 || i >= d.s() || !(d[i] < a && a < d[i + 1]))
    throw Error(ErrorCode::NoGap, "split_step needs d_i < a < d_{i+1}");
  DegreeSequence d1 = replaced(d, i + 1, a);
  DegreeSequence d2 = replaced(d, i, a);
  const LaurentPoly p1 = pi_poly(d1), p2 = pi_poly(d2);
  const int d0 = d[0];
  const Rational a11 = p1.coeff(d0), a12 = p2.coeff(d0), a21 = p1.coeff(a), a22 = p2.coeff(a);
  const Rational det = a11 * a22 - a12 * a21;
  const Rational c1 = a22 / det, c2 = -a21 / det;
  if (pi_poly(d) != c1 * p1 + c2 * p2)
    throw Error(ErrorCode::InvalidParams, "split_step: recomposition check failed");
  return {c1, d1, c2, d2};
}

std::pair<Rational, Rational> lengthen_coefficients(const DegreeSequence& d) {
  const int s = d.s();
  if (s < 2 || s > d.n() - 1) throw Error(ErrorCode::LengthOutOfRange, "lengthen_step needs 2 <= s <= n - 1");
  DegreeSequence d1 = replaced(d, s, d.back() + 1);
  auto ext = d.degrees();
  ext.push_back(d.back() + 1);
  DegreeSequence d2(ext, d.n());
  const LaurentPoly p = pi_poly(d), p1 = pi_poly(d1), p2 = pi_poly(d2);
  const Rational c2 = p2.coeff(d.back() + 1) / p1.coeff(d.back() + 1);
  const Rational c1 = 1 - c2;
  if (c1 * p + c2 * p1 != p2) throw Error(ErrorCode::InvalidParams, "lengthen_step: recomposition check failed");
  return {c1, c2};
}

MoveResult lengthen_step(const DegreeSequence& d) {
  const auto [c1, c2] = lengthen_coefficients(d);
  const int s = d.s();
  auto ext = d.degrees();
  ext.push_back(d.back() + 1);
  return {-c2 / c1, replaced(d, s, d.back() + 1), 1 / c1, DegreeSequence(ext, d.n())};
}

Table b_vector(const DegreeSequence& d) {
  const auto [a, b] = alpha_split(d);
  Table t(d.n(), Orientation::V);
  t[0] = RatFunc(a);
  t[1] = RatFunc(b);
  return t;
}

Decomposition reduce_to_P(const DegreeSequence& d) {
  if (has_property_P(d)) return {{{Rational(1), d}}, Table(d.n(), Orientation::V)};
  const int s = d.s();
  std::vector<Table> tables;
  std::vector<TermGenerator> labels;
  for (int a = d[0]; a <= d[1] - 1; ++a) {
    if (s == 1) {
      DegreeSequence c({a, a + 1}, d.n());
      tables.push_back(b_vector(c));
      labels.emplace_back(c);
      continue;
    }
    for (int t2 = d[2]; t2 + s - 2 <= d.back(); ++t2) {
      std::vector<int> v{a, a + 1};
      for (int j = 2; j <= s; ++j) v.push_back(t2 + j - 2);
      DegreeSequence c(v, d.n());
      tables.push_back(b_vector(c));
      labels.emplace_back(c);
    }
  }
  auto res = cone_membership_tables(b_vector(d), tables, labels);
  if (!res.feasible) throw Error(ErrorCode::LPInfeasible, "no property-P decomposition of " + d.to_string());
  return res.decomposition;
}

namespace {

GeneratorRef generator_for(const DegreeSequence& p) {
  const int s = p.s(), n = p.n();
  if (s == 1) return {Family::A1, {p[0]}, n};
  if (s == n) return {Family::A2, {p[0], p[2]}, n};
  return {Family::A3, {p[0], p[2], s}, n};
}

Decomposition collect(const std::map<GeneratorRef, Rational>& acc, const Table& target) {
  Decomposition out;
  std::vector<std::pair<Rational, Table>> combo{{Rational(1), target}};
  for (const auto& [g, c] : acc) {
    out.terms.push_back({c, g});
    combo.emplace_back(-c, generator_table(g, target.n));
  }
  out.residual = table_combine(combo);
  return out;
}

void add_pd1_terms(const Table& betaN, std::map<GeneratorRef, Rational>& acc) {
  for (const auto& piece : bs_greedy(betaN).terms) {
    const auto& d = std::get<DegreeSequence>(piece.generator);
    for (const auto& sub : reduce_to_P(d).terms)
      acc[generator_for(std::get<DegreeSequence>(sub.generator))] += piece.coeff * sub.coeff;
  }
}

}  // namespace

Decomposition decompose_pd1(const Table& betaN) {
  if (betaN.orientation != Orientation::V) throw Error(ErrorCode::MixedOrientation, "decompose_pd1 expects a V table");
  std::map<GeneratorRef, Rational> acc;
  add_pd1_terms(betaN, acc);
  return collect(acc, L1(betaN));
}

Decomposition decompose_pd1(const GradedModule& M) {
  const int n = M.n();
  const Table beta = graded_betti(M);
  for (int i = 2; i <= n; ++i)
    if (!beta[i].is_zero()) throw Error(ErrorCode::NotPd1, "module has projective dimension > 1");
  std::map<GeneratorRef, Rational> acc;
  Table target(n, Orientation::V);
  auto add_free = [&](int a) {
    GeneratorRef g{Family::A4, {a}, n};
    acc[g] += 1;
    target = target + generator_table(g, n);
  };
  auto add_transpose = [&](Table betaN) {
    add_pd1_terms(betaN, acc);
    target = target + L1(betaN);
  };
  for (const auto& s : M.summands()) {
    const auto& I = s.ideal;
    if (s.kind == SummandKind::Quotient) {
      if (I.is_zero()) {
        add_free(s.shift);
        continue;
      }
      // only principal quotients survive the projective dimension check
      const int f = total_degree(I.gens().front());
      Table betaN(n, Orientation::V);
      betaN[0] = RatFunc::monomial(s.shift - f);
      betaN[1] = RatFunc::monomial(s.shift);
      add_transpose(betaN);
      continue;
    }
    Exponent g = I.gens().front();
    for (const auto& h : I.gens()) g = gcd(g, h);
    const int b = s.shift - total_degree(g);
    std::vector<Exponent> reduced;
    for (auto h : I.gens()) {
      for (std::size_t l = 0; l < h.size(); ++l) h[l] -= g[l];
      reduced.push_back(h);
    }
    const MonomialIdeal J(n, reduced);
    if (J.is_unit()) {
      add_free(b);
      continue;
    }
    const Table bq = graded_betti(GradedModule::quotient(J));
    if (n < 2) throw Error(ErrorCode::NotPd1, "unexpected ideal summand");
    Table betaN(n, Orientation::V);
    betaN[0] = invert_variable(bq[2], b);
    betaN[1] = invert_variable(bq[1], b);
    betaN[2] = RatFunc::monomial(b);
    add_transpose(betaN);
  }
  return collect(acc, target);
}

bool vertex_test(const GeneratorRef& g) {
  validate_generator(g);
  return g.family != Family::A3;
}

NonVertexCertificate non_vertex_certificate(const Table& T) {
  if (T.orientation != Orientation::V) throw Error(ErrorCode::WrongShape, "certificate expects a V table");
  for (int i = 2; i <= T.n; ++i)
    if (!T[i].is_zero()) throw Error(ErrorCode::WrongShape, "table has entries beyond index 1");
  NonVertexCertificate c;
  if (T.n < 1 || T[1].is_zero()) {
    c.reason = "entry 1 is zero";
    return c;
  }
  const auto pd = pole_data(T[1]);
  c.order = pd.order;
  c.limit = pd.limit;
  if (pd.order >= 1 && pd.order <= T.n - 2) {
    c.certified = true;
    c.reason = "entry 1 has pole order " + std::to_string(pd.order) + " in [1, " + std::to_string(T.n - 2) +
               "]; vertex combinations give order n-1 with positive limit or order <= 0";
  } else {
    c.reason = "entry 1 has pole order " + std::to_string(pd.order) + " outside [1, n-2]";
  }
  return c;
}

Rational Witness::evaluate(const Table& T) const {
  Rational s = 0;
  for (const auto& [pos, y] : values) {
    const auto& f = T[pos.first];
    if (f.is_zero()) continue;
    if (f.pole_power() > denominator_power)
      throw Error(ErrorCode::InvalidParams, "witness applied to a table with a larger pole");
    s += y * f.numerator_over(denominator_power).coeff(pos.second);
  }
  return s;
}

MembershipResult cone_membership_tables(const Table& target, const std::vector<Table>& tables,
                                        const std::vector<TermGenerator>& labels) {
  if (tables.size() != labels.size()) throw Error(ErrorCode::InvalidParams, "one label per table required");
  int D = 0;
  auto bump = [&](const Table& t) {
    if (t.n != target.n) throw Error(ErrorCode::MixedDimension, "membership: tables over different rings");
    if (t.orientation != target.orientation) throw Error(ErrorCode::MixedOrientation, "membership: mixed orientation");
    for (const auto& e : t.entries) D = std::max(D, e.pole_power());
  };
  bump(target);
  for (const auto& t : tables) bump(t);

  std::vector<std::pair<int, int>> rows;
  std::map<std::pair<int, int>, std::size_t> row_of;
  std::vector<std::vector<LaurentPoly>> nums;  // [table][entry]
  auto numerators = [&](const Table& t) {
    std::vector<LaurentPoly> v;
    for (const auto& e : t.entries) v.push_back(e.numerator_over(D));
    return v;
  };
  const auto tnum = numerators(target);
  for (const auto& t : tables) nums.push_back(numerators(t));
  std::set<std::pair<int, int>> positions;
  auto note = [&](const std::vector<LaurentPoly>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (const auto& [deg, c] : v[i].terms()) positions.insert({static_cast<int>(i), deg});
  };
  note(tnum);
  for (const auto& v : nums) note(v);
  for (const auto& p : positions) {
    row_of[p] = rows.size();
    rows.push_back(p);
  }

  QMatrix A(rows.size(), std::vector<Rational>(tables.size(), Rational(0)));
  std::vector<Rational> b(rows.size(), Rational(0));
  for (std::size_t j = 0; j < tables.size(); ++j)
    for (std::size_t i = 0; i < nums[j].size(); ++i)
      for (const auto& [deg, c] : nums[j][i].terms()) A[row_of[{static_cast<int>(i), deg}]][j] = c;
  for (std::size_t i = 0; i < tnum.size(); ++i)
    for (const auto& [deg, c] : tnum[i].terms()) b[row_of[{static_cast<int>(i), deg}]] = c;

  const LPResult lp = lp_feasible(A, b);
  MembershipResult res;
  res.feasible = lp.feasible;
  if (lp.feasible) {
    std::vector<std::pair<Rational, Table>> combo{{Rational(1), target}};
    for (std::size_t j = 0; j < tables.size(); ++j) {
      if (lp.x[j] == 0) continue;
      res.decomposition.terms.push_back({lp.x[j], labels[j]});
      combo.emplace_back(-lp.x[j], tables[j]);
    }
    res.decomposition.residual = table_combine(combo);
  } else {
    res.witness.denominator_power = D;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (lp.y[r] != 0) res.witness.values[rows[r]] = lp.y[r];
    res.decomposition.residual = target;
  }
  return res;
}

MembershipResult cone_membership_lp(const Table& target, const std::vector<GeneratorRef>& generators) {
  std::vector<Table> tables;
  std::vector<TermGenerator> labels;
  for (const auto& g : generators) {
    tables.push_back(target.orientation == Orientation::V ? generator_table(g, target.n)
                                                          : generator_lc_table(g, target.n));
    labels.emplace_back(g);
  }
  return cone_membership_tables(target, tables, labels);
}

}  // namespace lcdecomp
