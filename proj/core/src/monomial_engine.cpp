#include "lcdecomp/monomial_engine.hpp"

#include "lcdecomp/cone_maps.hpp"
#include "lcdecomp/error.hpp"
#include "lcdecomp/linalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace lcdecomp {

MonomialIdeal ideal_colon(const MonomialIdeal& I, const Exponent& g) {
  std::vector<Exponent> out;
  for (auto h : I.gens()) {
    for (std::size_t l = 0; l < h.size(); ++l) h[l] = std::max(h[l] - g[l], 0);
    out.push_back(h);
  }
  return MonomialIdeal(I.n(), out);
}

MonomialIdeal ideal_colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  MonomialIdeal acc = MonomialIdeal::unit(I.n());
  for (const auto& g : J.gens()) acc = ideal_intersect(acc, ideal_colon(I, g));
  return acc;
}

MonomialIdeal ideal_saturate(const MonomialIdeal& I) {
  const MonomialIdeal m = MonomialIdeal::max_power(I.n(), 1);
  MonomialIdeal cur = I;
  for (;;) {
    MonomialIdeal next = ideal_colon(cur, m);
    if (next == cur) return cur;
    cur = next;
  }
}

MonomialIdeal ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n() != J.n()) throw Error(ErrorCode::MixedDimension, "ideals over different rings");
  std::vector<Exponent> out;
  for (const auto& g : I.gens())
    for (const auto& h : J.gens()) out.push_back(lcm(g, h));
  return MonomialIdeal(I.n(), out);
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n() != J.n()) throw Error(ErrorCode::MixedDimension, "ideals over different rings");
  auto g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.n(), g);
}

std::vector<IrreducibleComponent> primary_decomposition(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw Error(ErrorCode::ZeroOrUnitIdeal, "decomposition needs a proper nonzero ideal");
  const int n = I.n();
  std::set<MonomialIdeal> seen, leaves;
  std::function<void(const MonomialIdeal&)> split = [&](const MonomialIdeal& J) {
    if (!seen.insert(J).second) return;
    for (const auto& g : J.gens()) {
      int first = -1, count = 0;
      for (int l = 0; l < n; ++l)
        if (g[static_cast<std::size_t>(l)] > 0) {
          if (first < 0) first = l;
          ++count;
        }
      if (count < 2) continue;
      Exponent power(static_cast<std::size_t>(n), 0), rest = g;
      power[static_cast<std::size_t>(first)] = g[static_cast<std::size_t>(first)];
      rest[static_cast<std::size_t>(first)] = 0;
      split(ideal_sum(J, MonomialIdeal(n, {power})));
      split(ideal_sum(J, MonomialIdeal(n, {rest})));
      return;
    }
    leaves.insert(J);
  };
  split(I);
  std::vector<IrreducibleComponent> out;
  for (const auto& C : leaves) {
    bool redundant = false;
    for (const auto& D : leaves)
      if (!(D == C) && C.contains(D)) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    IrreducibleComponent ic{C, {}};
    for (int l = 0; l < n; ++l)
      for (const auto& g : C.gens())
        if (g[static_cast<std::size_t>(l)] > 0) {
          ic.prime.push_back(l);
          break;
        }
    out.push_back(std::move(ic));
  }
  return out;
}

LaurentPoly hilbert_numerator(const MonomialIdeal& I) {
  if (I.is_zero()) return LaurentPoly::constant(1);
  if (I.is_unit()) return LaurentPoly();
  const auto& gens = I.gens();
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      for (std::size_t l = 0; l < gens[a].size(); ++l)
        if (gens[a][l] > 0 && gens[b][l] > 0) {
          coprime = false;
          break;
        }
  if (coprime) {
    LaurentPoly p = LaurentPoly::constant(1);
    for (const auto& g : gens) p = p * (LaurentPoly::constant(1) - LaurentPoly::monomial(total_degree(g)));
    return p;
  }
  const Exponent& m = gens.back();
  const MonomialIdeal rest(I.n(), std::vector<Exponent>(gens.begin(), gens.end() - 1));
  return hilbert_numerator(rest) - hilbert_numerator(ideal_colon(rest, m)).shifted(total_degree(m));
}

RatFunc hilbert_series(const GradedModule& M) {
  const int n = M.n();
  RatFunc hs;
  for (const auto& s : M.summands()) {
    RatFunc q(hilbert_numerator(s.ideal), n);
    RatFunc piece = s.kind == SummandKind::Quotient ? q : RatFunc::monomial(0, 1, n) - q;
    hs += piece.times_t(-s.shift);
  }
  return hs;
}

namespace {

using Mask = unsigned;

int popcount(Mask m) { return std::popcount(m); }

/// Sign (-1)^{#{s in S : s < j}}.
int face_sign(Mask S, int j) { return popcount(S & ((1u << j) - 1u)) % 2 ? -1 : 1; }

/// Dimensions of the cohomology of the cochain complex spanned by `faces` (subsets of a
/// ground set of size g), differential S -> S u {j}. Result indexed by |S|, size g + 1.
std::vector<long> coboundary_cohomology(const std::vector<Mask>& faces, int g) {
  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(g + 1));
  for (Mask f : faces) by_size[static_cast<std::size_t>(popcount(f))].push_back(f);
  std::vector<std::size_t> rk(static_cast<std::size_t>(g + 1), 0);  // rank of delta_k : C^k -> C^{k+1}
  for (int k = 0; k < g; ++k) {
    const auto& src = by_size[static_cast<std::size_t>(k)];
    const auto& dst = by_size[static_cast<std::size_t>(k + 1)];
    if (src.empty() || dst.empty()) continue;
    std::map<Mask, std::size_t> col;
    for (std::size_t c = 0; c < src.size(); ++c) col[src[c]] = c;
    ZMatrix m(dst.size(), std::vector<Integer>(src.size(), Integer(0)));
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (int j = 0; j < g; ++j) {
        if (!(dst[r] & (1u << j))) continue;
        const Mask S = dst[r] & ~(1u << j);
        auto it = col.find(S);
        if (it != col.end()) m[r][it->second] = face_sign(S, j);
      }
    rk[static_cast<std::size_t>(k)] = bareiss_rank(std::move(m));
  }
  std::vector<long> h(static_cast<std::size_t>(g + 1), 0);
  for (int k = 0; k <= g; ++k) {
    long v = static_cast<long>(by_size[static_cast<std::size_t>(k)].size()) - static_cast<long>(rk[static_cast<std::size_t>(k)]);
    if (k > 0) v -= static_cast<long>(rk[static_cast<std::size_t>(k - 1)]);
    h[static_cast<std::size_t>(k)] = v;
  }
  return h;
}

/// Betti numbers of the ideal I itself: entry i is beta_i(I), i = 0..n-1, as polynomials.
std::vector<LaurentPoly> ideal_betti(const MonomialIdeal& I) {
  const int n = I.n();
  std::vector<LaurentPoly> out(static_cast<std::size_t>(n + 1));
  if (I.is_zero()) return out;
  std::set<Exponent> lattice(I.gens().begin(), I.gens().end());
  std::vector<Exponent> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Exponent> next;
    for (const auto& x : frontier)
      for (const auto& g : I.gens()) {
        Exponent l = lcm(x, g);
        if (lattice.insert(l).second) next.push_back(l);
      }
    frontier = std::move(next);
  }
  for (const auto& b : lattice) {
    // upper Koszul complex: faces tau with x^{b - tau} in I, as a chain complex
    std::vector<Mask> faces;
    for (Mask tau = 0; tau < (1u << n); ++tau) {
      Exponent e = b;
      bool ok = true;
      for (int l = 0; l < n; ++l)
        if (tau & (1u << l)) {
          if (--e[static_cast<std::size_t>(l)] < 0) ok = false;
        }
      if (ok && I.contains(e)) faces.push_back(tau);
    }
    // Reduced homology of a simplicial complex equals the cohomology of its cochain complex
    // (with the empty face) in the same degree, since ranks agree over Q.
    const auto h = coboundary_cohomology(faces, n);
    for (int i = 0; i <= n; ++i)
      if (h[static_cast<std::size_t>(i)] > 0)
        out[static_cast<std::size_t>(i)].add_term(total_degree(b), Rational(h[static_cast<std::size_t>(i)]));
  }
  return out;
}

}  // namespace

Table graded_betti(const GradedModule& M) {
  const int n = M.n();
  Table out(n, Orientation::V);
  for (const auto& s : M.summands()) {
    const auto bi = ideal_betti(s.ideal);
    std::vector<LaurentPoly> col(static_cast<std::size_t>(n + 1));
    if (s.kind == SummandKind::Quotient) {
      col[0] = LaurentPoly::constant(1);
      for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i + 1)] = bi[static_cast<std::size_t>(i)];
      if (!bi[static_cast<std::size_t>(n)].is_zero()) throw Error(ErrorCode::InvalidParams, "Betti number beyond n");
    } else {
      col = bi;
    }
    for (int i = 0; i <= n; ++i) out[i] += RatFunc(col[static_cast<std::size_t>(i)].shifted(-s.shift));
  }
  return out;
}

namespace {

/// Ext^k(R/I, R) for k = 0..n, unshifted.
std::vector<RatFunc> ext_quotient(const MonomialIdeal& I) {
  const int n = I.n();
  std::vector<RatFunc> out(static_cast<std::size_t>(n + 1));
  if (I.is_zero()) {
    out[0] = RatFunc::monomial(0, 1, n);
    return out;
  }
  if (I.is_unit()) return out;
  const auto& gens = I.gens();
  const int r = static_cast<int>(gens.size());
  if (static_cast<std::size_t>(r) > kExtGeneratorCap)
    throw Error(ErrorCode::ResourceCap, "ext_table: more than " + std::to_string(kExtGeneratorCap) + " generators");
  const Mask subsets = 1u << r;
  std::vector<Exponent> lcms(subsets, Exponent(static_cast<std::size_t>(n), 0));
  for (Mask S = 1; S < subsets; ++S) {
    const int j = std::countr_zero(S);
    lcms[S] = lcm(lcms[S & (S - 1)], gens[static_cast<std::size_t>(j)]);
  }
  std::vector<std::vector<int>> W(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    std::set<int> w{0};
    for (const auto& g : gens) w.insert(g[static_cast<std::size_t>(l)]);
    W[static_cast<std::size_t>(l)].assign(w.begin(), w.end());
  }
  // class c = 0: theta <= 0 (u >= 0); class j >= 1: theta in (w_{j-1}, w_j]
  auto class_gf = [&](int l, int c) {
    if (c == 0) return RatFunc::monomial(0, 1, 1);
    const auto& w = W[static_cast<std::size_t>(l)];
    LaurentPoly p;
    for (int u = -w[static_cast<std::size_t>(c)]; u <= -w[static_cast<std::size_t>(c - 1)] - 1; ++u) p.add_term(u, 1);
    return RatFunc(p);
  };
  std::map<std::vector<bool>, std::vector<long>> cache;
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<bool> key(subsets, false);
    std::vector<Mask> faces;
    for (Mask S = 0; S < subsets; ++S) {
      bool ok = true;
      for (int l = 0; l < n && ok; ++l) {
        const int c = cls[static_cast<std::size_t>(l)];
        if (c > 0 && lcms[S][static_cast<std::size_t>(l)] < W[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)]) ok = false;
      }
      if (ok) {
        key[S] = true;
        faces.push_back(S);
      }
    }
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, coboundary_cohomology(faces, r)).first;
    const auto& h = it->second;
    RatFunc gf;
    bool have_gf = false;
    for (int k = 0; k <= r; ++k) {
      if (h[static_cast<std::size_t>(k)] == 0) continue;
      if (k > n) throw Error(ErrorCode::InvalidParams, "ext_table: cohomology above n (internal error)");
      if (!have_gf) {
        gf = RatFunc(LaurentPoly::constant(1));
        for (int l = 0; l < n; ++l) gf = gf * class_gf(l, cls[static_cast<std::size_t>(l)]);
        have_gf = true;
      }
      out[static_cast<std::size_t>(k)] += gf * Rational(h[static_cast<std::size_t>(k)]);
    }
    int l = 0;
    while (l < n && ++cls[static_cast<std::size_t>(l)] == static_cast<int>(W[static_cast<std::size_t>(l)].size())) {
      cls[static_cast<std::size_t>(l)] = 0;
      ++l;
    }
    if (l == n) break;
  }
  return out;
}

}  // namespace

Table ext_table(const GradedModule& M) {
  const int n = M.n();
  Table out(n, Orientation::V);
  for (const auto& s : M.summands()) {
    const auto e = ext_quotient(s.ideal);
    std::vector<RatFunc> col(static_cast<std::size_t>(n + 1));
    if (s.kind == SummandKind::Quotient) {
      col = e;
    } else {
      col[0] = RatFunc::monomial(0, 1, n) + e[1];
      for (int i = 1; i < n; ++i) col[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i + 1)];
    }
    for (int i = 0; i <= n; ++i) out[i] += col[static_cast<std::size_t>(i)].times_t(s.shift);
  }
  return out;
}

Table local_coh_table(const GradedModule& M) { return L0(ext_table(M)); }

Table local_coh_subquotient(const MonomialIdeal& J, const MonomialIdeal& K, int shift) {
  const int n = J.n();
  if (K.n() != n) throw Error(ErrorCode::MixedDimension, "subquotient over different rings");
  Table out(n, Orientation::Vstar);
  if (J.is_zero()) return out;
  std::vector<std::vector<int>> V(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    std::set<int> v{0};
    for (const auto& g : J.gens()) v.insert(g[static_cast<std::size_t>(l)]);
    for (const auto& g : K.gens()) v.insert(g[static_cast<std::size_t>(l)]);
    V[static_cast<std::size_t>(l)].assign(v.begin(), v.end());
  }
  // class -1: a_l < 0; class j: v_j <= a_l < v_{j+1}; the top class gives acyclic complexes
  auto representative = [&](int l, int c) { return c < 0 ? -1 : V[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)]; };
  auto class_gf = [&](int l, int c) {
    if (c < 0) return RatFunc::monomial(0, -1, 1);
    const auto& v = V[static_cast<std::size_t>(l)];
    LaurentPoly p;
    for (int a = v[static_cast<std::size_t>(c)]; a < v[static_cast<std::size_t>(c + 1)]; ++a) p.add_term(a, 1);
    return RatFunc(p);
  };
  auto member = [&](const MonomialIdeal& I, const Exponent& a, Mask F) {
    for (const auto& g : I.gens()) {
      bool ok = true;
      for (int l = 0; l < n && ok; ++l)
        if (!(F & (1u << l)) && g[static_cast<std::size_t>(l)] > a[static_cast<std::size_t>(l)]) ok = false;
      if (ok) return true;
    }
    return false;
  };
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<int> top(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) top[static_cast<std::size_t>(l)] = static_cast<int>(V[static_cast<std::size_t>(l)].size()) - 2;
  for (;;) {
    Exponent a(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) a[static_cast<std::size_t>(l)] = representative(l, cls[static_cast<std::size_t>(l)]);
    std::vector<Mask> faces;
    for (Mask F = 0; F < (1u << n); ++F) {
      bool ok = true;
      for (int l = 0; l < n && ok; ++l)
        if (!(F & (1u << l)) && a[static_cast<std::size_t>(l)] < 0) ok = false;
      if (ok && member(J, a, F) && !member(K, a, F)) faces.push_back(F);
    }
    if (!faces.empty()) {
      const auto h = coboundary_cohomology(faces, n);
      RatFunc gf;
      bool have_gf = false;
      for (int i = 0; i <= n; ++i) {
        if (h[static_cast<std::size_t>(i)] == 0) continue;
        if (!have_gf) {
          gf = RatFunc(LaurentPoly::constant(1));
          for (int l = 0; l < n; ++l) gf = gf * class_gf(l, cls[static_cast<std::size_t>(l)]);
          have_gf = true;
        }
        out[i] += gf * Rational(h[static_cast<std::size_t>(i)]);
      }
    }
    int l = 0;
    while (l < n && ++cls[static_cast<std::size_t>(l)] > top[static_cast<std::size_t>(l)]) {
      cls[static_cast<std::size_t>(l)] = -1;
      ++l;
    }
    if (l == n) break;
  }
  for (auto& e : out.entries) e = e.times_t(-shift);
  return out;
}

Table local_coh_cech(const GradedModule& M) {
  const int n = M.n();
  Table out(n, Orientation::Vstar);
  for (const auto& s : M.summands()) {
    const Table t = s.kind == SummandKind::Quotient ? local_coh_subquotient(MonomialIdeal::unit(n), s.ideal, s.shift)
                                                    : local_coh_subquotient(s.ideal, MonomialIdeal(n), s.shift);
    out = out + t;
  }
  return out;
}

int depth_of_table(const Table& H) {
  for (int i = 0; i <= H.n; ++i)
    if (!H[i].is_zero()) return i;
  return H.n + 1;
}

FiltrationResult dimension_filtration(const GradedModule& M) {
  const int n = M.n();
  FiltrationResult res;
  res.n = n;
  const MonomialIdeal zero(n), unit = MonomialIdeal::unit(n);
  for (const auto& s : M.summands()) {
    FiltrationSummand fs;
    if (s.kind == SummandKind::Ideal || s.ideal.is_zero()) {
      // torsion-free: only M_n is nonzero
      const MonomialIdeal top = s.kind == SummandKind::Ideal ? s.ideal : unit;
      for (int i = -1; i <= n; ++i) fs.K.push_back(i == n ? top : zero);
    } else {
      const auto comps = primary_decomposition(s.ideal);
      fs.K.push_back(s.ideal);
      for (int i = 0; i <= n; ++i) {
        MonomialIdeal k = unit;
        for (const auto& c : comps)
          if (c.dim(n) > i) k = ideal_intersect(k, c.component);
        fs.K.push_back(k);
      }
    }
    res.summands.push_back(std::move(fs));
  }
  res.nonzero.assign(static_cast<std::size_t>(n + 1), false);
  for (int i = 0; i <= n; ++i) {
    Table sub(n, Orientation::Vstar), fac(n, Orientation::Vstar);
    std::vector<Summand> pieces;
    bool expressible = true, any = false;
    for (std::size_t k = 0; k < M.summands().size(); ++k) {
      const auto& s = M.summands()[k];
      const auto& K = res.summands[k].K;
      const MonomialIdeal& Ki = K[static_cast<std::size_t>(i + 1)];
      const MonomialIdeal& Kprev = K[static_cast<std::size_t>(i)];
      const MonomialIdeal& base = K[0];
      if (!(Ki == base)) {
        res.nonzero[static_cast<std::size_t>(i)] = true;
        sub = sub + local_coh_subquotient(Ki, base, s.shift);
      }
      if (Ki == Kprev) continue;
      any = true;
      fac = fac + local_coh_subquotient(Ki, Kprev, s.shift);
      if (s.kind == SummandKind::Ideal) {
        pieces.push_back({SummandKind::Ideal, s.ideal, s.shift});
      } else if (Ki.is_unit()) {
        pieces.push_back({SummandKind::Quotient, Kprev, s.shift});
      } else if (Ki.gens().size() == 1) {
        const Exponent& g = Ki.gens().front();
        pieces.push_back({SummandKind::Quotient, ideal_colon(Kprev, g), s.shift - total_degree(g)});
      } else {
        expressible = false;
      }
    }
    res.submodule_tables.push_back(sub);
    if (!any) continue;
    FiltrationFactor f{i, fac, std::nullopt};
    if (expressible) f.module = GradedModule(n, pieces);
    res.factors.push_back(std::move(f));
  }
  return res;
}

int projective_dimension(const GradedModule& M) {
  const Table b = graded_betti(M);
  for (int i = b.n; i >= 0; --i)
    if (!b[i].is_zero()) return i;
  return -1;
}

Classification classify(const GradedModule& M) {
  if (M.is_zero()) throw Error(ErrorCode::ZeroModule, "classify of the zero module");
  const int n = M.n();
  Classification c;
  c.dim = pole_data(hilbert_series(M)).order;
  c.depth = n - projective_dimension(M);
  c.isCM = c.depth == c.dim;
  c.isACM = c.depth == c.dim - 1;
  c.isSeqCM = c.isSaCM = true;
  for (const auto& f : dimension_filtration(M).factors) {
    const int d = depth_of_table(f.table);
    if (d != f.dim) c.isSeqCM = false;
    if (d != f.dim && d != f.dim - 1) c.isSaCM = false;
  }
  return c;
}

}  // namespace lcdecomp
