#include "lcdecomp/gamma_dim3.hpp"

#include "lcdecomp/error.hpp"
#include "lcdecomp/monomial_engine.hpp"

namespace lcdecomp {

GammaResult gamma_module(const GradedModule& M) {
  if (M.n() != 3) throw Error(ErrorCode::InvalidParams, "gamma_module works over n = 3");
  if (M.is_zero()) throw Error(ErrorCode::ZeroModule, "gamma_module of the zero module");
  if (M.n() - projective_dimension(M) < 1) throw Error(ErrorCode::DepthZero, "module has depth 0");
  if (dimension_filtration(M).nonzero[1])
    throw Error(ErrorCode::HasDim1Submodule, "module has a nonzero submodule of dimension <= 1");
  std::vector<Summand> out;
  for (const auto& s : M.summands()) out.push_back({s.kind, ideal_saturate(s.ideal), s.shift});
  GradedModule G(M.n(), out);
  return {G, hilbert_series(G) - hilbert_series(M)};
}

std::pair<GradedModule, GradedModule> torsion_split(const GradedModule& M) {
  if (M.n() != 3) throw Error(ErrorCode::InvalidParams, "torsion_split works over n = 3");
  std::vector<Summand> tor, free;
  for (const auto& s : M.summands())
    (s.kind == SummandKind::Quotient && !s.ideal.is_zero() ? tor : free).push_back(s);
  return {GradedModule(M.n(), tor), GradedModule(M.n(), free)};
}

namespace {

void require_shape(const Table& T, const char* name) {
  if (T.n != 3 || T.orientation != Orientation::Vstar)
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " must be a Vstar table over n = 3");
}

void add(Verdict& v, const std::string& name, bool ok) {
  v.checks.push_back({name, ok});
  if (!ok) v.holds = false;
}

}  // namespace

Verdict thm68_check(const Table& HM, const Table& HTor, const Table& HQuot, const RatFunc& h) {
  require_shape(HM, "HM");
  require_shape(HTor, "HTor");
  require_shape(HQuot, "HQuot");
  if (!h.is_polynomial()) throw Error(ErrorCode::InfiniteLength, "hs_h1Q must be a Laurent polynomial");
  Table err(3, Orientation::Vstar);
  err[1] = h;
  err[2] = h;
  const Table r = HM - HTor - HQuot + err;
  Verdict v;
  v.residuals = r.entries;
  for (int i = 0; i <= 3; ++i) add(v, "entry " + std::to_string(i), r[i].is_zero());
  return v;
}

Verdict gdp_check(const DiagramTables& D, bool connecting_map_zero) {
  require_shape(D.F, "F");
  require_shape(D.Gamma, "Gamma");
  require_shape(D.GammaModF, "GammaModF");
  require_shape(D.McapF, "McapF");
  require_shape(D.M, "M");
  require_shape(D.MmodMcapF, "MmodMcapF");
  auto need_depth2 = [](const Table& T, const char* name) {
    if (depth_of_table(T) < 2) throw Error(ErrorCode::HypothesisViolated, std::string(name) + " has depth < 2");
  };
  need_depth2(D.Gamma, "Gamma");
  need_depth2(D.F, "F");
  need_depth2(D.GammaModF, "GammaModF");
  for (const auto* h : {&D.hs_FmodMcapF, &D.hs_GammaModM, &D.hs_GammaModMF})
    if (!h->is_polynomial()) throw Error(ErrorCode::HypothesisViolated, "a cokernel is not of finite length");
  if (!connecting_map_zero) throw Error(ErrorCode::HypothesisViolated, "connecting map asserted nonzero");

  Verdict v;
  add(v, "H(Gamma) = H(F) + H(Gamma/F)", D.Gamma == D.F + D.GammaModF);
  auto row = [&](const Table& sub, const Table& whole, const RatFunc& coker) {
    return sub[0].is_zero() && sub[1] == coker && sub[2] == whole[2] && sub[3] == whole[3];
  };
  add(v, "H(M cap F) against F", row(D.McapF, D.F, D.hs_FmodMcapF));
  add(v, "H(M/M cap F) against Gamma/F", row(D.MmodMcapF, D.GammaModF, D.hs_GammaModMF));
  add(v, "H(M) against Gamma", row(D.M, D.Gamma, D.hs_GammaModM));
  add(v, "HS(Gamma/M) = HS(F/M cap F) + HS(Gamma/(M + F))", D.hs_GammaModM == D.hs_FmodMcapF + D.hs_GammaModMF);
  const Table r = D.M - D.McapF - D.MmodMcapF;
  v.residuals = r.entries;
  add(v, "H(M) = H(M cap F) + H(M/M cap F)", r.is_zero());
  return v;
}

DiagramTables split_diagram(const GradedModule& M, const std::vector<std::size_t>& F_summands) {
  const int n = M.n();
  gamma_module(M);  // hypotheses on the whole module
  std::vector<bool> inF(M.summands().size(), false);
  for (auto k : F_summands) {
    if (k >= inF.size()) throw Error(ErrorCode::InvalidInput, "F summand index out of range");
    inF[k] = true;
  }
  std::vector<Summand> f, gmf, mcf, mmf;
  RatFunc hf, hg;
  for (std::size_t k = 0; k < inF.size(); ++k) {
    const auto& s = M.summands()[k];
    const GammaResult g = gamma_module(GradedModule(n, {s}));
    auto& gam = inF[k] ? f : gmf;
    auto& sub = inF[k] ? mcf : mmf;
    for (const auto& x : g.gamma.summands()) gam.push_back(x);
    sub.push_back(s);
    (inF[k] ? hf : hg) += g.quotient_hs;
  }
  const GradedModule F(n, f), GF(n, gmf), MF(n, mcf), MM(n, mmf);
  return {local_coh_cech(F),  local_coh_cech(F + GF), local_coh_cech(GF), local_coh_cech(MF),
          local_coh_cech(M),  local_coh_cech(MM),     hf,                 hf + hg,
          hg};
}

RatFunc matlis_dual_hs(const RatFunc& hs) {
  if (!hs.is_polynomial()) throw Error(ErrorCode::InfiniteLength, "Matlis dual needs a finite-length series");
  return invert_variable(hs, 0);
}

Verdict prop67_check(const RatFunc& a, const RatFunc& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw Error(ErrorCode::InfiniteLength, "both series must have finite length");
  Verdict v;
  v.residuals = {a - b};
  add(v, "HS(H^1(Q)) = HS(H^0(L))", a == b);
  return v;
}

}  // namespace lcdecomp
