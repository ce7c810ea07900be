#include "lcdecomp/cone_maps.hpp"

#include "lcdecomp/error.hpp"

namespace lcdecomp {

namespace {

void require(const Table& t, Orientation o, const char* op) {
  if (t.orientation != o)
    throw Error(ErrorCode::MixedOrientation, std::string(op) + " expects a " + orientation_name(o) + " table");
}

Table dualize(const Table& in, Orientation to) {
  Table out(in.n, to);
  for (int i = 0; i <= in.n; ++i) out[i] = invert_variable(in[in.n - i], -in.n);
  return out;
}

}  // namespace

Table L0(const Table& E) {
  require(E, Orientation::V, "L0");
  return dualize(E, Orientation::Vstar);
}

Table L0_inv(const Table& H) {
  require(H, Orientation::Vstar, "L0_inv");
  return dualize(H, Orientation::V);
}

Table L1(const Table& beta) {
  require(beta, Orientation::V, "L1");
  Table out(beta.n, Orientation::V);
  RatFunc tail, all;
  for (int i = 0; i <= beta.n; ++i) {
    RatFunc s = i % 2 ? -beta[i] : beta[i];
    all += s;
    if (i >= 2) tail += s;
  }
  if (beta.n >= 1) {
    out[0] = tail.times_one_minus_t(-beta.n);
    out[1] = all.times_one_minus_t(-beta.n);
  } else {
    out[0] = all;
  }
  return out;
}

Table L2(const Table& f) {
  require(f, Orientation::V, "L2");
  if (f.n < 1) throw Error(ErrorCode::InvalidParams, "L2 needs n >= 1");
  Table out(f.n, Orientation::V);
  out[0] = f[1] - f[0];
  out[1] = f[0];
  for (int i = 2; i <= f.n; ++i) out[i] = f[i];
  for (auto& e : out.entries) e = e.times_one_minus_t(f.n);
  return out;
}

Table L2_inv(const Table& g) {
  require(g, Orientation::V, "L2_inv");
  if (g.n < 1) throw Error(ErrorCode::InvalidParams, "L2_inv needs n >= 1");
  Table out(g.n, Orientation::V);
  out[0] = g[1];
  out[1] = g[0] + g[1];
  for (int i = 2; i <= g.n; ++i) out[i] = g[i];
  for (auto& e : out.entries) e = e.times_one_minus_t(-g.n);
  return out;
}

std::pair<RatFunc, RatFunc> transpose_betti(const Table& betaN) {
  if (betaN.n < 1) throw Error(ErrorCode::InvalidParams, "transpose_betti needs n >= 1");
  return {invert_variable(betaN[1], 0), invert_variable(betaN[0], 0)};
}

}  // namespace lcdecomp
