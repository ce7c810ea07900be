#include "lcdecomp/table.hpp"

#include "lcdecomp/error.hpp"

namespace lcdecomp {

Table::Table(int n_, Orientation o) : n(n_), orientation(o), entries(static_cast<std::size_t>(n_ + 1)) {
  if (n_ < 0) throw Error(ErrorCode::InvalidInput, "table with negative n");
}

Table::Table(int n_, Orientation o, std::vector<RatFunc> e) : n(n_), orientation(o), entries(std::move(e)) {
  if (n_ < 0 || entries.size() != static_cast<std::size_t>(n_ + 1))
    throw Error(ErrorCode::InvalidInput, "table needs exactly n+1 entries");
}

bool Table::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<int> Table::support() const {
  std::vector<int> s;
  for (int i = 0; i <= n; ++i)
    if (!entries[static_cast<std::size_t>(i)].is_zero()) s.push_back(i);
  return s;
}

static void check_compatible(const Table& a, const Table& b) {
  if (a.n != b.n) throw Error(ErrorCode::MixedDimension, "tables over different rings");
  if (a.orientation != b.orientation) throw Error(ErrorCode::MixedOrientation, "V and Vstar tables mixed");
}

Table table_combine(const std::vector<std::pair<Rational, Table>>& terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidInput, "table_combine of an empty list");
  Table out(terms.front().second.n, terms.front().second.orientation);
  for (const auto& [c, t] : terms) {
    check_compatible(out, t);
    for (int i = 0; i <= out.n; ++i) out[i] += c * t[i];
  }
  return out;
}

Table operator+(const Table& a, const Table& b) { return table_combine({{1, a}, {1, b}}); }
Table operator-(const Table& a, const Table& b) { return table_combine({{1, a}, {-1, b}}); }
Table operator*(const Rational& c, const Table& a) { return table_combine({{c, a}}); }

std::string orientation_name(Orientation o) { return o == Orientation::V ? "V" : "Vstar"; }

}  // namespace lcdecomp
