#ifndef LCDECOMP_TABLE_HPP
#define LCDECOMP_TABLE_HPP

#include "lcdecomp/ratfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lcdecomp {

/// n+1 entries indexed 0..n. Orientation only affects expansion and display.
struct Table {
  int n = 0;
  Orientation orientation = Orientation::V;
  std::vector<RatFunc> entries;

  Table() = default;
  Table(int n, Orientation o);
  Table(int n, Orientation o, std::vector<RatFunc> entries);

  const RatFunc& operator[](int i) const { return entries.at(static_cast<std::size_t>(i)); }
  RatFunc& operator[](int i) { return entries.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  /// Indices with nonzero entries, ascending.
  std::vector<int> support() const;

  friend bool operator==(const Table& a, const Table& b) = default;
};

/// Exact linear combination. All tables must share n and orientation.
Table table_combine(const std::vector<std::pair<Rational, Table>>& terms);

Table operator+(const Table& a, const Table& b);
Table operator-(const Table& a, const Table& b);
Table operator*(const Rational& c, const Table& a);

std::string orientation_name(Orientation o);

}  // namespace lcdecomp

#endif
