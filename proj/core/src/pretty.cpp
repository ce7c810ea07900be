#include "lcdecomp/pretty.hpp"

#include "lcdecomp/error.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace lcdecomp {

std::string pretty_table(const Table& t, int lo, int hi) {
  std::ostringstream os;
  os << "n = " << t.n << ", orientation " << orientation_name(t.orientation) << ", window [" << lo << ", " << hi
     << "]\n";
  for (int i = 0; i <= t.n; ++i) {
    os << "  [" << i << "] " << t[i].to_string() << "\n      ";
    const auto c = expand(t[i], lo, hi, t.orientation);
    bool any = false;
    for (int d = lo; d <= hi; ++d) {
      const Rational& v = c[static_cast<std::size_t>(d - lo)];
      if (v == 0) continue;
      os << (any ? "  " : "") << d << ":" << display_rational(v);
      any = true;
    }
    if (!any) os << "(no terms in window)";
    os << "\n";
  }
  return os.str();
}

std::string pretty_betti(const Table& beta) {
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (int i = 0; i <= beta.n; ++i) {
    if (!beta[i].is_polynomial()) throw Error(ErrorCode::InvalidInput, "Betti display needs polynomial entries");
    if (beta[i].is_zero()) continue;
    lo = std::min(lo, beta[i].numerator().min_degree() - i);
    hi = std::max(hi, beta[i].numerator().max_degree() - i);
  }
  if (lo > hi) return "(zero table)\n";
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{""}, total{"total:"};
  for (int i = 0; i <= beta.n; ++i) {
    head.push_back(std::to_string(i));
    total.push_back(display_rational(beta[i].numerator().eval_at_one()));
  }
  grid.push_back(head);
  grid.push_back(total);
  for (int j = lo; j <= hi; ++j) {
    std::vector<std::string> row{std::to_string(j) + ":"};
    for (int i = 0; i <= beta.n; ++i) {
      const Rational c = beta[i].numerator().coeff(i + j);
      row.push_back(c == 0 ? "." : display_rational(c));
    }
    grid.push_back(row);
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& r : grid)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (const auto& r : grid) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width[c])) << r[c];
    os << "\n";
  }
  return os.str();
}

std::string pretty_decomposition(const Decomposition& d) {
  std::ostringstream os;
  for (const auto& t : d.terms) os << "  " << display_rational(t.coeff) << " * " << term_generator_string(t.generator) << "\n";
  os << "  residual " << (d.residual_zero() ? "zero" : "NONZERO") << "\n";
  return os.str();
}

}  // namespace lcdecomp
