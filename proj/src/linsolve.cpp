#include "onsager/linsolve.hpp"

#include <limits>

namespace onsager {

namespace {

std::size_t pivot_cost(const RatFunc& f) {
  std::size_t cost = f.num().size();
  if (!f.is_polynomial()) cost += 1000 + f.den().size();
  if (f.num().is_monomial()) cost = f.num().is_constant() ? 0 : 1;
  return cost;
}

RatFunc tidy(const RatFunc& f) { return f.is_polynomial() ? f : f.simplified(); }

}  // namespace

LinearSolution solve_linear(Matrix<RatFunc> a, Matrix<RatFunc> b) {
  if (a.rows() != b.rows()) throw InputError("solve_linear: row counts differ");
  const std::size_t rows = a.rows();
  const std::size_t n = a.cols();
  const std::size_t m = b.cols();
  std::vector<bool> used(rows, false);
  std::vector<std::size_t> pivot_row(n, rows);
  bool free_column = false;

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = rows;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows; ++r) {
      if (used[r] || a(r, c).is_zero()) continue;
      std::size_t cost = pivot_cost(a(r, c));
      if (cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == rows) {
      free_column = true;
      continue;
    }
    used[best] = true;
    pivot_row[c] = best;
    RatFunc inv = a(best, c).inverse();
    for (std::size_t j = 0; j < n; ++j)
      if (!a(best, j).is_zero()) a(best, j) = tidy(a(best, j) * inv);
    for (std::size_t j = 0; j < m; ++j)
      if (!b(best, j).is_zero()) b(best, j) = tidy(b(best, j) * inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == best || a(r, c).is_zero()) continue;
      RatFunc factor = a(r, c);
      for (std::size_t j = 0; j < n; ++j)
        if (!a(best, j).is_zero()) a(r, j) = tidy(a(r, j) - factor * a(best, j));
      for (std::size_t j = 0; j < m; ++j)
        if (!b(best, j).is_zero()) b(r, j) = tidy(b(r, j) - factor * b(best, j));
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (used[r]) continue;
    bool zero_row = true;
    for (std::size_t c = 0; c < n && zero_row; ++c) zero_row = a(r, c).is_zero();
    if (!zero_row) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (!b(r, j).is_zero()) return {LinearSolution::Kind::inconsistent, {}};
  }
  if (free_column) return {LinearSolution::Kind::underdetermined, {}};
  LinearSolution sol;
  sol.x = Matrix<RatFunc>(n, m);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < m; ++j) sol.x(c, j) = b(pivot_row[c], j);
  return sol;
}

}  // namespace onsager
