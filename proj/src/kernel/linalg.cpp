#include "thv/linalg.hpp"

#include <utility>

namespace thv {

std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols) {
  const auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace thv
