#include "synthminer/linear.hpp"

#include <stdexcept>

namespace synthminer {

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m.front().size(), std::vector<long long>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  return t;
}

LinearCombination is_linear_combination(const IntMatrix& matrix, const std::vector<long long>& target) {
  const std::size_t rows = target.size();
  if (matrix.size() != rows) throw std::invalid_argument("is_linear_combination: row count mismatch");
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
  for (const auto& row : matrix)
    if (row.size() != cols) throw std::invalid_argument("is_linear_combination: ragged matrix");

  // Augmented [A | v] reduced to row echelon form.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(matrix[r][c]);
    a[r][cols] = static_cast<long>(target[r]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t k = c; k <= cols; ++k) a[rank][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r)
    if (a[r][cols] != 0) return {};

  LinearCombination out;
  out.dependent = true;
  out.witness.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) out.witness[pivot_col[r]] = a[r][cols];
  return out;
}

}  // namespace synthminer
