#include "rational_matrix.hpp"

#include "qhankel/error.hpp"

namespace qhankel::detail {

std::size_t rational_rank(RationalMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  mpq_class f;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, pivot_row);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      f = m(r, c) / m(pivot_row, c);
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= f * m(pivot_row, k);
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::optional<std::vector<mpq_class>> rational_solve(RationalMatrix m, std::vector<mpq_class> rhs) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rhs.size() != rows) throw InternalError("rational_solve: rhs length mismatch");
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  mpq_class f;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, pivot_row);
    std::swap(rhs[p], rhs[pivot_row]);

    const mpq_class pivot = m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) /= pivot;
    rhs[pivot_row] /= pivot;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(m(r, c)) == 0) continue;
      f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= f * m(pivot_row, k);
      rhs[r] -= f * rhs[pivot_row];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (sgn(rhs[r]) != 0) return std::nullopt;

  std::vector<mpq_class> x(cols);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = rhs[r];
  return x;
}

}  // namespace qhankel::detail
