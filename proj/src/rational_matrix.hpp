#ifndef QHANKEL_SRC_RATIONAL_MATRIX_HPP
#define QHANKEL_SRC_RATIONAL_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace qhankel::detail {

/// Dense row-major matrix of GMP rationals, used by the real-representation
/// rank and the one-sided solver.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

std::size_t rational_rank(RationalMatrix m);

/// Solves m x = rhs by Gauss-Jordan elimination. Free unknowns are set to
/// zero. Returns nullopt for an inconsistent system.
std::optional<std::vector<mpq_class>> rational_solve(RationalMatrix m, std::vector<mpq_class> rhs);

}  // namespace qhankel::detail

#endif  // QHANKEL_SRC_RATIONAL_MATRIX_HPP
