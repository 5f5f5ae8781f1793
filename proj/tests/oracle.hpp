// Test-only reference computations. Nothing here calls the library's
// products or elimination kernels, so it can check them independently.
#ifndef QHANKEL_TESTS_ORACLE_HPP
#define QHANKEL_TESTS_ORACLE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "qhankel/hankel.hpp"
#include "qhankel/qmatrix.hpp"

namespace oracle {

using Real = long double;
using Block = std::array<std::array<Real, 4>, 4>;

inline std::array<Real, 4> components(const qhankel::Quaternion& q) {
  return {static_cast<Real>(q.w().to_double()), static_cast<Real>(q.x().to_double()),
          static_cast<Real>(q.y().to_double()), static_cast<Real>(q.z().to_double())};
}

// p -> q p, written out from the multiplication table.
inline Block left_block(const qhankel::Quaternion& q) {
  auto [w, x, y, z] = components(q);
  return {{{w, -x, -y, -z}, {x, w, -z, y}, {y, z, w, -x}, {z, -y, x, w}}};
}

// p -> p q
inline Block right_block(const qhankel::Quaternion& q) {
  auto [w, x, y, z] = components(q);
  return {{{w, -x, -y, -z}, {x, w, z, -y}, {y, -z, w, x}, {z, y, -x, w}}};
}

// Rank by Gaussian elimination with partial pivoting; fine for the small,
// well-scaled integer matrices used in the tests.
inline std::size_t real_rank(std::vector<std::vector<Real>> m, Real eps = 1e-9L) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[best][c])) best = r;
    if (std::fabs(m[best][c]) <= eps) continue;
    std::swap(m[best], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Real f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Left rank: dimension of {sum alpha_c a_c}; right rank: {sum a_c beta_c}.
inline std::size_t quaternion_rank(const qhankel::QMatrix& a, qhankel::Side side) {
  std::vector<std::vector<Real>> m(4 * a.rows(), std::vector<Real>(4 * a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Block b = side == qhankel::Side::Left ? right_block(a(r, c)) : left_block(a(r, c));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[4 * r + i][4 * c + j] = b[i][j];
    }
  const std::size_t rr = real_rank(std::move(m));
  return rr / 4;
}

/// Brute-force m: scan triangle-table columns, testing dependence by
/// comparing ranks with and without the candidate column.
inline std::size_t brute_force_m(const qhankel::QSequence& h, qhankel::Side side) {
  const std::size_t n = h.size();
  for (std::size_t col = 1; col <= n; ++col) {
    const std::size_t len = n - col + 1;
    qhankel::QMatrix prev(len, col - 1, h.regime()), with(len, col, h.regime());
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t k = 0; k + 1 < col; ++k) {
        prev.set(r, k, h[k + r]);
        with.set(r, k, h[k + r]);
      }
      with.set(r, col - 1, h[col - 1 + r]);
    }
    if (quaternion_rank(prev, side) == quaternion_rank(with, side)) return col - 1;
  }
  return n;
}

}  // namespace oracle

#endif  // QHANKEL_TESTS_ORACLE_HPP
