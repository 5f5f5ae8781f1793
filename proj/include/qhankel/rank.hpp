#ifndef QHANKEL_RANK_HPP
#define QHANKEL_RANK_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qhankel/qmatrix.hpp"

namespace qhankel {

enum class RankMethod { Elimination, ComplexAdjoint, RealAdjoint, NumericSVD };

std::string_view to_string(RankMethod method);
RankMethod parse_rank_method(std::string_view text);
/// True for the three tolerance-free methods.
bool is_exact_method(RankMethod method);

inline constexpr double kDefaultRankTolerance = 1e-8;

struct MethodRanks {
  RankMethod method;
  std::size_t rank_left;
  std::size_t rank_right;
};

struct RankReport {
  std::size_t rank_left = 0;
  std::size_t rank_right = 0;
  RankMethod method_used = RankMethod::Elimination;
  /// Set when every requested method produced the same pair of ranks.
  bool agree = true;
  std::vector<MethodRanks> per_method;
};

struct SolveResult {
  bool solvable = false;
  /// One coefficient per input vector; empty when not solvable.
  QVector coefficients;
};

/// Quaternion Gaussian elimination. Side::Right reduces with row updates
/// r_i <- r_i + q r_k (q on the left), which keep every right-linear relation
/// among the columns intact; Side::Left multiplies rows on the right instead.
/// The pivot count is the rank on that side. Exact regime only.
std::size_t rank_elimination(const QMatrix& a, Side side);

/// Half the complex rank of adjoint_direct (Right) or adjoint_reverse (Left),
/// computed by exact complex elimination. Throws InternalError if the complex
/// rank is odd.
std::size_t rank_adjoint(const QMatrix& a, Side side);

/// A quarter of the real rank of the 4r x 4c matrix whose blocks are the real
/// matrices of left-multiplication (Right) or right-multiplication (Left) by
/// each entry.
std::size_t rank_real_adjoint(const QMatrix& a, Side side);

/// Counts singular values of the matching complex adjoint above
/// tol * sigma_max and halves the count. Float regime only.
std::size_t rank_numeric(const QMatrix& a, Side side, double tol = kDefaultRankTolerance);

std::size_t rank_by(RankMethod method, const QMatrix& a, Side side,
                    double tol = kDefaultRankTolerance);

/// Runs every method in `methods` on both sides. rank_left/rank_right and
/// method_used come from the first method.
RankReport rank_report(const QMatrix& a, std::span<const RankMethod> methods,
                       double tol = kDefaultRankTolerance);

/// Side::Left: find alpha with sum_s alpha_s v_s = target.
/// Side::Right: find beta with sum_s v_s beta_s = target.
/// Solved as a real linear system with four unknowns per coefficient. Returns
/// the particular solution with every free real unknown set to zero.
SolveResult solve_one_sided(std::span<const QVector> vectors, const QVector& target, Side side);

/// sum_s alpha_s v_s (Left) or sum_s v_s beta_s (Right).
QVector combine(std::span<const QVector> vectors, std::span<const Quaternion> coefficients,
                Side side);

/// Real 4x4 matrix of p -> q p, row-major, acting on (w, x, y, z).
std::array<Scalar, 16> left_mult_matrix(const Quaternion& q);
/// Real 4x4 matrix of p -> p q.
std::array<Scalar, 16> right_mult_matrix(const Quaternion& q);

}  // namespace qhankel

#endif  // QHANKEL_RANK_HPP
