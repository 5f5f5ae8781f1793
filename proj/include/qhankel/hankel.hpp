#ifndef QHANKEL_HANKEL_HPP
#define QHANKEL_HANKEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qhankel/lrr.hpp"
#include "qhankel/qmatrix.hpp"
#include "qhankel/rank.hpp"
#include "qhankel/sequence.hpp"

namespace qhankel {

/// F x (N-F+1) matrix with entry (i, j) = h_{i+j-1} (1-based).
/// Throws DimensionError unless 1 <= F <= N.
QMatrix hankel_map(const QSequence& h, std::size_t rows);

/// Staircase of shifted tails of h: column n (1-based) is (h_n, ..., h_N).
class TriangleTable {
 public:
  explicit TriangleTable(QSequence source) : source_(std::move(source)) {}

  const QSequence& source() const { return source_; }
  std::size_t size() const { return source_.size(); }

  /// (h_n, ..., h_N), length N-n+1.
  QVector column(std::size_t n) const;
  /// First `length` entries of column n.
  QVector truncated_column(std::size_t n, std::size_t length) const;

 private:
  QSequence source_;
};

/// Is column n of the triangle table a `side`-combination of columns
/// 1..n-1, each cut to the length of column n? For n = 1 the predecessor set
/// is empty, so only an all-zero sequence is dependent there.
SolveResult prefix_dependent(const QSequence& h, std::size_t n, Side side);

/// Length of the leading run of triangle-table columns that are not prefix
/// dependent: (first dependent column) - 1, or N when none is. The all-zero
/// sequence gets m = 0.
std::size_t compute_m(const QSequence& h, Side side);

/// min(F, G, m, F+G-m).
std::size_t predicted_rank(std::size_t rows, std::size_t cols, std::size_t m);

struct ShapeRank {
  std::size_t rows;  // F
  std::size_t cols;  // G = N - F + 1
  std::size_t rank_left;
  std::size_t rank_right;
  std::size_t predicted;

  bool matches() const { return rank_left == predicted && rank_right == predicted; }
  friend bool operator==(const ShapeRank&, const ShapeRank&) = default;
};

struct HankelAnalysis {
  std::size_t length = 0;  // N
  std::size_t m_left = 0;
  std::size_t m_right = 0;
  /// One row per F = 1..N.
  std::vector<ShapeRank> per_shape;
  /// Minimal-order recurrences fitted when m < N and one exists.
  std::optional<QVector> lrr_left;
  std::optional<QVector> lrr_right;

  /// m_left == m_right and every shape matches the predicted rank.
  bool consistent() const;
  friend bool operator==(const HankelAnalysis&, const HankelAnalysis&) = default;
};

/// Full report for an exact sequence. Per-shape ranks are computed in
/// parallel (OpenMP) over F; predictions use m_left.
HankelAnalysis analyze(const QSequence& h);
/// Single-threaded reference for analyze(); results are identical.
HankelAnalysis analyze_serial(const QSequence& h);

struct ExtendOptions {
  /// Free choice of h_{N+1} when m = N; defaults to h_N.
  std::optional<Quaternion> next_term;
};

/// Extends h by `count` terms so that the infinite Hankel matrix of the
/// extension has rank m (the smallest possible). When m = N the order-1 rule
/// h_n = (h_{N+1} h_N^-1) h_{n-1} is used (mirrored for Side::Right);
/// otherwise the coefficients of the first prefix-dependent column continue
/// the sequence as an order-m recurrence. An all-zero input is returned
/// zero-extended with a warning on stderr.
QSequence extend_minimal(const QSequence& h, Side side, std::size_t count,
                         const ExtendOptions& options = {});

}  // namespace qhankel

#endif  // QHANKEL_HANKEL_HPP
