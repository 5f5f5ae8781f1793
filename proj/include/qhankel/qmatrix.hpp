#ifndef QHANKEL_QMATRIX_HPP
#define QHANKEL_QMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "qhankel/quaternion.hpp"

namespace qhankel {

/// Which linearity notion is meant: Left combinations put the coefficient
/// on the left of each vector (sum a_s v_s), Right ones on the right.
enum class Side { Left, Right };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);
inline Side other(Side side) { return side == Side::Left ? Side::Right : Side::Left; }

using QVector = std::vector<Quaternion>;

/// Dense row-major quaternion matrix.
class QMatrix {
 public:
  QMatrix() = default;
  /// rows x cols zero matrix.
  QMatrix(std::size_t rows, std::size_t cols, Regime regime = Regime::Exact);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data, Regime regime);
  /// Nested rows, e.g. {{a, b}, {c, d}}. Must be non-empty and rectangular.
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n, Regime regime = Regime::Exact);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::span<const QVector> columns, std::size_t rows,
                              Regime regime);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Regime regime() const { return regime_; }
  std::span<const Quaternion> data() const { return data_; }

  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Assigning an entry of another regime is rejected by set().
  void set(std::size_t r, std::size_t c, Quaternion q);

  QVector column(std::size_t c) const;
  QMatrix to_regime(Regime target) const;
  bool is_symmetric() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Regime regime_ = Regime::Exact;
  std::vector<Quaternion> data_;
};

/// Element of C = R + iR, built from two Scalars of the same regime.
struct Complex {
  Scalar re;
  Scalar im;

  Complex conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Complex inverse() const;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Complex& a, const Complex& b) = default;
};

/// Dense row-major complex matrix; codomain of the adjoint maps.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols, Regime regime = Regime::Exact);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Regime regime() const { return regime_; }

  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  CMatrix transpose() const;
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Regime regime_ = Regime::Exact;
  std::vector<Complex> data_;
};

/// (A ▷ B)_ik = sum_j a_ij b_jk.
QMatrix mul_direct(const QMatrix& a, const QMatrix& b);
/// (A ◁ B)_ik = sum_j b_jk a_ij.
QMatrix mul_reverse(const QMatrix& a, const QMatrix& b);

/// Plain transpose, no conjugation.
QMatrix transpose(const QMatrix& a);

QMatrix submatrix(const QMatrix& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);

// Complex adjoints. Each entry is split as q = a1 + a2 j with a1 = w + x i and
// a2 = y + z i, i.e. the j factor sits on the RIGHT of a2. Putting it on the
// left (q = a1 + j a2) conjugates a2 and breaks both homomorphisms below.
//
//   adjoint_direct(A)  = [[A1, A2], [-conj(A2), conj(A1)]]
//   adjoint_reverse(A) = [[A1, -conj(A2)], [A2, conj(A1)]]
//
// adjoint_direct(A ▷ B) = adjoint_direct(A) adjoint_direct(B), and the same for
// the reverse pair.
CMatrix adjoint_direct(const QMatrix& a);
CMatrix adjoint_reverse(const QMatrix& a);

}  // namespace qhankel

#endif  // QHANKEL_QMATRIX_HPP
