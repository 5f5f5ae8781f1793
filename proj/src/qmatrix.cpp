#include "qhankel/qmatrix.hpp"

#include <string>

#include "qhankel/error.hpp"

namespace qhankel {

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  if (text == "left") return Side::Left;
  if (text == "right") return Side::Right;
  throw ParseError("unknown side '" + std::string(text) + "'");
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, Regime regime)
    : rows_(rows), cols_(cols), regime_(regime), data_(rows * cols, Quaternion::zero(regime)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data, Regime regime)
    : rows_(rows), cols_(cols), regime_(regime), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw DimensionError("matrix data length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  for (const auto& q : data_)
    if (q.regime() != regime) throw RegimeError("matrix entries must share one regime");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0)
    throw DimensionError("nested-list matrix must be non-empty");
  rows_ = rows.size();
  cols_ = rows.begin()->size();
  regime_ = rows.begin()->begin()->regime();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged nested-list matrix");
    for (const auto& q : row) {
      if (q.regime() != regime_) throw RegimeError("matrix entries must share one regime");
      data_.push_back(q);
    }
  }
}

QMatrix QMatrix::identity(std::size_t n, Regime regime) {
  QMatrix m(n, n, regime);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Quaternion::one(regime);
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns, std::size_t rows, Regime regime) {
  QMatrix m(rows, columns.size(), regime);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void QMatrix::set(std::size_t r, std::size_t c, Quaternion q) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  if (q.regime() != regime_) throw RegimeError("entry regime differs from matrix regime");
  data_[r * cols_ + c] = std::move(q);
}

QVector QMatrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index out of range");
  QVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

QMatrix QMatrix::to_regime(Regime target) const {
  std::vector<Quaternion> data;
  data.reserve(data_.size());
  for (const auto& q : data_) data.push_back(q.to_regime(target));
  return QMatrix(rows_, cols_, std::move(data), target);
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (!((*this)(r, c) == (*this)(c, r))) return false;
  return true;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.regime_ == b.regime_ && a.data_ == b.data_;
}

Complex Complex::inverse() const {
  Scalar n = re * re + im * im;
  if (n.sign() == 0) throw DomainError("inverse of complex zero");
  return {re / n, -im / n};
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, Regime regime)
    : rows_(rows),
      cols_(cols),
      regime_(regime),
      data_(rows * cols, Complex{Scalar::zero(regime), Scalar::zero(regime)}) {}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_, regime_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("complex product: inner dimensions differ");
  if (a.regime_ != b.regime_) throw RegimeError("complex product: regimes differ");
  CMatrix out(a.rows_, b.cols_, a.regime_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < b.cols_; ++k) {
      Complex acc = out(i, k);
      for (std::size_t j = 0; j < a.cols_; ++j) acc = acc + a(i, j) * b(j, k);
      out(i, k) = acc;
    }
  return out;
}

namespace {

void check_conformable(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  if (a.regime() != b.regime()) throw RegimeError("matrix product: regimes differ");
}

}  // namespace

QMatrix mul_direct(const QMatrix& a, const QMatrix& b) {
  check_conformable(a, b);
  QMatrix out(a.rows(), b.cols(), a.regime());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Quaternion acc = Quaternion::zero(a.regime());
      for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, k);
      out.set(i, k, std::move(acc));
    }
  return out;
}

QMatrix mul_reverse(const QMatrix& a, const QMatrix& b) {
  check_conformable(a, b);
  QMatrix out(a.rows(), b.cols(), a.regime());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Quaternion acc = Quaternion::zero(a.regime());
      for (std::size_t j = 0; j < a.cols(); ++j) acc += b(j, k) * a(i, j);
      out.set(i, k, std::move(acc));
    }
  return out;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows(), a.regime());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t.set(c, r, a(r, c));
  return t;
}

QMatrix submatrix(const QMatrix& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
  QMatrix out(rows.size(), cols.size(), a.regime());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] >= a.rows()) throw DimensionError("submatrix row index out of range");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] >= a.cols()) throw DimensionError("submatrix column index out of range");
      out.set(r, c, a(rows[r], cols[c]));
    }
  }
  // Column indices must be validated even when no rows were selected.
  for (std::size_t c : cols)
    if (c >= a.cols()) throw DimensionError("submatrix column index out of range");
  return out;
}

namespace {

enum class AdjointKind { Direct, Reverse };

CMatrix adjoint(const QMatrix& a, AdjointKind kind) {
  const std::size_t n = a.rows(), m = a.cols();
  CMatrix out(2 * n, 2 * m, a.regime());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const Quaternion& q = a(r, c);
      Complex a1{q.w(), q.x()};
      Complex a2{q.y(), q.z()};
      out(r, c) = a1;
      out(n + r, m + c) = a1.conj();
      if (kind == AdjointKind::Direct) {
        out(r, m + c) = a2;
        out(n + r, c) = -a2.conj();
      } else {
        out(r, m + c) = -a2.conj();
        out(n + r, c) = a2;
      }
    }
  return out;
}

}  // namespace

CMatrix adjoint_direct(const QMatrix& a) { return adjoint(a, AdjointKind::Direct); }
CMatrix adjoint_reverse(const QMatrix& a) { return adjoint(a, AdjointKind::Reverse); }

}  // namespace qhankel
