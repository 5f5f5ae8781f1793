#include "qhankel/hankel.hpp"

#include <algorithm>
#include <iostream>
#include <string>

#include "qhankel/error.hpp"

namespace qhankel {

QMatrix hankel_map(const QSequence& h, std::size_t rows) {
  const std::size_t n = h.size();
  if (rows < 1 || rows > n)
    throw DimensionError("Hankel row count " + std::to_string(rows) + " outside 1.." +
                         std::to_string(n));
  const std::size_t cols = n - rows + 1;
  std::vector<Quaternion> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) data.push_back(h[i + j]);
  return QMatrix(rows, cols, std::move(data), h.regime());
}

QVector TriangleTable::column(std::size_t n) const {
  if (n < 1 || n > size())
    throw DimensionError("triangle table column " + std::to_string(n) + " outside 1.." +
                         std::to_string(size()));
  return QVector(source_.entries().begin() + static_cast<std::ptrdiff_t>(n - 1),
                 source_.entries().end());
}

QVector TriangleTable::truncated_column(std::size_t n, std::size_t length) const {
  QVector col = column(n);
  if (length > col.size()) throw DimensionError("truncation longer than the column");
  col.resize(length);
  return col;
}

SolveResult prefix_dependent(const QSequence& h, std::size_t n, Side side) {
  const TriangleTable table(h);
  const QVector target = table.column(n);
  const std::size_t length = target.size();
  std::vector<QVector> predecessors;
  predecessors.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) predecessors.push_back(table.truncated_column(k, length));
  return solve_one_sided(predecessors, target, side);
}

std::size_t compute_m(const QSequence& h, Side side) {
  for (std::size_t n = 1; n <= h.size(); ++n)
    if (prefix_dependent(h, n, side).solvable) return n - 1;
  return h.size();
}

std::size_t predicted_rank(std::size_t rows, std::size_t cols, std::size_t m) {
  if (rows < 1 || cols < 1 || m > rows + cols - 1)
    throw DomainError("predicted_rank needs F, G >= 1 and m <= F+G-1");
  return std::min({rows, cols, m, rows + cols - m});
}

bool HankelAnalysis::consistent() const {
  return m_left == m_right &&
         std::all_of(per_shape.begin(), per_shape.end(), [](const ShapeRank& s) { return s.matches(); });
}

namespace {

ShapeRank shape_rank(const QSequence& h, std::size_t rows, std::size_t m) {
  const QMatrix hm = hankel_map(h, rows);
  return {rows, hm.cols(), rank_elimination(hm, Side::Left), rank_elimination(hm, Side::Right),
          predicted_rank(rows, hm.cols(), m)};
}

std::optional<QVector> minimal_fit(const QSequence& h, Side side, std::size_t m) {
  if (m >= h.size()) return std::nullopt;
  auto order = minimal_order(h, side);
  if (!order) return std::nullopt;
  return fit(h, *order, side).coefficients;
}

void require_exact(const QSequence& h) {
  if (h.regime() != Regime::Exact) throw RegimeError("Hankel analysis requires the exact regime");
}

}  // namespace

HankelAnalysis analyze_serial(const QSequence& h) {
  require_exact(h);
  HankelAnalysis out;
  out.length = h.size();
  out.m_left = compute_m(h, Side::Left);
  out.m_right = compute_m(h, Side::Right);
  for (std::size_t f = 1; f <= h.size(); ++f) out.per_shape.push_back(shape_rank(h, f, out.m_left));
  out.lrr_left = minimal_fit(h, Side::Left, out.m_left);
  out.lrr_right = minimal_fit(h, Side::Right, out.m_right);
  return out;
}

HankelAnalysis analyze(const QSequence& h) {
  require_exact(h);
  HankelAnalysis out;
  out.length = h.size();
  out.m_left = compute_m(h, Side::Left);
  out.m_right = compute_m(h, Side::Right);

  const auto n = static_cast<std::ptrdiff_t>(h.size());
  std::vector<std::optional<ShapeRank>> shapes(h.size());
  std::vector<std::exception_ptr> errors(h.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t f = 1; f <= n; ++f) {
    const auto idx = static_cast<std::size_t>(f - 1);
    try {
      shapes[idx] = shape_rank(h, static_cast<std::size_t>(f), out.m_left);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& s : shapes) out.per_shape.push_back(*s);

  out.lrr_left = minimal_fit(h, Side::Left, out.m_left);
  out.lrr_right = minimal_fit(h, Side::Right, out.m_right);
  return out;
}

QSequence extend_minimal(const QSequence& h, Side side, std::size_t count,
                         const ExtendOptions& options) {
  if (h.regime() != Regime::Exact) throw RegimeError("extend_minimal requires the exact regime");
  const std::size_t n = h.size();
  if (h.is_all_zero()) {
    std::cerr << "warning: extending an all-zero sequence; the extension is zero\n";
    return h.appended(std::vector<Quaternion>(count, Quaternion::zero(h.regime())));
  }
  if (count == 0) return h;

  const std::size_t m = compute_m(h, side);
  LrrSpec spec;
  if (m == n) {
    // h_1 = ... = h_{N-1} = 0 and h_N != 0.
    const Quaternion& last = h[n - 1];
    const Quaternion next = options.next_term.value_or(last);
    if (next.is_zero()) throw DomainError("the chosen h_{N+1} must be nonzero");
    if (next.regime() != h.regime()) throw RegimeError("h_{N+1} regime differs from the sequence");
    const Quaternion ratio = side == Side::Left ? next * last.inverse() : last.inverse() * next;
    spec = LrrSpec::one_sided(side, {ratio});
  } else {
    SolveResult dep = prefix_dependent(h, m + 1, side);
    if (!dep.solvable) throw InternalError("first dependent column is not dependent");
    spec = LrrSpec::one_sided(side, std::move(dep.coefficients));
  }
  std::vector<Quaternion> tail(h.entries().end() - static_cast<std::ptrdiff_t>(spec.order),
                               h.entries().end());
  const QSequence extended_tail = generate(QSequence(std::move(tail)), spec, count);
  return h.appended(extended_tail.entries().subspan(spec.order));
}

}  // namespace qhankel
