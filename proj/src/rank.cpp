#include "qhankel/rank.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <iostream>
#include <string>

#include "qhankel/error.hpp"
#include "rational_matrix.hpp"

namespace qhankel {

std::string_view to_string(RankMethod method) {
  switch (method) {
    case RankMethod::Elimination: return "elimination";
    case RankMethod::ComplexAdjoint: return "adjoint";
    case RankMethod::RealAdjoint: return "real_adjoint";
    case RankMethod::NumericSVD: return "numeric";
  }
  return "?";
}

RankMethod parse_rank_method(std::string_view text) {
  if (text == "elimination") return RankMethod::Elimination;
  if (text == "adjoint") return RankMethod::ComplexAdjoint;
  if (text == "real_adjoint") return RankMethod::RealAdjoint;
  if (text == "numeric") return RankMethod::NumericSVD;
  throw ParseError("unknown rank method '" + std::string(text) + "'");
}

bool is_exact_method(RankMethod method) { return method != RankMethod::NumericSVD; }

namespace {

void require_exact(Regime regime, const char* what) {
  if (regime != Regime::Exact)
    throw RegimeError(std::string(what) + " requires the exact regime");
}

}  // namespace

std::size_t rank_elimination(const QMatrix& a, Side side) {
  require_exact(a.regime(), "rank_elimination");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<QVector> m(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r].push_back(a(r, c));

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    const QVector& prow = m[pivot_row];
    const Quaternion inv = prow[c].inverse();
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      if (side == Side::Right) {
        // r_i <- r_i - f r_p with f = m_rc m_pc^-1 on the left.
        const Quaternion f = m[r][c] * inv;
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * prow[k];
      } else {
        // r_i <- r_i - r_p f with f = m_pc^-1 m_rc on the right.
        const Quaternion f = inv * m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= prow[k] * f;
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

namespace {

std::size_t complex_rank(CMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(pivot_row, k));
    const Complex inv = m(pivot_row, c).inverse();
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      const Complex f = m(r, c) * inv;
      for (std::size_t k = c; k < cols; ++k) m(r, k) = m(r, k) - f * m(pivot_row, k);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank_adjoint(const QMatrix& a, Side side) {
  require_exact(a.regime(), "rank_adjoint");
  const std::size_t r =
      complex_rank(side == Side::Right ? adjoint_direct(a) : adjoint_reverse(a));
  if (r % 2 != 0)
    throw InternalError("complex adjoint has odd rank " + std::to_string(r));
  return r / 2;
}

std::array<Scalar, 16> left_mult_matrix(const Quaternion& q) {
  const Regime rg = q.regime();
  const Quaternion basis[4] = {Quaternion::one(rg), Quaternion::unit_i(rg),
                               Quaternion::unit_j(rg), Quaternion::unit_k(rg)};
  std::array<Scalar, 16> m;
  for (std::size_t b = 0; b < 4; ++b) {
    const Quaternion col = q * basis[b];
    for (std::size_t r = 0; r < 4; ++r) m[r * 4 + b] = col[r];
  }
  return m;
}

std::array<Scalar, 16> right_mult_matrix(const Quaternion& q) {
  const Regime rg = q.regime();
  const Quaternion basis[4] = {Quaternion::one(rg), Quaternion::unit_i(rg),
                               Quaternion::unit_j(rg), Quaternion::unit_k(rg)};
  std::array<Scalar, 16> m;
  for (std::size_t b = 0; b < 4; ++b) {
    const Quaternion col = basis[b] * q;
    for (std::size_t r = 0; r < 4; ++r) m[r * 4 + b] = col[r];
  }
  return m;
}

std::size_t rank_real_adjoint(const QMatrix& a, Side side) {
  require_exact(a.regime(), "rank_real_adjoint");
  detail::RationalMatrix m(4 * a.rows(), 4 * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const auto block =
          side == Side::Right ? left_mult_matrix(a(r, c)) : right_mult_matrix(a(r, c));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          m(4 * r + i, 4 * c + j) = block[i * 4 + j].rational();
    }
  const std::size_t rank = detail::rational_rank(std::move(m));
  if (rank % 4 != 0)
    throw InternalError("real adjoint rank " + std::to_string(rank) + " not divisible by 4");
  return rank / 4;
}

std::size_t rank_numeric(const QMatrix& a, Side side, double tol) {
  if (a.regime() != Regime::Float) throw RegimeError("rank_numeric requires the float regime");
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("numeric rank tolerance must lie in (0, 1)");
  if (a.rows() == 0 || a.cols() == 0) return 0;
  const CMatrix adj = side == Side::Right ? adjoint_direct(a) : adjoint_reverse(a);
  Eigen::MatrixXcd m(adj.rows(), adj.cols());
  for (std::size_t r = 0; r < adj.rows(); ++r)
    for (std::size_t c = 0; c < adj.cols(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {
          adj(r, c).re.to_double(), adj(r, c).im.to_double()};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || !(sigma(0) > 0.0)) return 0;
  const double threshold = tol * sigma(0);
  std::size_t count = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    if (sigma(k) > threshold) ++count;
  if (count % 2 != 0)
    std::cerr << "warning: numeric adjoint rank " << count
              << " is odd; rounding down (tolerance may be ill-chosen)\n";
  return count / 2;
}

std::size_t rank_by(RankMethod method, const QMatrix& a, Side side, double tol) {
  switch (method) {
    case RankMethod::Elimination: return rank_elimination(a, side);
    case RankMethod::ComplexAdjoint: return rank_adjoint(a, side);
    case RankMethod::RealAdjoint: return rank_real_adjoint(a, side);
    case RankMethod::NumericSVD: return rank_numeric(a, side, tol);
  }
  throw InternalError("unhandled rank method");
}

RankReport rank_report(const QMatrix& a, std::span<const RankMethod> methods, double tol) {
  if (methods.empty()) throw DomainError("at least one rank method is required");
  RankReport report;
  for (RankMethod method : methods)
    report.per_method.push_back(
        {method, rank_by(method, a, Side::Left, tol), rank_by(method, a, Side::Right, tol)});
  const auto& first = report.per_method.front();
  report.rank_left = first.rank_left;
  report.rank_right = first.rank_right;
  report.method_used = first.method;
  report.agree = std::all_of(report.per_method.begin(), report.per_method.end(),
                             [&](const MethodRanks& m) {
                               return m.rank_left == first.rank_left &&
                                      m.rank_right == first.rank_right;
                             });
  return report;
}

SolveResult solve_one_sided(std::span<const QVector> vectors, const QVector& target, Side side) {
  const std::size_t len = target.size();
  for (const auto& v : vectors)
    if (v.size() != len) throw DimensionError("solve_one_sided: vector length mismatch");
  for (const auto& q : target) require_exact(q.regime(), "solve_one_sided");
  for (const auto& v : vectors)
    for (const auto& q : v) require_exact(q.regime(), "solve_one_sided");

  const std::size_t unknowns = 4 * vectors.size();
  detail::RationalMatrix system(4 * len, unknowns);
  std::vector<mpq_class> rhs(4 * len);
  for (std::size_t e = 0; e < len; ++e) {
    for (std::size_t s = 0; s < vectors.size(); ++s) {
      // alpha v = R(v) alpha for Left, v beta = L(v) beta for Right.
      const auto block = side == Side::Left ? right_mult_matrix(vectors[s][e])
                                            : left_mult_matrix(vectors[s][e]);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          system(4 * e + i, 4 * s + j) = block[i * 4 + j].rational();
    }
    for (std::size_t i = 0; i < 4; ++i) rhs[4 * e + i] = target[e][i].rational();
  }

  auto solution = detail::rational_solve(std::move(system), std::move(rhs));
  SolveResult result;
  if (!solution) return result;
  result.solvable = true;
  result.coefficients.reserve(vectors.size());
  for (std::size_t s = 0; s < vectors.size(); ++s)
    result.coefficients.emplace_back(Scalar((*solution)[4 * s]), Scalar((*solution)[4 * s + 1]),
                                     Scalar((*solution)[4 * s + 2]),
                                     Scalar((*solution)[4 * s + 3]));
  return result;
}

QVector combine(std::span<const QVector> vectors, std::span<const Quaternion> coefficients,
                Side side) {
  if (vectors.size() != coefficients.size())
    throw DimensionError("combine: one coefficient per vector required");
  if (vectors.empty()) return {};
  const std::size_t len = vectors.front().size();
  QVector out(len, Quaternion::zero(coefficients.front().regime()));
  for (std::size_t s = 0; s < vectors.size(); ++s) {
    if (vectors[s].size() != len) throw DimensionError("combine: vector length mismatch");
    for (std::size_t e = 0; e < len; ++e)
      out[e] += side == Side::Left ? coefficients[s] * vectors[s][e]
                                   : vectors[s][e] * coefficients[s];
  }
  return out;
}

}  // namespace qhankel
