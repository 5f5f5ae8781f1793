#include "qhankel/lrr.hpp"

#include <string>

#include "qhankel/error.hpp"

namespace qhankel {

std::string_view to_string(LrrSide side) {
  switch (side) {
    case LrrSide::Left: return "left";
    case LrrSide::Right: return "right";
    case LrrSide::DoubleSided: return "double";
  }
  return "?";
}

LrrSide parse_lrr_side(std::string_view text) {
  if (text == "left") return LrrSide::Left;
  if (text == "right") return LrrSide::Right;
  if (text == "double") return LrrSide::DoubleSided;
  throw ParseError("unknown recurrence side '" + std::string(text) + "'");
}

LrrSpec LrrSpec::one_sided(Side side, QVector coeffs) {
  LrrSpec spec;
  spec.order = coeffs.size();
  if (side == Side::Left) {
    spec.side = LrrSide::Left;
    spec.left_coeffs = std::move(coeffs);
  } else {
    spec.side = LrrSide::Right;
    spec.right_coeffs = std::move(coeffs);
  }
  spec.validate();
  return spec;
}

LrrSpec LrrSpec::double_sided(QVector mu, QVector nu) {
  LrrSpec spec;
  spec.side = LrrSide::DoubleSided;
  spec.order = mu.size();
  spec.left_coeffs = std::move(mu);
  spec.right_coeffs = std::move(nu);
  spec.validate();
  return spec;
}

void LrrSpec::validate() const {
  if (order == 0) throw DomainError("recurrence order must be at least 1");
  const bool needs_left = side != LrrSide::Right;
  const bool needs_right = side != LrrSide::Left;
  if (needs_left != !left_coeffs.empty() || needs_right != !right_coeffs.empty())
    throw DomainError("coefficient vectors do not match recurrence side '" +
                      std::string(to_string(side)) + "'");
  if ((needs_left && left_coeffs.size() != order) || (needs_right && right_coeffs.size() != order))
    throw DomainError("coefficient count differs from recurrence order");
}

SolveResult fit(const QSequence& h, std::size_t order, Side side) {
  if (order == 0) throw DomainError("recurrence order must be at least 1");
  const std::size_t n = h.size();
  if (n < 2 * order)
    throw UnderdeterminedError("fitting order " + std::to_string(order) + " needs at least " +
                               std::to_string(2 * order) + " terms, got " + std::to_string(n));
  const std::size_t equations = n - order;
  std::vector<QVector> shifted(order);
  for (std::size_t s = 0; s < order; ++s)
    shifted[s].assign(h.entries().begin() + static_cast<std::ptrdiff_t>(s),
                      h.entries().begin() + static_cast<std::ptrdiff_t>(s + equations));
  QVector target(h.entries().begin() + static_cast<std::ptrdiff_t>(order), h.entries().end());
  return solve_one_sided(shifted, target, side);
}

std::optional<std::size_t> minimal_order(const QSequence& h, Side side) {
  for (std::size_t s = 1; 2 * s <= h.size(); ++s)
    if (fit(h, s, side).solvable) return s;
  return std::nullopt;
}

QSequence generate(const QSequence& seed, const LrrSpec& spec, std::size_t count) {
  spec.validate();
  if (seed.size() != spec.order)
    throw DimensionError("seed has " + std::to_string(seed.size()) + " terms, recurrence order is " +
                         std::to_string(spec.order));
  const Regime regime = seed.regime();
  for (const auto* coeffs : {&spec.left_coeffs, &spec.right_coeffs})
    for (const auto& q : *coeffs)
      if (q.regime() != regime) throw RegimeError("recurrence coefficients and seed differ in regime");

  const std::size_t order = spec.order;
  std::vector<Quaternion> out(seed.entries().begin(), seed.entries().end());
  out.reserve(order + count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t base = out.size() - order;
    Quaternion next = Quaternion::zero(regime);
    for (std::size_t s = 0; s < order; ++s) {
      const Quaternion& term = out[base + s];
      switch (spec.side) {
        case LrrSide::Left: next += spec.left_coeffs[s] * term; break;
        case LrrSide::Right: next += term * spec.right_coeffs[s]; break;
        case LrrSide::DoubleSided: next += spec.left_coeffs[s] * term * spec.right_coeffs[s]; break;
      }
    }
    out.push_back(std::move(next));
  }
  return QSequence(std::move(out));
}

Quaternion power(const Quaternion& q, std::size_t p) {
  Quaternion out = Quaternion::one(q.regime());
  for (std::size_t k = 0; k < p; ++k) out = out * q;
  return out;
}

bool check_periodicity_roots_of_unity(const Quaternion& h0, const Quaternion& mu,
                                      const Quaternion& nu, std::size_t p, std::size_t horizon) {
  if (p == 0) throw DomainError("period must be at least 1");
  if (h0.regime() != mu.regime() || mu.regime() != nu.regime())
    throw RegimeError("h0, mu and nu must share one regime");
  const Quaternion minus_one = -Quaternion::one(mu.regime());
  if (!(power(mu, p) == minus_one)) throw DomainError("mu^p != -1 for mu = " + mu.str());
  if (!(power(nu, p) == minus_one)) throw DomainError("nu^p != -1 for nu = " + nu.str());
  if (horizon == 0) horizon = 2 * p;

  std::vector<Quaternion> h{h0};
  for (std::size_t n = 0; n < horizon; ++n) h.push_back(mu * h.back() * nu);
  for (std::size_t n = 0; n + p < h.size(); ++n)
    if (!(h[n + p] == h[n])) return false;
  return true;
}

}  // namespace qhankel
