#ifndef QHANKEL_LRR_HPP
#define QHANKEL_LRR_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "qhankel/rank.hpp"
#include "qhankel/sequence.hpp"

namespace qhankel {

enum class LrrSide { Left, Right, DoubleSided };

std::string_view to_string(LrrSide side);
LrrSide parse_lrr_side(std::string_view text);

/// Linear recurrence of order S. Coefficient index s (1-based) multiplies
/// h_{n+s-1}, so s = S sits next to the newest term:
///
///   Left:        h_{n+S} = sum_s alpha_s h_{n+s-1}
///   Right:       h_{n+S} = sum_s h_{n+s-1} beta_s
///   DoubleSided: h_{n+S} = sum_s mu_s h_{n+s-1} nu_s
///
/// left_coeffs is empty for Right, right_coeffs is empty for Left.
struct LrrSpec {
  LrrSide side = LrrSide::Left;
  std::size_t order = 0;
  QVector left_coeffs;
  QVector right_coeffs;

  static LrrSpec one_sided(Side side, QVector coeffs);
  static LrrSpec double_sided(QVector mu, QVector nu);

  /// Throws DomainError when the coefficient vectors do not match side/order.
  void validate() const;

  friend bool operator==(const LrrSpec&, const LrrSpec&) = default;
};

/// Solves h_{n+S} = sum_s coeff_s * h_{n+s-1} for n = 1..N-S, with the
/// multiplication order given by `side`. Requires N >= 2S; shorter windows
/// throw UnderdeterminedError. Exact regime only.
SolveResult fit(const QSequence& h, std::size_t order, Side side);

/// Smallest S <= floor(N/2) for which fit() is solvable.
std::optional<std::size_t> minimal_order(const QSequence& h, Side side);

/// Returns seed followed by `count` terms of the recurrence. The seed must
/// hold exactly spec.order terms.
QSequence generate(const QSequence& seed, const LrrSpec& spec, std::size_t count);

/// For mu^p = nu^p = -1, the recurrence h_{n+1} = mu h_n nu has period p.
/// Generates `horizon` terms after h0 (default 2p) and checks
/// h_{n+p} = h_n throughout. Throws DomainError if mu or nu is not a p-th
/// root of -1. Float inputs compare with float_tolerance().
bool check_periodicity_roots_of_unity(const Quaternion& h0, const Quaternion& mu,
                                      const Quaternion& nu, std::size_t p,
                                      std::size_t horizon = 0);

/// q^p by repeated multiplication.
Quaternion power(const Quaternion& q, std::size_t p);

}  // namespace qhankel

#endif  // QHANKEL_LRR_HPP
