#ifndef QHANKEL_SEQUENCE_HPP
#define QHANKEL_SEQUENCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qhankel/quaternion.hpp"

namespace qhankel {

/// Finite quaternion sequence h_1..h_N, N >= 1, in a single regime.
///
/// Public indices on sequence-level operations are 1-based; operator[] and
/// entries() are 0-based.
class QSequence {
 public:
  explicit QSequence(std::vector<Quaternion> entries);
  QSequence(std::initializer_list<Quaternion> entries)
      : QSequence(std::vector<Quaternion>(entries)) {}

  /// Exact sequence of real integers, e.g. from_integers({0, 1, 1, 2}).
  static QSequence from_integers(std::initializer_list<long> values);

  std::size_t size() const { return entries_.size(); }
  Regime regime() const { return regime_; }
  std::span<const Quaternion> entries() const { return entries_; }
  const Quaternion& operator[](std::size_t idx) const { return entries_[idx]; }

  bool is_all_zero() const;
  QSequence to_regime(Regime target) const;
  /// Copy with `more` appended (same regime required).
  QSequence appended(std::span<const Quaternion> more) const;

  friend bool operator==(const QSequence& a, const QSequence& b) = default;

 private:
  std::vector<Quaternion> entries_;
  Regime regime_;
};

}  // namespace qhankel

#endif  // QHANKEL_SEQUENCE_HPP
