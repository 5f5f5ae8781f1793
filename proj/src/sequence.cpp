#include "qhankel/sequence.hpp"

#include <algorithm>

#include "qhankel/error.hpp"

namespace qhankel {

QSequence::QSequence(std::vector<Quaternion> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("a sequence needs at least one entry");
  regime_ = entries_.front().regime();
  for (const auto& q : entries_)
    if (q.regime() != regime_) throw RegimeError("sequence entries must share one regime");
}

QSequence QSequence::from_integers(std::initializer_list<long> values) {
  std::vector<Quaternion> out;
  for (long v : values) out.push_back(Quaternion::exact(v));
  return QSequence(std::move(out));
}

bool QSequence::is_all_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Quaternion& q) { return q.is_zero(); });
}

QSequence QSequence::to_regime(Regime target) const {
  std::vector<Quaternion> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) out.push_back(q.to_regime(target));
  return QSequence(std::move(out));
}

QSequence QSequence::appended(std::span<const Quaternion> more) const {
  std::vector<Quaternion> out = entries_;
  out.insert(out.end(), more.begin(), more.end());
  return QSequence(std::move(out));
}

}  // namespace qhankel
