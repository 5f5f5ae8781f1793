#ifndef QHANKEL_RANDOM_HPP
#define QHANKEL_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "qhankel/lrr.hpp"
#include "qhankel/qmatrix.hpp"
#include "qhankel/sequence.hpp"

namespace qhankel {

/// Deterministic generator for the randomized sweeps. Draws are derived
/// from raw mt19937_64 output so results do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// True with probability num/den.
  bool chance(long num, long den);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-instance seed for (base seed, stream, index), so a sweep
/// produces the same instances whether it runs serially or in parallel.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

/// Exact quaternion with components p/q, |p| <= height, 1 <= q <= 3.
Quaternion random_quaternion(Rng& rng, long height = 3);
Quaternion random_nonzero_quaternion(Rng& rng, long height = 3);
/// Zero with probability zero_num/zero_den, otherwise random_quaternion.
Quaternion random_sparse_quaternion(Rng& rng, long zero_num, long zero_den, long height = 3);

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long height = 3);
/// Mix of dense, sparse and low-rank (via direct or reverse products)
/// matrices, so both full-rank and deficient cases appear.
QMatrix random_test_matrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Square matrix with a_rc = a_cr.
QMatrix random_symmetric_matrix(Rng& rng, std::size_t n);

/// One-sided spec with nonzero random coefficients.
LrrSpec random_one_sided_spec(Rng& rng, Side side, std::size_t order, long height = 2);
/// Sequence of `length` terms following `spec` from a random seed.
QSequence random_lrr_sequence(Rng& rng, const LrrSpec& spec, std::size_t length);

/// Sequences for the Hankel rank sweeps (1 <= N <= max_length): random,
/// sparse, leading zeros, planted one-sided recurrences with and without a
/// perturbed tail.
QSequence random_hankel_sequence(Rng& rng, std::size_t max_length);
/// Harder cases: leading zeros in front of planted low-order recurrences,
/// zero runs, real-only and single-spike sequences.
QSequence adversarial_hankel_sequence(Rng& rng, std::size_t max_length);

}  // namespace qhankel

#endif  // QHANKEL_RANDOM_HPP
