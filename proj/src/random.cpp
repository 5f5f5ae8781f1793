#include "qhankel/random.hpp"

#include <algorithm>

namespace qhankel {

long Rng::uniform(long lo, long hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % range);
}

bool Rng::chance(long num, long den) { return uniform(0, den - 1) < num; }

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = base ^ (stream * 0x9E3779B97F4A7C15ULL) ^ (index * 0xBF58476D1CE4E5B9ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Scalar random_component(Rng& rng, long height) {
  const long num = rng.uniform(-height, height);
  const long den = rng.chance(2, 3) ? 1 : rng.uniform(2, 3);
  return Scalar::exact(num, den);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

}  // namespace

Quaternion random_quaternion(Rng& rng, long height) {
  return {random_component(rng, height), random_component(rng, height),
          random_component(rng, height), random_component(rng, height)};
}

Quaternion random_nonzero_quaternion(Rng& rng, long height) {
  for (;;) {
    Quaternion q = random_quaternion(rng, height);
    if (!q.is_zero()) return q;
  }
}

Quaternion random_sparse_quaternion(Rng& rng, long zero_num, long zero_den, long height) {
  if (rng.chance(zero_num, zero_den)) return Quaternion::zero(Regime::Exact);
  return random_quaternion(rng, height);
}

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long height) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_quaternion(rng, height));
  return m;
}

QMatrix random_test_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  switch (rng.uniform(0, 4)) {
    case 0: return random_matrix(rng, rows, cols);
    case 1: {
      QMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_sparse_quaternion(rng, 2, 3, 2));
      return m;
    }
    case 2:
    case 3: {
      const std::size_t inner = pick(rng, 1, std::max<std::size_t>(1, std::min(rows, cols) - 1));
      QMatrix b = random_matrix(rng, rows, inner, 2);
      QMatrix c = random_matrix(rng, inner, cols, 2);
      return rng.chance(1, 2) ? mul_direct(b, c) : mul_reverse(b, c);
    }
    default: {
      QMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          m.set(r, c, Quaternion::exact(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                        rng.uniform(-1, 1)));
      return m;
    }
  }
}

QMatrix random_symmetric_matrix(Rng& rng, std::size_t n) {
  QMatrix m(n, n);
  const long zero_num = rng.uniform(0, 3);
  const long height = rng.uniform(1, 3);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      Quaternion q = random_sparse_quaternion(rng, zero_num, 4, height);
      m.set(r, c, q);
      m.set(c, r, q);
    }
  return m;
}

LrrSpec random_one_sided_spec(Rng& rng, Side side, std::size_t order, long height) {
  QVector coeffs;
  for (std::size_t s = 0; s < order; ++s) coeffs.push_back(random_nonzero_quaternion(rng, height));
  return LrrSpec::one_sided(side, std::move(coeffs));
}

QSequence random_lrr_sequence(Rng& rng, const LrrSpec& spec, std::size_t length) {
  QVector seed;
  for (std::size_t s = 0; s < spec.order; ++s) seed.push_back(random_quaternion(rng, 2));
  QSequence full = generate(QSequence(std::move(seed)), spec, length > spec.order ? length - spec.order : 0);
  if (full.size() == length) return full;
  return QSequence(QVector(full.entries().begin(),
                           full.entries().begin() + static_cast<std::ptrdiff_t>(length)));
}

namespace {

Side random_side(Rng& rng) { return rng.chance(1, 2) ? Side::Left : Side::Right; }

QSequence planted(Rng& rng, std::size_t n, std::size_t max_order) {
  const std::size_t order = pick(rng, 1, std::max<std::size_t>(1, std::min(max_order, n)));
  const LrrSpec spec = random_one_sided_spec(rng, random_side(rng), order, 2);
  return random_lrr_sequence(rng, spec, n);
}

}  // namespace

QSequence random_hankel_sequence(Rng& rng, std::size_t max_length) {
  const std::size_t n = pick(rng, 1, max_length);
  QVector h;
  switch (rng.uniform(0, 6)) {
    case 0:
      for (std::size_t k = 0; k < n; ++k) h.push_back(random_quaternion(rng));
      break;
    case 1:
      for (std::size_t k = 0; k < n; ++k) h.push_back(random_sparse_quaternion(rng, 3, 5, 2));
      break;
    case 2: {
      const std::size_t zeros = pick(rng, 1, n);
      for (std::size_t k = 0; k < n; ++k)
        h.push_back(k < zeros ? Quaternion::zero(Regime::Exact) : random_quaternion(rng));
      break;
    }
    case 3:
      return planted(rng, n, std::max<std::size_t>(1, n / 2));
    case 4: {
      QSequence s = planted(rng, n, std::max<std::size_t>(1, n / 2));
      h.assign(s.entries().begin(), s.entries().end());
      h.back() += random_nonzero_quaternion(rng, 1);
      break;
    }
    case 5: {
      const std::size_t spike = pick(rng, 0, n - 1);
      for (std::size_t k = 0; k < n; ++k)
        h.push_back(k == spike ? random_nonzero_quaternion(rng)
                               : (k > spike && rng.chance(1, 2) ? random_quaternion(rng)
                                                                 : Quaternion::zero(Regime::Exact)));
      break;
    }
    default:
      for (std::size_t k = 0; k < n; ++k) h.push_back(Quaternion::exact(rng.uniform(-3, 3)));
      break;
  }
  return QSequence(std::move(h));
}

QSequence adversarial_hankel_sequence(Rng& rng, std::size_t max_length) {
  const std::size_t n = pick(rng, std::min<std::size_t>(3, max_length), max_length);
  const Quaternion zero = Quaternion::zero(Regime::Exact);
  QVector h;
  switch (rng.uniform(0, 5)) {
    case 0: {
      // Leading zeros, then a planted low-order recurrence.
      const std::size_t zeros = pick(rng, 1, n - 1);
      h.assign(zeros, zero);
      QSequence tail = planted(rng, n - zeros, 2);
      h.insert(h.end(), tail.entries().begin(), tail.entries().end());
      break;
    }
    case 1:
      h.assign(n, zero);
      if (rng.chance(1, 2)) h.back() = random_nonzero_quaternion(rng);
      break;
    case 2: {
      // Planted recurrence whose seed starts with zeros.
      const std::size_t order = pick(rng, 1, std::min<std::size_t>(3, n));
      const LrrSpec spec = random_one_sided_spec(rng, random_side(rng), order, 2);
      QVector seed(order, zero);
      seed.back() = random_nonzero_quaternion(rng, 2);
      QSequence s = generate(QSequence(std::move(seed)), spec, n - order);
      h.assign(s.entries().begin(), s.entries().end());
      break;
    }
    case 3: {
      // Recurrence with a vanishing coefficient.
      const std::size_t order = pick(rng, 2, std::max<std::size_t>(2, std::min<std::size_t>(3, n)));
      LrrSpec spec = random_one_sided_spec(rng, random_side(rng), std::min(order, n), 2);
      auto& coeffs = spec.side == LrrSide::Left ? spec.left_coeffs : spec.right_coeffs;
      coeffs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(coeffs.size()) - 1))] = zero;
      return random_lrr_sequence(rng, spec, n);
    }
    case 4: {
      // Constant or alternating sequence of one quaternion.
      const Quaternion q = random_nonzero_quaternion(rng);
      const bool alternate = rng.chance(1, 2);
      for (std::size_t k = 0; k < n; ++k) h.push_back(alternate && k % 2 ? -q : q);
      break;
    }
    default: {
      // Zero run in the middle of a random sequence.
      for (std::size_t k = 0; k < n; ++k) h.push_back(random_quaternion(rng, 2));
      const std::size_t from = pick(rng, 0, n - 1);
      const std::size_t to = pick(rng, from, n - 1);
      for (std::size_t k = from; k <= to; ++k) h[k] = zero;
      break;
    }
  }
  return QSequence(std::move(h));
}

}  // namespace qhankel
