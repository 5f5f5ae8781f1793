#include "qhankel/selfcheck.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "qhankel/hankel.hpp"
#include "qhankel/lrr.hpp"
#include "qhankel/random.hpp"
#include "qhankel/rank.hpp"

namespace qhankel {

SweepSizes SweepSizes::scaled(double factor) const {
  auto s = [factor](std::size_t n) {
    const auto v = static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor));
    return v == 0 ? std::size_t{1} : v;
  };
  SweepSizes out;
  out.algebra = s(algebra);
  out.adjoint = s(adjoint);
  out.rank_methods = s(rank_methods);
  out.symmetric = s(symmetric);
  out.hankel = s(hankel);
  out.adversarial = s(adversarial);
  out.kronecker = s(kronecker);
  out.plateau_per_order = s(plateau_per_order);
  out.roundtrip = s(roundtrip);
  out.periodicity = s(periodicity);
  out.numeric = s(numeric);
  out.transpose = s(transpose);
  out.solve = s(solve);
  return out;
}

namespace {

using Failure = std::optional<std::string>;
using Check = std::function<Failure(Rng&, std::size_t)>;

// Random streams; the Hankel sweeps share one so that the formula check runs
// on exactly the sequences used by the left/right equality check.
enum Stream : std::uint64_t {
  kAlgebra = 1,
  kFloatAlgebra,
  kAdjoint,
  kRankMethods,
  kTranspose,
  kSolve,
  kSymmetric,
  kHankelSequences,
  kAdversarial,
  kKronecker,
  kPlateau,
  kRoundTrip,
  kPeriodicity,
  kNumeric,
};

Quaternion q(long w, long x = 0, long y = 0, long z = 0) { return Quaternion::exact(w, x, y, z); }

std::string describe(const QSequence& h) {
  std::string out = "[";
  for (std::size_t k = 0; k < h.size(); ++k) out += (k ? ", " : "") + h[k].str();
  return out + "]";
}

Failure fail(std::string msg) { return Failure(std::move(msg)); }

Failure check_algebra(Rng& rng, std::size_t index) {
  if (index == 0) {
    const auto i = q(0, 1), j = q(0, 0, 1), k = q(0, 0, 0, 1), minus_one = q(-1);
    if (!(i * j == k)) return fail("i*j != k");
    if (!(j * i == -k)) return fail("j*i != -k");
    if (i * j == j * i) return fail("i*j == j*i");
    if (!(i * i == minus_one && j * j == minus_one && k * k == minus_one && i * j * k == minus_one))
      return fail("i^2 = j^2 = k^2 = ijk = -1 violated");
  }
  const Quaternion p = random_quaternion(rng), r = random_quaternion(rng), s = random_quaternion(rng);
  const std::string ctx = " for p=" + p.str() + " q=" + r.str() + " r=" + s.str();
  if (!((p * r) * s == p * (r * s))) return fail("associativity" + ctx);
  if (!((p * r).conj() == r.conj() * p.conj())) return fail("conj anti-homomorphism" + ctx);
  if (!((p * r).norm_sq() == p.norm_sq() * r.norm_sq())) return fail("norm multiplicativity" + ctx);
  if (!r.is_zero()) {
    const auto one = Quaternion::one(Regime::Exact);
    if (!(r * r.inverse() == one) || !(r.inverse() * r == one)) return fail("inverse" + ctx);
  }
  if (!(p + Quaternion::zero(Regime::Exact) == p) || !(p - p).is_zero()) return fail("additive laws" + ctx);
  return std::nullopt;
}

double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng.next() >> 11) * 0x1.0p-53);
}

Failure check_float_algebra(Rng& rng, std::size_t) {
  auto rq = [&] {
    return Quaternion::real(uniform_real(rng, -10, 10), uniform_real(rng, -10, 10),
                            uniform_real(rng, -10, 10), uniform_real(rng, -10, 10));
  };
  const Quaternion p = rq(), r = rq();
  const double lhs = (p * r).norm_sq().to_double();
  const double rhs = p.norm_sq().to_double() * r.norm_sq().to_double();
  if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs))
    return fail("float norm multiplicativity: relative error " +
                std::to_string(std::abs(lhs - rhs) / std::abs(rhs)));
  return std::nullopt;
}

Failure check_adjoint(Rng& rng, std::size_t) {
  const auto dims = [&] { return static_cast<std::size_t>(rng.uniform(1, 5)); };
  const std::size_t n = dims(), k = dims(), m = dims();
  const QMatrix a = random_matrix(rng, n, k, 2), b = random_matrix(rng, k, m, 2);
  const std::string ctx = " (" + std::to_string(n) + "x" + std::to_string(k) + " by " +
                          std::to_string(k) + "x" + std::to_string(m) + ")";
  if (!(adjoint_direct(mul_direct(a, b)) == adjoint_direct(a) * adjoint_direct(b)))
    return fail("direct adjoint is not multiplicative" + ctx);
  if (!(adjoint_reverse(mul_reverse(a, b)) == adjoint_reverse(a) * adjoint_reverse(b)))
    return fail("reverse adjoint is not multiplicative" + ctx);
  if (!(adjoint_direct(transpose(a)) == adjoint_reverse(a).transpose()))
    return fail("adjoint_direct(A^T) != adjoint_reverse(A)^T" + ctx);
  if (!(transpose(mul_direct(a, b)) == mul_reverse(transpose(b), transpose(a))))
    return fail("(A direct B)^T != B^T reverse A^T" + ctx);
  return std::nullopt;
}

Failure check_rank_methods(Rng& rng, std::size_t) {
  const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
  const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
  const QMatrix a = random_test_matrix(rng, rows, cols);
  for (Side side : {Side::Left, Side::Right}) {
    const std::size_t e = rank_elimination(a, side);
    const std::size_t c = rank_adjoint(a, side);
    const std::size_t r = rank_real_adjoint(a, side);
    if (e != c || c != r)
      return fail(std::string(to_string(side)) + " ranks differ on " + std::to_string(rows) + "x" +
                  std::to_string(cols) + ": elimination " + std::to_string(e) + ", adjoint " +
                  std::to_string(c) + ", real adjoint " + std::to_string(r));
  }
  return std::nullopt;
}

Failure check_transpose(Rng& rng, std::size_t) {
  const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
  const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
  const QMatrix a = random_test_matrix(rng, rows, cols);
  const QMatrix t = transpose(a);
  if (rank_elimination(a, Side::Left) != rank_adjoint(t, Side::Right) ||
      rank_elimination(a, Side::Right) != rank_adjoint(t, Side::Left))
    return fail("rank(A) and rank(A^T) with swapped sides differ");
  return std::nullopt;
}

Failure check_solve(Rng& rng, std::size_t) {
  const auto count = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto len = static_cast<std::size_t>(rng.uniform(1, 5));
  const Side side = rng.chance(1, 2) ? Side::Left : Side::Right;
  const QMatrix basis = random_test_matrix(rng, len, count);
  std::vector<QVector> vectors;
  for (std::size_t c = 0; c < count; ++c) vectors.push_back(basis.column(c));
  QVector target;
  if (rng.chance(1, 2)) {
    QVector coeffs;
    for (std::size_t c = 0; c < count; ++c) coeffs.push_back(random_quaternion(rng, 2));
    target = combine(vectors, coeffs, side);
  } else {
    for (std::size_t e = 0; e < len; ++e) target.push_back(random_quaternion(rng, 2));
  }
  const SolveResult res = solve_one_sided(vectors, target, side);

  std::vector<QVector> stacked = vectors;
  stacked.push_back(target);
  const bool in_span = rank_adjoint(QMatrix::from_columns(stacked, len, Regime::Exact), side) ==
                       rank_adjoint(basis, side);
  if (res.solvable != in_span)
    return fail(std::string("solvable=") + (res.solvable ? "true" : "false") +
                " but rank test says " + (in_span ? "in span" : "not in span"));
  if (res.solvable && !(combine(vectors, res.coefficients, side) == target))
    return fail("returned coefficients do not reproduce the target");
  return std::nullopt;
}

Failure check_symmetric(Rng& rng, std::size_t) {
  const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
  const QMatrix a = random_symmetric_matrix(rng, n);
  const std::size_t left = rank_elimination(a, Side::Left), right = rank_elimination(a, Side::Right);
  if (left != right)
    return fail("symmetric " + std::to_string(n) + "x" + std::to_string(n) + ": rank_left " +
                std::to_string(left) + " != rank_right " + std::to_string(right));
  return std::nullopt;
}

QSequence hankel_sweep_sequence(Rng& rng) { return random_hankel_sequence(rng, 9); }

Failure check_hankel_left_right(Rng& rng, std::size_t index) {
  if (index == 0) {
    // Not Hankel: left and right ranks differ.
    const QMatrix w{{q(1), q(0, 1)}, {q(0, 0, 1), q(0, 0, 0, 1)}};
    if (rank_elimination(w, Side::Left) != 1 || rank_elimination(w, Side::Right) != 2)
      return fail("witness [[1,i],[j,k]] does not show rank_left=1, rank_right=2");
  }
  const QSequence h = hankel_sweep_sequence(rng);
  for (std::size_t f = 1; f <= h.size(); ++f) {
    const QMatrix hm = hankel_map(h, f);
    if (rank_elimination(hm, Side::Left) != rank_elimination(hm, Side::Right))
      return fail("left != right rank at F=" + std::to_string(f) + " for " + describe(h));
  }
  return std::nullopt;
}

Failure check_formula_on(const QSequence& h) {
  const std::size_t ml = compute_m(h, Side::Left), mr = compute_m(h, Side::Right);
  if (ml != mr)
    return fail("m_left=" + std::to_string(ml) + " != m_right=" + std::to_string(mr) + " for " +
                describe(h));
  for (std::size_t f = 1; f <= h.size(); ++f) {
    const QMatrix hm = hankel_map(h, f);
    const std::size_t expected = predicted_rank(f, hm.cols(), ml);
    const std::size_t rl = rank_elimination(hm, Side::Left), rr = rank_elimination(hm, Side::Right);
    if (rl != expected || rr != expected)
      return fail("F=" + std::to_string(f) + ": ranks " + std::to_string(rl) + "/" +
                  std::to_string(rr) + ", predicted " + std::to_string(expected) + " (m=" +
                  std::to_string(ml) + ") for " + describe(h));
  }
  return std::nullopt;
}

QSequence nonzero_sequence(Rng& rng, std::size_t index) {
  for (;;) {
    QSequence h = index % 3 == 2 ? adversarial_hankel_sequence(rng, 8) : random_hankel_sequence(rng, 8);
    if (!h.is_all_zero()) return h;
  }
}

Failure check_kronecker(Rng& rng, std::size_t index) {
  const QSequence h = nonzero_sequence(rng, index);
  const Side side = index % 2 == 0 ? Side::Left : Side::Right;
  const std::size_t m = compute_m(h, side);
  const QSequence ext = extend_minimal(h, side, h.size() + 6);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (!(ext[k] == h[k])) return fail("extension does not start with the input");
  for (std::size_t f = 1; f <= ext.size(); ++f) {
    const QMatrix hm = hankel_map(ext, f);
    if (rank_elimination(hm, Side::Left) > m || rank_elimination(hm, Side::Right) > m)
      return fail("window F=" + std::to_string(f) + " exceeds m=" + std::to_string(m) + " for " +
                  describe(h));
  }
  const QSequence corner_src(QVector(ext.entries().begin(),
                                     ext.entries().begin() + static_cast<std::ptrdiff_t>(2 * m - 1)));
  const QMatrix corner = hankel_map(corner_src, m);
  if (rank_elimination(corner, Side::Left) != m || rank_elimination(corner, Side::Right) != m)
    return fail("leading " + std::to_string(m) + "x" + std::to_string(m) +
                " corner is rank deficient for " + describe(h));
  return std::nullopt;
}

// Planted order-S sequence whose leading S x S Hankel corner has full rank,
// i.e. the recurrence really has order S on this data.
QSequence generic_planted(Rng& rng, const LrrSpec& spec, std::size_t length) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    QSequence h = random_lrr_sequence(rng, spec, length);
    const QSequence head(QVector(h.entries().begin(),
                                 h.entries().begin() + static_cast<std::ptrdiff_t>(2 * spec.order - 1)));
    if (rank_adjoint(hankel_map(head, spec.order), Side::Left) == spec.order) return h;
  }
  throw std::runtime_error("no generic planted sequence after 100 draws");
}

Failure check_plateau(Rng& rng, std::size_t index) {
  const std::size_t order = index % 3 + 1;
  const Side side = (index / 3) % 2 == 0 ? Side::Left : Side::Right;
  const LrrSpec spec = random_one_sided_spec(rng, side, order);
  const QSequence h = generic_planted(rng, spec, 2 * order + 5);
  const HankelAnalysis a = analyze_serial(h);
  const std::string ctx = " (S=" + std::to_string(order) + ", " + std::string(to_string(side)) + ")";
  if (a.m_left != order || a.m_right != order)
    return fail("m_left/m_right = " + std::to_string(a.m_left) + "/" + std::to_string(a.m_right) + ctx);
  for (const auto& s : a.per_shape) {
    const std::size_t expected = std::min({s.rows, s.cols, order});
    if (s.rank_left != expected || s.rank_right != expected)
      return fail("F=" + std::to_string(s.rows) + " rank " + std::to_string(s.rank_left) + "/" +
                  std::to_string(s.rank_right) + " != " + std::to_string(expected) + ctx);
  }
  const auto mo = minimal_order(h, side);
  if (!mo || *mo != order) return fail("minimal_order differs from S" + ctx);
  return std::nullopt;
}

Failure check_roundtrip(Rng& rng, std::size_t index) {
  if (index == 0) {
    const QSequence fib = QSequence::from_integers({0, 1, 1, 2, 3, 5});
    const SolveResult r = fit(fib, 2, Side::Left);
    if (!r.solvable || !(r.coefficients == QVector{q(1), q(1)})) return fail("Fibonacci fit is not (1, 1)");
    const QSequence ext = extend_minimal(fib, Side::Left, 2);
    if (!(ext[6] == q(8)) || !(ext[7] == q(13))) return fail("Fibonacci does not extend to 8, 13");
  }
  const auto order = static_cast<std::size_t>(rng.uniform(1, 3));
  const Side side = rng.chance(1, 2) ? Side::Left : Side::Right;
  const LrrSpec spec = random_one_sided_spec(rng, side, order);
  const QSequence h = generic_planted(rng, spec, 2 * order + 3);
  const QSequence seed(QVector(h.entries().begin(), h.entries().begin() + static_cast<std::ptrdiff_t>(order)));
  for (Side fit_side : {side, other(side)}) {
    const SolveResult r = fit(h, order, fit_side);
    if (!r.solvable)
      return fail(std::string(to_string(fit_side)) + " fit failed on a " +
                  std::string(to_string(side)) + " recurrence of order " + std::to_string(order));
    const QSequence regen = generate(seed, LrrSpec::one_sided(fit_side, r.coefficients), h.size() - order);
    if (!(regen == h)) return fail("regenerated sequence differs from " + describe(h));
  }
  return std::nullopt;
}

struct RootCase {
  Quaternion mu;
  Quaternion nu;
  std::size_t period;
};

std::vector<RootCase> exact_root_cases() {
  const Quaternion half_sum{Scalar::exact(1, 2), Scalar::exact(1, 2), Scalar::exact(1, 2), Scalar::exact(1, 2)};
  const Quaternion half_mix{Scalar::exact(1, 2), Scalar::exact(1, 2), Scalar::exact(-1, 2), Scalar::exact(1, 2)};
  const Quaternion pure{Scalar::exact(0), Scalar::exact(3, 5), Scalar::exact(4, 5), Scalar::exact(0)};
  return {{q(0, 1), q(0, 1), 2},
          {q(0, 0, 1), q(0, 0, 0, 1), 2},
          {pure, q(0, 0, 0, 1), 2},
          {half_sum, half_sum, 3},
          {half_sum, half_mix, 3},
          {q(-1), q(-1), 1}};
}

std::vector<RootCase> float_root_cases() {
  const double c3 = 0.5, s3 = std::numbers::sqrt3 / 2;
  const double c4 = std::numbers::sqrt2 / 2;
  return {{Quaternion::real(c3, s3), Quaternion::real(c3, s3), 3},
          {Quaternion::real(c3, s3), Quaternion::real(c3, 0, s3), 3},
          {Quaternion::real(c4, c4), Quaternion::real(c4, 0, 0, c4), 4}};
}

Failure check_periodicity(Rng& rng, std::size_t index) {
  const auto cases = exact_root_cases();
  const RootCase& c = cases[index % cases.size()];
  const Quaternion h0 = random_nonzero_quaternion(rng);
  if (!check_periodicity_roots_of_unity(h0, c.mu, c.nu, c.period, 3 * c.period))
    return fail("h_{n+p} != h_n for mu=" + c.mu.str() + " nu=" + c.nu.str());
  return std::nullopt;
}

Failure check_periodicity_float(Rng& rng, std::size_t index) {
  const auto cases = float_root_cases();
  const RootCase& c = cases[index % cases.size()];
  const Quaternion h0 = random_nonzero_quaternion(rng).to_regime(Regime::Float);
  if (!check_periodicity_roots_of_unity(h0, c.mu, c.nu, c.period, 3 * c.period))
    return fail("h_{n+p} != h_n for mu=" + c.mu.str() + " nu=" + c.nu.str());
  return std::nullopt;
}

Failure check_numeric(Rng& rng, std::size_t) {
  const auto n = static_cast<std::size_t>(rng.uniform(3, 8));
  QSequence h = rng.chance(1, 3)
                    ? random_hankel_sequence(rng, n)
                    : random_lrr_sequence(rng,
                                          random_one_sided_spec(rng, rng.chance(1, 2) ? Side::Left : Side::Right,
                                                                static_cast<std::size_t>(rng.uniform(1, 3)), 1),
                                          n);
  const auto f = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(h.size())));
  const QMatrix exact = hankel_map(h, f);
  const QMatrix twin = exact.to_regime(Regime::Float);
  for (Side side : {Side::Left, Side::Right}) {
    const std::size_t truth = rank_elimination(exact, side);
    const std::size_t numeric = rank_numeric(twin, side, kDefaultRankTolerance);
    if (numeric != truth)
      return fail(std::string(to_string(side)) + " numeric rank " + std::to_string(numeric) +
                  " != exact " + std::to_string(truth) + " for " + describe(h) + " F=" + std::to_string(f));
    // A zero matrix plus noise is pure noise under a relative threshold, so
    // only nonzero deficient instances get the perturbation check.
    if (truth > 0 && truth < std::min(exact.rows(), exact.cols())) {
      std::vector<Quaternion> noisy;
      for (const auto& e : twin.data())
        noisy.push_back(e + Quaternion::real(uniform_real(rng, -1e-12, 1e-12), uniform_real(rng, -1e-12, 1e-12),
                                             uniform_real(rng, -1e-12, 1e-12), uniform_real(rng, -1e-12, 1e-12)));
      const QMatrix perturbed(twin.rows(), twin.cols(), std::move(noisy), Regime::Float);
      const std::size_t noisy_rank = rank_numeric(perturbed, side, kDefaultRankTolerance);
      if (noisy_rank != truth)
        return fail("perturbed deficient instance: numeric rank " + std::to_string(noisy_rank) +
                    " != exact " + std::to_string(truth) + " for " + describe(h));
    }
  }
  return std::nullopt;
}

struct Property {
  const char* name;
  const char* description;
  bool exact_only;
  std::uint64_t stream;
  std::function<std::size_t(const SweepSizes&)> count;
  Check check;
};

const std::vector<Property>& properties() {
  static const std::vector<Property> table = {
      {"algebra_laws", "Hamilton relations, associativity, conj anti-homomorphism, norm multiplicativity",
       true, kAlgebra, [](const SweepSizes& s) { return s.algebra; }, check_algebra},
      {"float_norm", "float norm multiplicativity within 1e-12 relative error", false, kFloatAlgebra,
       [](const SweepSizes& s) { return s.algebra; }, check_float_algebra},
      {"adjoint_homomorphisms", "complex adjoints respect direct/reverse products and transposition", true,
       kAdjoint, [](const SweepSizes& s) { return s.adjoint; }, check_adjoint},
      {"rank_methods", "elimination, complex adjoint and real adjoint ranks agree on both sides", true,
       kRankMethods, [](const SweepSizes& s) { return s.rank_methods; }, check_rank_methods},
      {"transpose_rank", "rank(A) equals rank(A^T) with sides swapped", true, kTranspose,
       [](const SweepSizes& s) { return s.transpose; }, check_transpose},
      {"solve_consistency", "one-sided solve succeeds iff the target does not raise the rank", true, kSolve,
       [](const SweepSizes& s) { return s.solve; }, check_solve},
      {"symmetric_rank", "symmetric matrices have equal left and right rank", true, kSymmetric,
       [](const SweepSizes& s) { return s.symmetric; }, check_symmetric},
      {"hankel_left_right", "Hankel matrices have equal left and right rank", true, kHankelSequences,
       [](const SweepSizes& s) { return s.hankel; }, check_hankel_left_right},
      {"hankel_rank_formula", "Hankel rank equals min(F, G, m, F+G-m) and m_left = m_right", true,
       kHankelSequences, [](const SweepSizes& s) { return s.hankel; },
       [](Rng& rng, std::size_t) { return check_formula_on(hankel_sweep_sequence(rng)); }},
      {"hankel_rank_formula_adversarial", "rank formula on leading-zero and planted low-order sequences", true,
       kAdversarial, [](const SweepSizes& s) { return s.adversarial; },
       [](Rng& rng, std::size_t) { return check_formula_on(adversarial_hankel_sequence(rng, 9)); }},
      {"minimal_extension", "minimal extensions keep every Hankel window at rank <= m, corner rank m", true,
       kKronecker, [](const SweepSizes& s) { return s.kronecker; }, check_kronecker},
      {"rank_plateau", "planted order-S recurrences give rank min(F, G, S) and minimal order S", true, kPlateau,
       [](const SweepSizes& s) { return 3 * s.plateau_per_order; }, check_plateau},
      {"lrr_roundtrip", "generate-then-fit reproduces the sequence on both sides", true, kRoundTrip,
       [](const SweepSizes& s) { return s.roundtrip; }, check_roundtrip},
      {"periodicity", "h_{n+1} = mu h_n nu with mu^p = nu^p = -1 has period p (exact roots)", true,
       kPeriodicity, [](const SweepSizes& s) { return s.periodicity; }, check_periodicity},
      {"periodicity_float", "period p for irrational roots of -1 (float regime)", false, kPeriodicity,
       [](const SweepSizes& s) { return s.periodicity; }, check_periodicity_float},
      {"numeric_rank", "SVD rank of float twins equals the exact rank, also under 1e-12 noise", false, kNumeric,
       [](const SweepSizes& s) { return s.numeric; }, check_numeric},
  };
  return table;
}

PropertyResult run(const Property& p, const SelfCheckOptions& options) {
  PropertyResult result;
  result.name = p.name;
  result.description = p.description;
  if (p.exact_only && options.regime == Regime::Float) {
    result.skipped = true;
    return result;
  }
  const std::size_t n = p.count(options.sizes);
  result.instances = n;
  std::vector<Failure> failures(n);
  auto body = [&](std::size_t i) {
    Rng rng(instance_seed(options.seed, p.stream, i));
    try {
      failures[i] = p.check(rng, i);
    } catch (const std::exception& e) {
      failures[i] = std::string("exception: ") + e.what();
    }
  };
  if (options.execution == Execution::Parallel) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!failures[i]) continue;
    if (result.failures++ == 0) result.first_failure = "instance " + std::to_string(i) + ": " + *failures[i];
  }
  return result;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& p : properties()) out.emplace_back(p.name);
  return out;
}

PropertyResult run_property(std::string_view name, const SelfCheckOptions& options) {
  for (const auto& p : properties())
    if (name == p.name) return run(p, options);
  throw std::out_of_range("unknown property '" + std::string(name) + "'");
}

std::vector<PropertyResult> run_selfcheck(const SelfCheckOptions& options) {
  std::vector<PropertyResult> out;
  for (const auto& p : properties()) out.push_back(run(p, options));
  return out;
}

}  // namespace qhankel
