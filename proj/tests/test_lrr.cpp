#include <doctest.h>

#include <vector>

#include "qhankel/error.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/lrr.hpp"
#include "qhankel/random.hpp"

using namespace qhankel;

namespace {

Quaternion q(long w, long x = 0, long y = 0, long z = 0) { return Quaternion::exact(w, x, y, z); }
const Quaternion I = q(0, 1), J = q(0, 0, 1), K = q(0, 0, 0, 1);

const QSequence kFib = QSequence::from_integers({0, 1, 1, 2, 3, 5});

// h_{n+1} = c h_n written out by hand, without the library's generator.
QSequence geometric_left(const Quaternion& c, std::size_t n) {
  std::vector<Quaternion> out{q(1)};
  while (out.size() < n) out.push_back(c * out.back());
  return QSequence(out);
}

}  // namespace

TEST_SUITE("lrr") {
  TEST_CASE("fit recovers the classical Fibonacci rule") {
    for (Side side : {Side::Left, Side::Right}) {
      const SolveResult r = fit(kFib, 2, side);
      REQUIRE(r.solvable);
      CHECK(r.coefficients == QVector{q(1), q(1)});
      CHECK_FALSE(fit(kFib, 1, side).solvable);
    }
  }

  TEST_CASE("fit a noncommutative order-1 rule") {
    const Quaternion c = q(0, 1, 1);
    const QSequence h = geometric_left(c, 6);
    const SolveResult left = fit(h, 1, Side::Left);
    REQUIRE(left.solvable);
    CHECK(left.coefficients == QVector{c});
    // powers of one quaternion commute, so the right fit is the same here
    CHECK(fit(h, 1, Side::Right).coefficients == QVector{c});
  }

  TEST_CASE("left and right fits differ for a genuinely one-sided sequence") {
    // h_{n+1} = i h_n starting from j: j, k, -j, -k, ...
    const QSequence h{J, I * J, I * I * J, I * I * I * J};
    const SolveResult left = fit(h, 1, Side::Left);
    REQUIRE(left.solvable);
    CHECK(left.coefficients == QVector{I});
    const SolveResult right = fit(h, 1, Side::Right);
    REQUIRE(right.solvable);
    CHECK(right.coefficients == QVector{-I});  // j(-i) = k
  }

  TEST_CASE("fit needs N >= 2S") {
    CHECK_THROWS_AS(fit(kFib, 4, Side::Left), UnderdeterminedError);
    CHECK_NOTHROW(fit(kFib, 3, Side::Left));
    CHECK_THROWS_AS(fit(kFib, 0, Side::Left), DomainError);
  }

  TEST_CASE("minimal order") {
    CHECK(minimal_order(kFib, Side::Left) == 2);
    CHECK(minimal_order(kFib, Side::Right) == 2);
    CHECK_FALSE(minimal_order(QSequence::from_integers({0, 0, 1}), Side::Left).has_value());
  }

  TEST_CASE("minimal order recovers a planted order-3 recurrence") {
    Rng rng(303);
    int checked = 0;
    for (int t = 0; t < 50 && checked < 5; ++t) {
      const LrrSpec spec = random_one_sided_spec(rng, Side::Left, 3);
      const QSequence h = random_lrr_sequence(rng, spec, 9);
      // only generic data pins the order down
      if (compute_m(h, Side::Left) != 3) continue;
      ++checked;
      CHECK(minimal_order(h, Side::Left) == 3);
      const SolveResult r = fit(h, 3, Side::Left);
      REQUIRE(r.solvable);
      const QSequence seed(std::vector<Quaternion>(h.entries().begin(), h.entries().begin() + 3));
      CHECK(generate(seed, LrrSpec::one_sided(Side::Left, r.coefficients), 6) == h);
    }
    CHECK(checked == 5);
  }

  TEST_CASE("generate") {
    CHECK(generate(QSequence{q(1)}, LrrSpec::double_sided({I}, {I}), 4) ==
          QSequence::from_integers({1, -1, 1, -1, 1}));
    CHECK(generate(QSequence::from_integers({0, 1}), LrrSpec::one_sided(Side::Left, {q(1), q(1)}), 4) ==
          kFib);
    const Quaternion c = q(2, -1, 0, 3);
    const QSequence constant = generate(QSequence{c}, LrrSpec::one_sided(Side::Left, {q(1)}), 5);
    for (std::size_t n = 0; n < constant.size(); ++n) CHECK(constant[n] == c);
    CHECK(generate(QSequence{q(1)}, LrrSpec::one_sided(Side::Left, {q(0, 1, 1)}), 5) ==
          geometric_left(q(0, 1, 1), 6));
  }

  TEST_CASE("generate checks its inputs") {
    CHECK_THROWS_AS(generate(QSequence{q(1)}, LrrSpec::one_sided(Side::Left, {q(1), q(1)}), 2),
                    DimensionError);
    LrrSpec bad = LrrSpec::one_sided(Side::Left, {q(1)});
    bad.right_coeffs = {q(1)};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(LrrSpec::one_sided(Side::Left, {}).validate(), DomainError);
    CHECK_THROWS_AS(generate(QSequence{Quaternion::real(1.0)}, LrrSpec::one_sided(Side::Left, {q(1)}), 2),
                    RegimeError);
  }

  TEST_CASE("side names") {
    CHECK(parse_lrr_side("double") == LrrSide::DoubleSided);
    CHECK(to_string(LrrSide::Right) == "right");
    CHECK_THROWS_AS(parse_lrr_side("middle"), ParseError);
  }

  TEST_CASE("powers") {
    CHECK(power(I, 2) == q(-1));
    CHECK(power(q(1, 1), 4) == q(-4));
    CHECK(power(J, 0) == q(1));
  }

  TEST_CASE("periodicity from roots of minus one") {
    CHECK(check_periodicity_roots_of_unity(q(1), I, I, 2));
    CHECK(check_periodicity_roots_of_unity(J, I, I, 2));
    // i j i = j: the sequence is in fact constant
    CHECK(generate(QSequence{J}, LrrSpec::double_sided({I}, {I}), 3) == QSequence{J, J, J, J});
    const Quaternion sixth(Scalar::exact(1, 2), Scalar::exact(1, 2), Scalar::exact(1, 2), Scalar::exact(1, 2));
    CHECK(power(sixth, 3) == q(-1));
    CHECK(check_periodicity_roots_of_unity(K, sixth, sixth, 3, 9));
  }

  TEST_CASE("periodicity preconditions") {
    CHECK_THROWS_AS(check_periodicity_roots_of_unity(q(1), q(1), I, 2), DomainError);
    CHECK_THROWS_AS(check_periodicity_roots_of_unity(q(1), I, q(1), 2), DomainError);
    CHECK_THROWS_AS(check_periodicity_roots_of_unity(q(1), I, I, 0), DomainError);
  }

  TEST_CASE("periodicity in the float regime") {
    const double s = 0.8660254037844386;  // sqrt(3)/2
    const Quaternion mu = Quaternion::real(0.5, s);
    CHECK(check_periodicity_roots_of_unity(Quaternion::real(1, 2, 3, 4), mu, mu, 3, 9));
  }
}
