#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "qhankel/error.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/random.hpp"
#include "qhankel/rank.hpp"

using namespace qhankel;

namespace {

Quaternion q(long w, long x = 0, long y = 0, long z = 0) { return Quaternion::exact(w, x, y, z); }

const QSequence kFib = QSequence::from_integers({0, 1, 1, 2, 3, 5});

std::vector<std::size_t> left_ranks(const HankelAnalysis& a) {
  std::vector<std::size_t> out;
  for (const auto& s : a.per_shape) out.push_back(s.rank_left);
  return out;
}

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("sequences") {
    CHECK_THROWS_AS(QSequence(std::vector<Quaternion>{}), DimensionError);
    CHECK_THROWS_AS((QSequence{q(1), Quaternion::real(1.0)}), RegimeError);
    CHECK(QSequence::from_integers({0, 0}).is_all_zero());
    CHECK(kFib.appended(std::vector{q(8)}).size() == 7);
  }

  TEST_CASE("hankel_map layout") {
    CHECK(hankel_map(QSequence::from_integers({1, 2, 3, 4}), 2) ==
          QMatrix{{q(1), q(2), q(3)}, {q(2), q(3), q(4)}});
    CHECK(hankel_map(kFib, 1) == QMatrix{{q(0), q(1), q(1), q(2), q(3), q(5)}});
    CHECK(hankel_map(kFib, 3) == QMatrix{{q(0), q(1), q(1), q(2)},
                                         {q(1), q(1), q(2), q(3)},
                                         {q(1), q(2), q(3), q(5)}});
    CHECK_THROWS_AS(hankel_map(kFib, 0), DimensionError);
    CHECK_THROWS_AS(hankel_map(kFib, 7), DimensionError);
  }

  TEST_CASE("Hankel matrices are symmetric when square") {
    Rng rng(12);
    const QSequence h = random_hankel_sequence(rng, 9);
    if (h.size() % 2 == 1) CHECK(hankel_map(h, (h.size() + 1) / 2).is_symmetric());
    CHECK(hankel_map(QSequence::from_integers({1, 2, 3}), 2).is_symmetric());
  }

  TEST_CASE("triangle table columns") {
    const TriangleTable t(kFib);
    CHECK(t.column(1).size() == 6);
    CHECK(t.column(4) == QVector{q(2), q(3), q(5)});
    CHECK(t.truncated_column(1, 3) == QVector{q(0), q(1), q(1)});
    CHECK_THROWS_AS(t.column(0), DimensionError);
    CHECK_THROWS_AS(t.column(7), DimensionError);
    CHECK_THROWS_AS(t.truncated_column(5, 3), DimensionError);
  }

  TEST_CASE("prefix dependence") {
    const SolveResult four = prefix_dependent(kFib, 4, Side::Left);
    REQUIRE(four.solvable);
    // (2,3,5) = (1,2,3) + (1,1,2); the first column may carry any weight since
    // its truncation (0,1,1) lies in the span, so only check the combination.
    const TriangleTable t(kFib);
    const std::vector<QVector> prev{t.truncated_column(1, 3), t.truncated_column(2, 3),
                                    t.truncated_column(3, 3)};
    CHECK(combine(prev, four.coefficients, Side::Left) == t.column(4));

    CHECK_FALSE(prefix_dependent(kFib, 2, Side::Left).solvable);
    CHECK(prefix_dependent(kFib, 3, Side::Left).solvable);
    CHECK_FALSE(prefix_dependent(kFib, 1, Side::Left).solvable);
    CHECK(prefix_dependent(QSequence::from_integers({0, 0}), 1, Side::Right).solvable);
  }

  TEST_CASE("compute_m on the worked sequences") {
    const QSequence tail = QSequence::from_integers({0, 0, 1});
    const QSequence zeros = QSequence::from_integers({0, 0, 0, 0, 0});
    for (Side side : {Side::Left, Side::Right}) {
      CHECK(compute_m(kFib, side) == 2);
      CHECK(compute_m(tail, side) == 3);
      CHECK(compute_m(zeros, side) == 0);
      CHECK(oracle::brute_force_m(kFib, side) == 2);
      CHECK(oracle::brute_force_m(tail, side) == 3);
      CHECK(oracle::brute_force_m(zeros, side) == 0);
    }
  }

  TEST_CASE("compute_m agrees with the brute-force oracle on random sequences") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
      const QSequence h = t % 2 ? random_hankel_sequence(rng, 8) : adversarial_hankel_sequence(rng, 8);
      for (Side side : {Side::Left, Side::Right}) CHECK(compute_m(h, side) == oracle::brute_force_m(h, side));
    }
  }

  TEST_CASE("predicted_rank") {
    CHECK(predicted_rank(3, 4, 2) == 2);
    CHECK(predicted_rank(2, 2, 3) == 1);
    CHECK(predicted_rank(5, 7, 0) == 0);
    CHECK(predicted_rank(1, 6, 6) == 1);
    CHECK_THROWS_AS(predicted_rank(2, 2, 4), DomainError);
    CHECK_THROWS_AS(predicted_rank(0, 2, 0), DomainError);
  }

  TEST_CASE("analyze the Fibonacci prefix") {
    const HankelAnalysis a = analyze(kFib);
    CHECK(a.length == 6);
    CHECK(a.m_left == 2);
    CHECK(a.m_right == 2);
    CHECK(left_ranks(a) == std::vector<std::size_t>{1, 2, 2, 2, 2, 1});
    CHECK(a.consistent());
    REQUIRE(a.lrr_left.has_value());
    CHECK(*a.lrr_left == QVector{q(1), q(1)});
  }

  TEST_CASE("analyze [0,0,1] and a zero sequence") {
    const HankelAnalysis a = analyze(QSequence::from_integers({0, 0, 1}));
    CHECK(a.m_left == 3);
    CHECK(left_ranks(a) == std::vector<std::size_t>{1, 1, 1});
    CHECK(a.consistent());
    CHECK_FALSE(a.lrr_left.has_value());

    const HankelAnalysis z = analyze(QSequence::from_integers({0, 0, 0, 0}));
    CHECK(z.m_left == 0);
    CHECK(left_ranks(z) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(z.consistent());
  }

  TEST_CASE("analysis matches the oracle ranks") {
    Rng rng(63);
    for (int t = 0; t < 15; ++t) {
      const QSequence h = random_hankel_sequence(rng, 7);
      const HankelAnalysis a = analyze(h);
      for (const ShapeRank& s : a.per_shape) {
        const QMatrix m = hankel_map(h, s.rows);
        CHECK(s.rank_left == oracle::quaternion_rank(m, Side::Left));
        CHECK(s.rank_right == oracle::quaternion_rank(m, Side::Right));
      }
      CHECK(a.consistent());
    }
  }

  TEST_CASE("float sequences are rejected by analyze") {
    CHECK_THROWS_AS(analyze(kFib.to_regime(Regime::Float)), RegimeError);
  }

  TEST_CASE("minimal extension with the default next term") {
    const QSequence e = extend_minimal(QSequence::from_integers({0, 0, 5}), Side::Left, 3);
    CHECK(e == QSequence::from_integers({0, 0, 5, 5, 5, 5}));
    CHECK(extend_minimal(QSequence::from_integers({0, 0, 5}), Side::Right, 2) ==
          QSequence::from_integers({0, 0, 5, 5, 5}));
  }

  TEST_CASE("minimal extension with a chosen next term") {
    ExtendOptions opt;
    opt.next_term = q(0, 1);
    for (Side side : {Side::Left, Side::Right}) {
      const QSequence e = extend_minimal(QSequence::from_integers({0, 0, 1}), side, 3, opt);
      CHECK(e[3] == q(0, 1));
      CHECK(e[4] == q(-1));
      CHECK(compute_m(e, side) == 3);
    }
    opt.next_term = q(0);
    CHECK_THROWS_AS(extend_minimal(QSequence::from_integers({0, 0, 1}), Side::Left, 1, opt), DomainError);
  }

  TEST_CASE("minimal extension of Fibonacci continues the recurrence") {
    for (Side side : {Side::Left, Side::Right}) {
      const QSequence e = extend_minimal(kFib, side, 2);
      CHECK(e == QSequence::from_integers({0, 1, 1, 2, 3, 5, 8, 13}));
      CHECK(rank_elimination(hankel_map(e, 4), side) == 2);
    }
  }

  TEST_CASE("minimal extensions keep every window rank at most m") {
    Rng rng(2718);
    for (int t = 0; t < 10; ++t) {
      const QSequence h = random_hankel_sequence(rng, 7);
      if (h.is_all_zero()) continue;
      const std::size_t m = compute_m(h, Side::Left);
      const QSequence e = extend_minimal(h, Side::Left, h.size() + 4);
      for (std::size_t f = 1; f <= e.size(); ++f) {
        const QMatrix w = hankel_map(e, f);
        CHECK(oracle::quaternion_rank(w, Side::Left) <= m);
        CHECK(oracle::quaternion_rank(w, Side::Right) <= m);
      }
    }
  }

  TEST_CASE("zero count extension is the identity") {
    CHECK(extend_minimal(kFib, Side::Left, 0) == kFib);
  }
}
