#include <doctest.h>

#include <vector>

#include "qhankel/error.hpp"
#include "qhankel/qmatrix.hpp"
#include "qhankel/random.hpp"

using namespace qhankel;

namespace {

Quaternion q(long w, long x = 0, long y = 0, long z = 0) { return Quaternion::exact(w, x, y, z); }
const Quaternion I = q(0, 1), J = q(0, 0, 1), K = q(0, 0, 0, 1);

Complex c(long re, long im = 0) { return {Scalar::exact(re), Scalar::exact(im)}; }

}  // namespace

TEST_SUITE("qmatrix") {
  TEST_CASE("construction checks shape and regime") {
    CHECK_THROWS_AS(QMatrix(2, 2, std::vector<Quaternion>(3), Regime::Exact), DimensionError);
    CHECK_THROWS_AS((QMatrix{{q(1), q(2)}, {q(3)}}), DimensionError);
    CHECK_THROWS_AS((QMatrix{{q(1), Quaternion::real(2.0)}}), RegimeError);
    QMatrix a(2, 3);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a(1, 2).is_zero());
    CHECK_THROWS_AS(a.set(0, 0, Quaternion::real(1.0)), RegimeError);
    CHECK_THROWS(a.set(2, 0, q(1)));
  }

  TEST_CASE("1x1 products are the Hamilton product in either order") {
    const QMatrix a{{I}}, b{{J}};
    CHECK(mul_direct(a, b) == QMatrix{{K}});
    CHECK(mul_reverse(a, b) == QMatrix{{-K}});
  }

  TEST_CASE("identity is neutral for both products") {
    Rng rng(3);
    const QMatrix a = random_matrix(rng, 3, 4);
    CHECK(mul_direct(a, QMatrix::identity(4)) == a);
    CHECK(mul_direct(QMatrix::identity(3), a) == a);
    CHECK(mul_reverse(a, QMatrix::identity(4)) == a);
  }

  TEST_CASE("products need conformable shapes") {
    CHECK_THROWS_AS(mul_direct(QMatrix(2, 3), QMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(mul_reverse(QMatrix(2, 3), QMatrix(4, 1)), DimensionError);
    CHECK_THROWS_AS(mul_direct(QMatrix(1, 1), QMatrix(1, 1, Regime::Float)), RegimeError);
  }

  TEST_CASE("direct and reverse products differ on noncommuting entries") {
    const QMatrix a{{I, J}}, b{{J}, {K}};
    // i j + j k = k + i ; reversed: j i + k j = -k - i
    CHECK(mul_direct(a, b) == QMatrix{{q(0, 1, 0, 1)}});
    CHECK(mul_reverse(a, b) == QMatrix{{q(0, -1, 0, -1)}});
  }

  TEST_CASE("transpose") {
    const QMatrix row{{I, J}};
    CHECK(transpose(row) == QMatrix{{I}, {J}});
    Rng rng(5);
    const QMatrix a = random_matrix(rng, 3, 5);
    CHECK(transpose(transpose(a)) == a);
    // over a skew field (AB)^T = B^T A^T only holds with the other product
    const QMatrix b = random_matrix(rng, 5, 2);
    CHECK(transpose(mul_direct(a, b)) == mul_reverse(transpose(b), transpose(a)));
  }

  TEST_CASE("submatrix") {
    Rng rng(9);
    const QMatrix a = random_matrix(rng, 3, 4);
    const std::vector<std::size_t> all_rows{0, 1, 2}, all_cols{0, 1, 2, 3}, none{};
    CHECK(submatrix(a, all_rows, all_cols) == a);
    const QMatrix empty = submatrix(a, all_rows, none);
    CHECK(empty.rows() == 3);
    CHECK(empty.cols() == 0);
    const std::vector<std::size_t> r{2, 0}, c{1};
    const QMatrix s = submatrix(a, r, c);
    CHECK(s == QMatrix{{a(2, 1)}, {a(0, 1)}});
    const std::vector<std::size_t> bad{4};
    CHECK_THROWS_AS(submatrix(a, all_rows, bad), DimensionError);
  }

  TEST_CASE("1x1 complex adjoints") {
    CMatrix adj_j = adjoint_direct(QMatrix{{J}});
    CHECK(adj_j(0, 0) == c(0));
    CHECK(adj_j(0, 1) == c(1));
    CHECK(adj_j(1, 0) == c(-1));
    CHECK(adj_j(1, 1) == c(0));

    CMatrix adj_i = adjoint_direct(QMatrix{{I}});
    CHECK(adj_i(0, 0) == c(0, 1));
    CHECK(adj_i(0, 1) == c(0));
    CHECK(adj_i(1, 0) == c(0));
    CHECK(adj_i(1, 1) == c(0, -1));

    // reverse adjoint puts the A2 block below the diagonal
    CMatrix rev_j = adjoint_reverse(QMatrix{{J}});
    CHECK(rev_j(0, 1) == c(-1));
    CHECK(rev_j(1, 0) == c(1));
  }

  TEST_CASE("adjoints are homomorphisms of the matching product") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
      const QMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
      CHECK(adjoint_direct(mul_direct(a, b)) == adjoint_direct(a) * adjoint_direct(b));
      CHECK(adjoint_reverse(mul_reverse(a, b)) == adjoint_reverse(a) * adjoint_reverse(b));
      CHECK(adjoint_direct(transpose(a)) == adjoint_reverse(a).transpose());
    }
  }

  TEST_CASE("symmetry test") {
    CHECK((QMatrix{{q(1), I}, {I, J}}).is_symmetric());
    CHECK_FALSE((QMatrix{{q(1), I}, {J, K}}).is_symmetric());
    CHECK_FALSE(QMatrix(2, 3).is_symmetric());
  }

  TEST_CASE("side names") {
    CHECK(parse_side("left") == Side::Left);
    CHECK(parse_side("right") == Side::Right);
    CHECK(to_string(Side::Left) == "left");
    CHECK(other(Side::Left) == Side::Right);
    CHECK_THROWS_AS(parse_side("both"), ParseError);
  }
}
