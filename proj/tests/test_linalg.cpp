#include <random>

#include "doctest.h"
#include "qflag/matrix.hpp"

using namespace qflag;

namespace {

template <class K>
Matrix<K> random_matrix(const K& k, size_t r, size_t c, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> ent(-spread, spread);
  Matrix<K> m(k, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = k.from_int(ent(rng));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank examples") {
    CHECK(rank(FMatrix::identity(PrimeField(2), 3)) == 3);
    CHECK(rank(QMatrix(Rationals{}, 2, 5)) == 0);
    CHECK(rank(QMatrix::from_ints(Rationals{}, {{1, 2}, {2, 4}})) == 1);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(QMatrix::identity(Rationals{}, 4)).cols() == 0);
    CHECK(kernel_basis(QMatrix(Rationals{}, 2, 3)).cols() == 3);
    PrimeField f2(2);
    auto k = kernel_basis(FMatrix::from_ints(f2, {{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(1, 0) == 1);
  }

  TEST_CASE("solve examples") {
    Rationals qq;
    auto b = QMatrix::from_ints(qq, {{3}, {-1}, {7}});
    auto s = solve(QMatrix::identity(qq, 3), b);
    REQUIRE(s.consistent);
    CHECK(s.particular == b);
    CHECK(s.kernel.cols() == 0);

    auto z = solve(QMatrix(qq, 2, 2), QMatrix::from_ints(qq, {{1}, {0}}));
    CHECK_FALSE(z.consistent);

    auto h = solve(QMatrix::from_ints(qq, {{2}}), QMatrix::from_ints(qq, {{1}}));
    REQUIRE(h.consistent);
    CHECK(h.particular(0, 0) == mpq_class(1, 2));

    CHECK_THROWS_AS(solve(QMatrix(qq, 2, 2), QMatrix(qq, 3, 1)), std::invalid_argument);
  }

  TEST_CASE("rank plus nullity equals columns") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
      size_t r = rng() % 6 + 1, c = rng() % 6 + 1;
      auto mq = random_matrix(Rationals{}, r, c, rng, 3);
      auto kq = kernel_basis(mq);
      CHECK(rank(mq) + kq.cols() == c);
      CHECK((mq * kq).is_zero());
      for (uint32_t p : {2u, 3u, 5u}) {
        auto mf = random_matrix(PrimeField(p), r, c, rng, 4);
        auto kf = kernel_basis(mf);
        CHECK(rank(mf) + kf.cols() == c);
        CHECK((mf * kf).is_zero());
      }
    }
  }

  TEST_CASE("field values stay canonical") {
    PrimeField f7(7);
    CHECK(f7.from_int(-1) == 6);
    CHECK(f7.mul(6, 6) == 1);
    CHECK(f7.mul(3, f7.inv(3)) == 1);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    mpq_class x(6, -4);
    x.canonicalize();
    CHECK(x.get_num() == -3);
    CHECK(x.get_den() == 2);
    Rationals qq;
    auto y = qq.div(qq.from_int(4), qq.from_int(-6));
    CHECK(y.get_num() == -2);
    CHECK(y.get_den() == 3);
  }

  TEST_CASE("ranks over Q and F_p agree when p avoids the elementary divisors") {
    std::mt19937_64 rng(5);
    Rationals qq;
    for (int t = 0; t < 100; ++t) {
      size_t r = rng() % 5 + 1, c = rng() % 5 + 1;
      auto m = random_matrix(qq, r, c, rng, 2);
      // Scaling by 6 introduces the divisors 2 and 3, which only p = 2, 3 see.
      auto scaled = m.scaled(mpq_class(6));
      auto red = reduce_mod(scaled, PrimeField(1000003));
      REQUIRE(red);
      CHECK(rank(*red) == rank(m));
      auto red5 = reduce_mod(scaled, PrimeField(5));
      REQUIRE(red5);
      CHECK(rank(*red5) <= rank(m));
      auto red2 = reduce_mod(scaled, PrimeField(2));
      REQUIRE(red2);
      if (rank(m) > 0) CHECK(rank(*red2) == 0);
    }
  }

  TEST_CASE("reduction rejects denominators divisible by p") {
    auto m = QMatrix::from_ints(Rationals{}, {{1}});
    m(0, 0) = mpq_class(1, 3);
    CHECK_FALSE(reduce_mod(m, PrimeField(3)));
    auto r = reduce_mod(m, PrimeField(5));
    REQUIRE(r);
    CHECK((*r)(0, 0) == 2);
  }

  TEST_CASE("subspace operations") {
    Rationals qq;
    auto u = QMatrix::from_ints(qq, {{1, 0}, {0, 1}, {0, 0}});
    auto v = QMatrix::from_ints(qq, {{0}, {1}, {1}});
    CHECK(subspace_sum(u, v).cols() == 3);
    CHECK(subspace_intersection(u, v).cols() == 0);
    CHECK(subspace_contains(u, QMatrix::from_ints(qq, {{2}, {3}, {0}})));
    CHECK_FALSE(subspace_contains(u, v));
    auto a = QMatrix::from_ints(qq, {{1, 1, 0}});
    CHECK(preimage(a, QMatrix(qq, 1, 0)).cols() == 2);
  }
}
