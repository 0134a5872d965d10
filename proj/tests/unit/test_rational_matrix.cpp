#include <doctest.h>

#include <random>

#include "frolicher/rational_matrix.hpp"
#include "support/oracles.hpp"
#include "support/random_complex.hpp"

using namespace frolicher;
using frolicher::testing::naive_rank;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (frolicher::testing::uniform(rng, 0, 9) < density)
        m(i, j) = frolicher::testing::small_rational(rng, false);
  return m;
}

// Low-rank product so that rank deficiency actually occurs.
RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c,
                               std::size_t k) {
  return random_matrix(rng, r, k, 7) * random_matrix(rng, k, c, 7);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(-6, 4) / 1) == "-3/2");
  CHECK(format_rational(parse_rational("10/5")) == "2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("block helpers") {
  const auto a = RationalMatrix::from_rows({{1, 2}});
  const auto b = RationalMatrix::from_rows({{3}});
  CHECK(hstack(a, b) == RationalMatrix::from_rows({{1, 2, 3}}));
  CHECK(vstack(a, RationalMatrix::from_rows({{4, 5}})) == RationalMatrix::from_rows({{1, 2}, {4, 5}}));
  CHECK(block_diagonal(a, b) == RationalMatrix::from_rows({{1, 2, 0}, {0, 0, 3}}));
  CHECK(a.transpose() == RationalMatrix::from_rows({{1}, {2}}));
  const auto m = RationalMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(m.col_block(1, 2) == RationalMatrix::from_rows({{2, 3}, {5, 6}}));
  CHECK(m.row_block(1, 1) == RationalMatrix::from_rows({{4, 5, 6}}));
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(RationalMatrix()) == 0);
  CHECK(rank(RationalMatrix(3, 0)) == 0);
  CHECK(rank(RationalMatrix(2, 2)) == 0);
  CHECK(rank(RationalMatrix::identity(4)) == 4);
  CHECK(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RationalMatrix::from_rows({{0, 1}, {1, 0}})) == 2);
}

TEST_CASE("rank agrees with a naive oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = static_cast<std::size_t>(frolicher::testing::uniform(rng, 0, 7));
    const auto c = static_cast<std::size_t>(frolicher::testing::uniform(rng, 0, 7));
    const RationalMatrix m = trial % 2 == 0
                                 ? random_matrix(rng, r, c, frolicher::testing::uniform(rng, 1, 9))
                                 : random_low_rank(rng, r, c,
                                                   static_cast<std::size_t>(
                                                       frolicher::testing::uniform(rng, 0, 3)));
    CAPTURE(trial);
    REQUIRE(rank(m) == naive_rank(m));
    CHECK(rank(m.transpose()) == rank(m));
  }
}

TEST_CASE("nullspace is a basis of the kernel") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(frolicher::testing::uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(frolicher::testing::uniform(rng, 1, 6));
    const RationalMatrix m =
        random_low_rank(rng, r, c, static_cast<std::size_t>(frolicher::testing::uniform(rng, 0, 3)));
    const RationalMatrix n = nullspace(m);
    CAPTURE(trial);
    REQUIRE(n.rows() == c);
    CHECK(n.cols() == c - naive_rank(m));
    if (n.cols() > 0) {
      CHECK((m * n).is_zero());
      CHECK(naive_rank(n) == n.cols());
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(frolicher::testing::uniform(rng, 0, 5));
    const RationalMatrix g = frolicher::testing::random_invertible(rng, n);
    CHECK(g * inverse(g) == RationalMatrix::identity(n));
    CHECK(inverse(g) * g == RationalMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(RationalMatrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
}
