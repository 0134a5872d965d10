#include <doctest.h>

#include "frolicher/cohomology.hpp"
#include "frolicher/s6.hpp"
#include "frolicher/zigzag.hpp"
#include "support/random_complex.hpp"

using namespace frolicher;
namespace ft = frolicher::testing;

namespace {

const s6::DiamondParams kEtesi{0, 0, 1, 0, 0};

IntGrid grid_with(int p_max, int q_max, std::initializer_list<std::pair<BiDegree, long long>> e) {
  IntGrid g(p_max, q_max);
  for (const auto& [at, v] : e) g.set(at.p, at.q, v);
  return g;
}

DoubleComplex shape(const char* text) { return realize_shape(parse_shape(text), Grid{3, 3}); }

}  // namespace

TEST_CASE("dolbeault examples") {
  CHECK(dolbeault(DoubleComplex::dot(3, 3, 0, 0)).grid == grid_with(3, 3, {{{0, 0}, 1}}));
  CHECK(dolbeault(shape("(1,0),(1,1)")).grid.all_zero());
  const auto etesi = dolbeault(s6::realize_model(kEtesi)).grid;
  CHECK(etesi == grid_with(3, 3,
                           {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 1},
                            {{3, 3}, 1}}));
}

TEST_CASE("row cohomology examples") {
  CHECK(row_cohomology(DoubleComplex::dot(3, 3, 0, 0)).grid == grid_with(3, 3, {{{0, 0}, 1}}));
  CHECK(row_cohomology(shape("(0,1),(1,1)")).grid.all_zero());
}

TEST_CASE("de Rham examples") {
  CHECK(de_rham(DoubleComplex::dot(3, 3, 0, 0)).b == std::vector<long long>{1, 0, 0, 0, 0, 0, 0});
  for (const auto& s : enumerate_shapes(Grid{3, 3}, 6)) {
    if (s.length() % 2 != 0) continue;
    CAPTURE(s.to_string());
    const auto b = de_rham(realize_shape(s, Grid{3, 3})).b;
    CHECK(std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; }));
  }
  CHECK(de_rham(s6::realize_model(kEtesi)).b == std::vector<long long>{1, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("bott-chern and aeppli examples") {
  CHECK(bott_chern(DoubleComplex::dot(3, 3, 0, 0)).grid == grid_with(3, 3, {{{0, 0}, 1}}));
  CHECK(bott_chern(shape("(0,1),(1,1)")).grid == grid_with(3, 3, {{{1, 1}, 1}}));
  CHECK(bott_chern(s6::realize_model(kEtesi)).grid.at(1, 1) == 2);
  CHECK(aeppli(DoubleComplex::dot(3, 3, 3, 3)).grid == grid_with(3, 3, {{{3, 3}, 1}}));
  CHECK(aeppli(shape("(0,1),(1,1)")).grid == grid_with(3, 3, {{{0, 1}, 1}}));
}

TEST_CASE("arithmetic genus examples") {
  CHECK(arithmetic_genus(DoubleComplex::dot(3, 3, 0, 0)) == 1);
  CHECK(arithmetic_genus(s6::realize_model(kEtesi)) == 0);
}

TEST_CASE("cohomology identities on random complexes") {
  ft::Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const auto k = ft::random_complex(rng);
    CAPTURE(trial);
    const auto h = dolbeault(k).grid;
    const auto bc = bott_chern(k).grid;
    const auto a = aeppli(k).grid;
    // row cohomology is Dolbeault of the conjugate, transposed
    CHECK(row_cohomology(k).grid == dolbeault(conjugate(k)).grid.transposed());
    // Schweitzer: Aeppli is Bott-Chern of the dual, reflected
    CHECK(a == bott_chern(dual(k)).grid.reflected());
    // Serre: Dolbeault of the dual is the reflection
    CHECK(dolbeault(dual(k)).grid == h.reflected());

    // Euler characteristic of Dolbeault, de Rham and dimensions agree
    long long chi_dims = 0;
    long long chi_h = 0;
    for (int p = 0; p <= k.p_max(); ++p)
      for (int q = 0; q <= k.q_max(); ++q) {
        const long long sign = (p + q) % 2 == 0 ? 1 : -1;
        chi_dims += sign * k.dims().at(p, q);
        chi_h += sign * h.at(p, q);
        CHECK(h.at(p, q) >= 0);
        CHECK(h.at(p, q) <= k.dims().at(p, q));
        CHECK(bc.at(p, q) <= k.dims().at(p, q));
        CHECK(a.at(p, q) <= k.dims().at(p, q));
      }
    CHECK(chi_h == chi_dims);
    CHECK(de_rham(k).euler_characteristic() == chi_dims);

    long long genus = 0;
    for (int q = 0; q <= k.q_max(); ++q) genus += (q % 2 == 0 ? 1 : -1) * h.at(0, q);
    CHECK(arithmetic_genus(k) == genus);

    // total Betti sum bounded by total Dolbeault (Frolicher inequality)
    long long betti = 0;
    for (long long b : de_rham(k).b) betti += b;
    CHECK(betti <= h.total());
  }
}

TEST_CASE("total differential squares to zero") {
  ft::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = ft::random_complex(rng);
    for (int deg = 0; deg + 1 < k.p_max() + k.q_max(); ++deg) {
      const auto d0 = total_differential(k, deg);
      const auto d1 = total_differential(k, deg + 1);
      CHECK((d1 * d0).is_zero());
      CHECK(total_layout(k, deg).size == d0.cols());
    }
  }
}

TEST_CASE("cohomology rejects invalid input") {
  IntGrid dims(0, 2);
  for (int q = 0; q <= 2; ++q) dims.set(0, q, 1);
  const auto one = RationalMatrix::from_rows({{1}});
  const DoubleComplex bad(dims, {}, {{{0, 0}, one}, {{0, 1}, one}});
  CHECK_THROWS_AS(dolbeault(bad), InvalidComplex);
  CHECK_THROWS_AS(bott_chern(bad), InvalidComplex);
  CHECK_THROWS_AS(de_rham(bad), InvalidComplex);
}
