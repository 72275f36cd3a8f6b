#include "qmlab/b3_commutator.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/group.hpp"
#include "qmlab/pure_braid.hpp"

#include <doctest.h>

#include <random>

using namespace qmlab;

TEST_CASE("P3 coordinates round trip") {
  std::mt19937_64 rng(5);
  FreeGroup f2(2);
  std::uniform_int_distribution<long long> centre(-4, 4);
  for (int i = 0; i < 200; ++i) {
    PureBraidCoordinates c{random_element(f2, rng, 10), centre(rng)};
    auto b = reassemble(c);
    CHECK(p3_coordinates(b) == c);
  }
  CHECK(p3_coordinates(parse_braid("D^2", 3)) == PureBraidCoordinates{Word{}, 1});
  CHECK(p3_coordinates(parse_braid("1,1", 3)).f2_part == f2.parse("x"));
  CHECK_THROWS_AS(p3_coordinates(parse_braid("1", 3)), DomainError);
  CHECK_THROWS_AS(p3_coordinates(parse_braid("1,1", 4)), DomainError);
}

TEST_CASE("P3 coordinates are a homomorphism on other pure braids") {
  // A_13 = s2 s1^2 s2^-1 is pure but not a word in the chosen generators.
  BraidWord a13 = parse_braid("2,1,1,-2", 3);
  std::mt19937_64 rng(17);
  PureBraidGroup3 p3;
  std::vector<BraidWord> gens{a13, parse_braid("1,1", 3), parse_braid("-2,-2", 3)};
  for (int i = 0; i < 100; ++i) {
    auto a = random_product(p3, gens, rng, 6), b = random_product(p3, gens, rng, 6);
    auto ca = p3_coordinates(a), cb = p3_coordinates(b), cab = p3_coordinates(braid_multiply(a, b));
    CHECK(cab.f2_part == multiply(ca.f2_part, cb.f2_part));
    CHECK(cab.center_exponent == ca.center_exponent + cb.center_exponent);
  }
}

TEST_CASE("SL2 image") {
  auto m = sl2_image(parse_braid("D^2", 3));
  CHECK(m == Matrix2{-1, 0, 0, -1});
  CHECK(sl2_image(parse_braid("1,2,1", 3)) == sl2_image(parse_braid("2,1,2", 3)));
}

TEST_CASE("[B3,B3] free basis") {
  B3CommutatorBasis basis;
  BraidGroup b3(3);
  for (long long k = -13; k <= 13; ++k) {
    Word s = basis.schreier_generator(k);
    auto expected = braid_multiply(braid_multiply(power(b3, b3.sigma(1), k), b3.sigma(2)), power(b3, b3.sigma(1), -(k + 1)));
    CHECK(braid_equal(basis.from_free(s), expected));
    CHECK(basis.to_free(expected) == s);
    CHECK(s.size() <= 4 * static_cast<std::size_t>(std::abs(k)) + 8);
  }
  FreeGroup f2(2, "uv");
  CHECK(f2.format(basis.schreier_generator(6)) == "VuvuVUv");
  CHECK(f2.format(basis.schreier_generator(-1)) == "uV");
  CHECK(f2.format(basis.period_conjugator()) == "VuvU");
}

TEST_CASE("[B3,B3] rewriting round trip and shift") {
  B3CommutatorBasis basis;
  BraidGroup b3(3);
  FreeGroup f2(2, "uv");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto a = random_element(b3, rng, 6), b = random_element(b3, rng, 6);
    auto c = commutator(b3, a, b);
    auto w = basis.to_free(c);
    CHECK(braid_equal(basis.from_free(w), c));
    CHECK(basis.to_free(basis.from_free(w)) == w);
    for (long long t : {-7, -1, 1, 6}) {
      auto shifted = basis.from_free(basis.shift(w, t));
      CHECK(braid_equal(shifted, conjugate(b3, c, power(b3, b3.sigma(1), t))));
    }
  }
  CHECK_THROWS_AS(basis.to_free(parse_braid("1", 3)), DomainError);
}
