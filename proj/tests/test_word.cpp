#include "oracles.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/group.hpp"
#include "qmlab/word.hpp"

#include <doctest.h>

#include <random>

using namespace qmlab;

TEST_CASE("word parsing and formatting round trip") {
  FreeGroup f3(3);
  for (int len = 0; len <= 4; ++len)
    for (const auto& w : oracle::reduced_words(3, len)) CHECK(f3.parse(f3.format(w)) == w);
}

TEST_CASE("word syntax") {
  FreeGroup f2(2);
  CHECK(f2.parse("[x,y]") == f2.parse("xyXY"));
  CHECK(f2.parse("(xy)^3") == f2.parse("xyxyxy"));
  CHECK(f2.parse("x^-2") == f2.parse("XX"));
  CHECK(f2.parse("xX").empty());
  CHECK(f2.parse("1").empty());
  CHECK(f2.parse("[x, [x,y]]") == commutator(f2.parse("x"), f2.parse("xyXY")));
  CHECK_THROWS_AS(f2.parse("xq"), InputError);
  CHECK_THROWS_AS(f2.parse("x^"), InputError);
  CHECK_THROWS_AS(f2.parse("[x,y"), InputError);
  CHECK_THROWS_AS(f2.parse("(x"), InputError);
  try {
    f2.parse("xyz");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("free group operations") {
  FreeGroup f2(2);
  Word x = f2.generator(1), y = f2.generator(2);
  CHECK(power(x, -3) == f2.parse("XXX"));
  CHECK(power(f2.parse("xy"), 0).empty());
  CHECK(commutator(x, y) == f2.parse("xyXY"));
  CHECK(exponent_sum(f2.parse("xyXXy"), 1) == -1);
  CHECK(exponent_sum(f2.parse("xyXXy"), 2) == 2);
  CHECK(total_exponent_sum(f2.parse("xyXXy")) == 1);
  CHECK_THROWS_AS(FreeGroup(0), InputError);
  CHECK_THROWS_AS(FreeGroup(2, "xyz"), InputError);
  CHECK_THROWS_AS(f2.check(Word::from_signed({3})), DomainError);
}

TEST_CASE("cyclic reduction") {
  std::mt19937_64 rng(7);
  FreeGroup f2(2);
  for (int i = 0; i < 300; ++i) {
    Word w = random_element(f2, rng, 12);
    auto r = cyclic_reduce(w);
    CHECK(multiply(multiply(r.conjugator, r.core), invert(r.conjugator)) == w);
    if (r.core.size() > 1) CHECK(r.core.front() != r.core.back().inverse());
  }
}

TEST_CASE("free group balls have 2*3^r - 1 elements") {
  FreeGroup f2(2);
  long long expected = 1;
  for (int r = 0; r <= 6; ++r) {
    CHECK(static_cast<long long>(ball(f2, r).size()) == 2 * expected - 1);
    expected *= 3;
  }
}
