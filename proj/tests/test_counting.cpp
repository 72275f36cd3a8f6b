#include "oracles.hpp"
#include "qmlab/counting.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/quasimorphism.hpp"

#include <doctest.h>

#include <random>

using namespace qmlab;

namespace {
const std::vector<std::string> patterns{"x", "xy", "xx", "xyXY", "xyx", "xxyy", "xyxy", "xXy"};
}

TEST_CASE("count_copies matches the disjoint-occurrence oracle") {
  FreeGroup f2(2);
  for (const auto& text : patterns) {
    Word w = parse_word(text, "xy");  // xXy reduces to y
    CountingWord cw(w);
    for (int len = 0; len <= 8; ++len)
      for (const auto& g : oracle::reduced_words(2, len)) REQUIRE(count_copies(cw, g) == oracle::max_disjoint_copies(w, g));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 3000; ++i) {
      Word g = random_element(f2, rng, 14);
      REQUIRE(count_copies(cw, g) == oracle::max_disjoint_copies(w, g));
    }
  }
  CHECK_THROWS_AS(CountingWord(Word{}), InputError);
}

TEST_CASE("Brooks values") {
  FreeGroup f2(2);
  auto h = brooks(CountingWord(f2.parse("xyXY")), f2);
  CHECK(h(f2.parse("xyXY")) == 1);
  CHECK(h(f2.parse("yxYX")) == -1);
  CHECK(h(Word{}) == 0);
  CHECK(h(f2.parse("xyXYxyXY")) == 2);
  auto e = brooks(CountingWord(f2.parse("x")), f2);
  CHECK(e(f2.parse("xxyX")) == 1);
}

TEST_CASE("exact homogenization matches long powers") {
  FreeGroup f2(2);
  std::mt19937_64 rng(8);
  for (const auto& text : patterns) {
    CountingWord w(parse_word(text, "xy"));
    auto h = brooks(w, f2);
    for (int i = 0; i < 60; ++i) {
      Word g = random_element(f2, rng, 8);
      Rational exact = homogenize_counting_exact(w, g);
      // |h(g^N) - N hbar(g)| <= D(h) for every N.
      for (long long n : {1, 5, 40}) CHECK(abs(h(power(g, n)) - exact * n) <= 3);
      CHECK(exact == homogenize_counting_exact(w, power(g, 3)) / 3);
      CHECK(exact == homogenize_counting_exact(w, multiply(multiply(f2.parse("yx"), g), invert(f2.parse("yx")))));
    }
  }
}

TEST_CASE("junction defect bound holds in the radius-8 ball") {
  FreeGroup f2(2);
  for (const auto& text : {"xy", "xyXY", "xxy"}) {
    CountingWord w(f2.parse(text));
    auto h = brooks(w, f2);
    REQUIRE(h.defect_upper);
    auto search = defect_search(f2, h, 8);
    CHECK(search.lower <= h.defect_upper->value);
    CHECK(search.lower >= 1);
    auto hb = homogenized_brooks(w, f2);
    REQUIRE(hb.defect_upper);
    CHECK(hb.homogeneous);
    CHECK(defect_search(f2, hb, 6).lower <= hb.defect_upper->value);
  }
  auto single = brooks(CountingWord(f2.parse("x")), f2);
  CHECK(single.defect_upper->value == 0);
  CHECK(defect_search(f2, single, 6).lower == 0);
}

TEST_CASE("defect search is deterministic across worker counts") {
  FreeGroup f2(2);
  auto h = brooks(CountingWord(f2.parse("xyXY")), f2);
  auto one = defect_search(f2, h, 6, 1), many = defect_search(f2, h, 6, 5);
  CHECK(one.lower == many.lower);
  CHECK(one.pairs == many.pairs);
  REQUIRE(one.witness);
  CHECK(one.witness->first == many.witness->first);
  CHECK(one.witness->second == many.witness->second);
}

TEST_CASE("generic quasimorphism operations") {
  FreeGroup f2(2);
  auto h = brooks(CountingWord(f2.parse("xy")), f2);
  Word g = f2.parse("xyxyX");
  auto iv = homogenize(f2, h, g, 50);
  CHECK(iv.contains(homogenize_counting_exact(CountingWord(f2.parse("xy")), g)));
  auto hb = homogenized_brooks(CountingWord(f2.parse("xy")), f2);
  std::vector<Word> samples{f2.parse("xy"), f2.parse("xyY"), f2.parse("xyXY")};
  CHECK_FALSE(homogeneity_violation(f2, hb, samples, 1, 6));
  CHECK(homogeneity_violation(f2, h, {f2.parse("yx")}, 1, 6));
  std::vector<Word> conj;
  for (auto& e : ball(f2, 2)) conj.push_back(e.element);
  CHECK(invariance_check(f2, hb, conj, samples).clean());
  CHECK_FALSE(invariance_check(f2, h, conj, {f2.parse("xy")}).clean());
  auto e = exponent_sum_hom(1, f2);
  CHECK(e(f2.parse("xxyX")) == 1);
  CHECK(e.defect_upper->value == 0);
}
