#include "qmlab/braid.hpp"
#include "qmlab/counting.hpp"
#include "qmlab/product.hpp"
#include "qmlab/pure_braid.hpp"
#include "qmlab/scl.hpp"

#include <doctest.h>

using namespace qmlab;

namespace {
BraidWord alpha() { return make_braid(3, {1, 1, 2, 2, -1, -1, -2, -2}); }

std::vector<Word> ball_elements(const FreeGroup& g, int r) {
  std::vector<Word> out;
  for (auto& e : ball(g, r)) out.push_back(e.element);
  return out;
}
}  // namespace

TEST_CASE("decomposition verification") {
  FreeGroup f2(2);
  Word x = f2.parse("x"), y = f2.parse("y");
  MixedCommutatorDecomposition<Word> d{{{x, y}}, f2.parse("xyXY")};
  CHECK(verify_decomposition<FreeGroup>(f2, d, {}).ok);
  d.target = f2.parse("xy");
  auto bad = verify_decomposition<FreeGroup>(f2, d, {});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.offending_factor);
  d.target = f2.parse("xyXY");
  auto member = verify_decomposition<FreeGroup>(f2, d, [](const Word& w) { return exponent_sum(w, 2) == 0; });
  CHECK_FALSE(member.ok);
  CHECK(member.offending_factor == 0u);
  MixedCommutatorDecomposition<Word> empty{{}, Word{}};
  CHECK(verify_decomposition<FreeGroup>(f2, empty, {}).ok);
}

TEST_CASE("commutator identity for (xy)^2n x^-2n y^-2n") {
  FreeGroup f2(2);
  BraidGroup b4(4);
  for (long long n = 0; n <= 6; ++n) {
    auto d = commutator_identity_xy(f2, f2.parse("x"), f2.parse("y"), n);
    CHECK(d.factors.size() == static_cast<std::size_t>(n));
    CHECK(verify_decomposition<FreeGroup>(f2, d, {}).ok);
    auto db = commutator_identity_xy(b4, b4.sigma(1), b4.sigma(3), n);
    CHECK(verify_decomposition<BraidGroup>(b4, db, {}).ok);
  }
  CHECK_THROWS_AS(commutator_identity_xy(f2, f2.parse("x"), f2.parse("y"), -1), InputError);
}

TEST_CASE("flip and power-commutator identities") {
  BraidGroup b3(3);
  PureBraidGroup3 p3;
  auto a = alpha();
  for (long long n = 1; n <= 8; ++n) {
    auto d = flip_decomposition(b3, a, b3.half_twist(), n);
    REQUIRE(d.factors.size() == 1);
    CHECK(p3.contains(d.factors[0].second));
    CHECK(verify_decomposition<BraidGroup>(b3, d, [&p3](const BraidWord& b) { return p3.contains(b); }).ok);
  }
  CHECK_THROWS_AS(flip_decomposition(b3, a, b3.sigma(1), 1), PreconditionError);

  SwapExtension<FreeGroup> g{FreeGroup(2)};
  auto f = g.in_first(g.factor().parse("xy"));
  for (long long n = 0; n <= 5; ++n) {
    auto d = power_commutator(g, f, g.swap(), n);
    CHECK(d.factors.size() == (n ? 1u : 0u));
    CHECK(verify_decomposition<SwapExtension<FreeGroup>>(g, d, {}).ok);
  }
  CHECK_THROWS_AS(power_commutator(g, f, g.in_first(g.factor().parse("y")), 1), PreconditionError);
}

TEST_CASE("commutator searches") {
  BraidGroup b3(3);
  auto a = alpha();
  auto sq = b3.multiply(a, a);
  auto r = mixed_cl_search(b3, sq, {b3.half_twist()}, {b3.invert(a)}, 2);
  CHECK(r.factors == 1);
  CHECK(verify_decomposition<BraidGroup>(b3, r.witness, {}).ok);
  CHECK(mixed_cl_search(b3, b3.identity(), {}, {}, 1).factors == 0);

  FreeGroup f2(2);
  auto balls = ball_elements(f2, 1);
  auto one = mixed_cl_search(f2, f2.parse("xyXY"), balls, balls, 2);
  CHECK(one.factors == 1);
  // [x,y]^2 is not a single commutator, so the search must need two factors.
  auto wide = ball_elements(f2, 2);
  auto two = mixed_cl_search(f2, f2.parse("xyXYxyXY"), wide, wide, 2);
  CHECK(two.factors == 2);
  CHECK(verify_decomposition<FreeGroup>(f2, two.witness, {}).ok);
  auto none = mixed_cl_search(f2, f2.parse("x"), wide, wide, 2, 5000);
  CHECK_FALSE(none.factors);
}

TEST_CASE("quasimorphism lower bounds") {
  FreeGroup f2(2);
  auto hb = homogenized_brooks(CountingWord(f2.parse("xyXY")), f2);
  auto b = bavard_lower(f2.parse("xyXY"), hb);
  CHECK(b.kind == LowerBoundKind::bound);
  CHECK(b.phi_value == 1);
  CHECK(b.value == Rational(1) / (2 * hb.defect_upper->value));
  auto hom = exponent_sum_hom(1, f2);
  CHECK(bavard_lower(f2.parse("x"), hom).kind == LowerBoundKind::not_in_commutator_group);
  CHECK(bavard_lower(f2.parse("xyXY"), hom).kind == LowerBoundKind::bound);
  auto zero = zero_quasimorphism<Word>();
  CHECK(bavard_lower(f2.parse("x"), zero).value == 0);
  CHECK_THROWS_AS(bavard_lower(f2.parse("x"), brooks(CountingWord(f2.parse("xy")), f2)), RefusalError);
  auto no_defect = hb;
  no_defect.defect_upper.reset();
  CHECK_THROWS_AS(bavard_lower(f2.parse("x"), no_defect), RefusalError);
}

TEST_CASE("sandwich consistency") {
  CHECK(sandwich_report({Rational(1, 12), Rational(1, 2)}, {std::nullopt, Rational(1, 2)}, true).consistent);
  auto inverted = sandwich_report({Rational(1), Rational(1, 2)}, {}, false);
  CHECK_FALSE(inverted.consistent);
  CHECK_FALSE(sandwich_report({Rational(1, 2), std::nullopt}, {std::nullopt, Rational(1, 4)}, false).consistent);
  // The right-hand inequality only applies under the section hypothesis.
  SclInterval ambient{Rational(0), Rational(1, 8)}, mixed{Rational(1, 2), std::nullopt};
  CHECK(sandwich_report(ambient, mixed, false).consistent);
  CHECK_FALSE(sandwich_report(ambient, mixed, true).consistent);
}
