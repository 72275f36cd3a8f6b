#include "qmlab/contexts.hpp"
#include "qmlab/qm_spec.hpp"

#include <doctest.h>

using namespace qmlab;

TEST_CASE("quasimorphism spec parsing") {
  auto s = parse_qm_spec("pullback(homog(brooks(w=xyXY)), pr1)");
  CHECK(s.head == "pullback");
  REQUIRE(s.children.size() == 2);
  CHECK(s.children[0].head == "homog");
  CHECK(s.children[0].children[0].args.at("w") == "xyXY");
  CHECK(s.children[1].head == "pr1");
  CHECK(parse_qm_spec(s.text()).text() == s.text());
  auto sec = parse_qm_spec("section(quotient=Z, map=s1^k)");
  CHECK(sec.args.at("map") == "s1^k");
  CHECK(parse_qm_spec("zero").head == "zero");
  CHECK_THROWS_AS(parse_qm_spec("brooks(w=xy"), InputError);
  CHECK_THROWS_AS(parse_qm_spec("(w=xy)"), InputError);
  CHECK_THROWS_AS(parse_qm_spec("zero)"), InputError);
}

TEST_CASE("group pair parsing") {
  auto p = parse_group_pair("braid:3/pure");
  CHECK(p.kind == AmbientKind::braid);
  CHECK(p.param == 3);
  CHECK(p.mixed());
  CHECK(p.ambient_text() == "braid:3");
  CHECK(p.text() == "braid:3/pure");
  CHECK_FALSE(parse_group_pair("free:2").mixed());
  CHECK(parse_group_pair("product:free:2,int/left").text() == "product:free:2,int/left");
  CHECK(parse_group_pair("swap:free:2").kind == AmbientKind::swap_free);
  CHECK_THROWS_AS(parse_group_pair("braid:1"), InputError);
  CHECK_THROWS_AS(parse_group_pair("braid:17"), InputError);
  CHECK_THROWS_AS(parse_group_pair("pure:4"), InputError);
  CHECK_THROWS_AS(parse_group_pair("free:2/pure"), InputError);
  CHECK_THROWS_AS(parse_group_pair("product:free:2,nat"), InputError);
  CHECK_THROWS_AS(parse_group_pair("lattice:3"), InputError);
}

TEST_CASE("element syntaxes and quasimorphism builders") {
  auto prod = product_context(parse_group_pair("product:free:2,int"));
  auto e = prod.parse("(xy,-3)");
  CHECK(prod.format(e) == "(xy,-3)");
  CHECK(prod.parse("xy").right == 0);
  CHECK_THROWS_AS(prod.parse("(xy,q)"), InputError);
  CHECK(prod.qm("hom(pr2)")(e) == -3);
  CHECK(prod.qm("pullback(brooks(w=xy), pr1)")(e) == 1);

  auto swap = swap_context(parse_group_pair("swap:free:2"));
  CHECK(swap.parse("(x,y,t)").swapped);
  CHECK_THROWS_AS(swap.parse("(x,y,s)"), InputError);
  CHECK_THROWS_AS(swap.qm("brooks(w=x)"), InputError);

  auto braid = braid_context(parse_group_pair("braid:3"));
  CHECK(braid.qm("hom(indexsum)")(braid.parse("1,2,1")) == 3);
  CHECK_THROWS_AS(braid_context(parse_group_pair("braid:4")).qm("pullback(brooks(w=xy), pr1)"), InputError);

  auto pure = pure3_context(parse_group_pair("pure:3"));
  CHECK_THROWS_AS(pure.parse("1,2"), DomainError);
  auto phi = pure.qm("pullback(homog(brooks(w=xyXY)), pr1)");
  CHECK(phi(pure.parse("1,1,2,2,-1,-1,-2,-2")) == 1);

  auto f = free_context(parse_group_pair("free:2"));
  CHECK_THROWS_AS(f.qm("homog(hom(expsum=q))"), InputError);
  CHECK_THROWS_AS(f.qm("nonsense"), InputError);
  CHECK(f.qm("homog(hom(expsum=x))")(f.parse("xxy")) == 2);
}

TEST_CASE("shift averaging") {
  auto braid = braid_context(parse_group_pair("braid:3/commutator"));
  auto phi = braid.qm("shiftavg(homog(brooks(w=uvUV)))");
  BraidWord u = make_braid(3, {2, -1}), v = make_braid(3, {1, 2, -1, -1});
  CHECK(phi(u) == 0);
  CHECK(phi(v) == 0);
  // Homogeneous, so constant along powers and conjugation classes.
  auto g = braid.group.multiply(braid.group.multiply(u, v), braid.group.multiply(braid.group.invert(u), braid.group.invert(v)));
  CHECK(phi(power(braid.group, g, 3)) == 3 * phi(g));
  CHECK(phi(conjugate(braid.group, g, braid.group.sigma(1))) == phi(g));
  CHECK_THROWS_AS(braid.qm("shiftavg(brooks(w=uv))"), RefusalError);
}
