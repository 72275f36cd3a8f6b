#include "qmlab/certificate.hpp"
#include "qmlab/suite.hpp"

#include <doctest.h>

using namespace qmlab;

namespace {
BraidWord alpha() { return make_braid(3, {1, 1, 2, 2, -1, -1, -2, -2}); }
}  // namespace

TEST_CASE("upper certificates verify and carry the bound m / power") {
  auto mixed = braid_context(parse_group_pair("braid:3/pure"));
  auto d = flip_decomposition(mixed.group, alpha(), mixed.group.half_twist(), 3);
  auto cert = upper_certificate(mixed, 6, d, alpha());
  CHECK(cert["bound"] == "1/6");
  CHECK(cert["mode"] == "mixed");
  auto check = verify_certificate(cert);
  CHECK(check.ok);
  CHECK(check.step.empty());
  CHECK_THROWS_AS(upper_certificate(mixed, 5, d, alpha()), std::logic_error);
  CHECK_THROWS_AS(upper_certificate(mixed, 6, d, alpha(), "cl_upper"), InputError);
}

TEST_CASE("lower certificates") {
  auto pure = pure3_context(parse_group_pair("pure:3"));
  auto cert = lower_certificate(pure, alpha(), "pullback(homog(brooks(w=xyXY)), pr1)");
  CHECK(cert["verdict"] == "bound");
  CHECK(cert["witness"]["phi_value"] == "1");
  CHECK(cert["evidence"]["defect_source"] == "certified");
  CHECK(verify_certificate(cert).ok);

  LowerOptions o;
  o.defect_override = Rational(2);
  auto overridden = lower_certificate(pure, alpha(), "pullback(homog(brooks(w=xyXY)), pr1)", o);
  CHECK(overridden["bound"] == "1/4");
  CHECK(overridden["evidence"]["defect_source"] == "override");
  CHECK(verify_certificate(overridden).ok);
  o.defect_override = Rational(0);
  CHECK_THROWS_AS(lower_certificate(pure, alpha(), "pullback(homog(brooks(w=xyXY)), pr1)", o), InputError);

  auto mixed = braid_context(parse_group_pair("braid:3/pure"));
  CHECK_THROWS_AS(lower_certificate(mixed, alpha(), "pullback(homog(brooks(w=xyXY)), pr1)"), RefusalError);
  CHECK_THROWS_AS(lower_certificate(mixed, mixed.group.sigma(1), "zero"), DomainError);

  auto f2 = free_context(parse_group_pair("free:2"));
  auto inf = lower_certificate(f2, f2.parse("x"), "hom(expsum=x)");
  CHECK(inf["verdict"] == "not_in_commutator_group");
  CHECK(inf["bound"] == "inf");
  CHECK(verify_certificate(inf).ok);
  CHECK_THROWS_AS(lower_certificate(f2, f2.parse("x"), "brooks(w=xy)"), RefusalError);
}

TEST_CASE("every injected fault is rejected at its step") {
  auto certs = separation_certificates(2);
  REQUIRE(certs.size() >= 3);
  std::size_t total = 0;
  for (const auto& cert : {certs.front(), certs.back()}) {
    REQUIRE(verify_certificate(cert).ok);
    for (const auto& f : fault_injections(cert)) {
      auto check = verify_certificate(f.certificate);
      INFO(f.name);
      CHECK_FALSE(check.ok);
      CHECK(check.step == f.expected_step);
      ++total;
    }
  }
  CHECK(total >= 15);
}

TEST_CASE("fault injection skips factors that do not change the product") {
  auto f2 = free_context(parse_group_pair("free:2"));
  Word x = f2.parse("x");
  // With x = y every factor of the packing identity is a trivial commutator.
  auto d = commutator_identity_xy(f2.group, x, x, 2);
  auto cert = upper_certificate(f2, 1, d, d.target, "cl_upper");
  REQUIRE(verify_certificate(cert).ok);
  for (const auto& f : fault_injections(cert)) {
    INFO(f.name);
    CHECK(f.name != "dropped factor");
    CHECK(verify_certificate(f.certificate).step == f.expected_step);
  }
}

TEST_CASE("verifier rejects malformed input") {
  CHECK(verify_certificate(Json::object()).step == "schema");
  CHECK(verify_certificate(Json::array()).step == "schema");
  auto cert = separation_certificates(1).front();
  cert["power"] = 0;
  CHECK(verify_certificate(cert).step == "schema");
  cert = separation_certificates(1).front();
  cert["kind"] = "scl_exact";
  CHECK(verify_certificate(cert).step == "schema");
}

TEST_CASE("suite report is deterministic") {
  SuiteOptions o;
  o.only = {"brooks-counts", "flip-identity", "word-algebra"};
  auto a = run_suite(o), b = run_suite(o);
  CHECK(a.pass());
  CHECK(a.to_json(o.seed).dump() == b.to_json(o.seed).dump());
  o.only = {"no-such-item"};
  CHECK_THROWS_AS(run_suite(o), InputError);
}
