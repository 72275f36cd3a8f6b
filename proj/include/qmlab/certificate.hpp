#pragma once

// Bound certificates as JSON.  Upper certificates embed an explicit commutator
// decomposition of target^power; lower certificates embed a quasimorphism spec, its
// value, its defect and the sampled invariance evidence.  verify_certificate rebuilds
// everything from the JSON alone and names the first failing step.

#include "qmlab/contexts.hpp"
#include "qmlab/scl.hpp"

#include <json.hpp>

#include <optional>
#include <type_traits>
#include <string>
#include <vector>

namespace qmlab {

using Json = nlohmann::ordered_json;

struct CertificateCheck {
  bool ok = false;
  std::string step;  // first failing step; empty when ok
  std::string detail;
};

/// Steps, in order: schema, group_pair, target, then witness, membership, product, bound
/// (upper) or qm, qm_value, defect, invariance, bound (lower), and finally verified.
CertificateCheck verify_certificate(const Json& certificate);

/// Ambient conjugators used as invariance evidence: the radius-r ball, plus the half
/// twist for braid groups.
template <Group G>
std::vector<ElementOf<G>> default_conjugators(const Context<G>& ctx, int radius) {
  std::vector<ElementOf<G>> out;
  for (auto& e : ball(ctx.group, radius)) out.push_back(e.element);
  if constexpr (std::is_same_v<G, BraidGroup>) out.push_back(ctx.group.half_twist());
  return out;
}

/// Invariance targets: the target itself plus the subgroup sampling generators.
template <Group G>
std::vector<ElementOf<G>> default_invariance_targets(const Context<G>& ctx, const ElementOf<G>& target) {
  std::vector<ElementOf<G>> out{target};
  for (const auto& g : ctx.sub_generators) out.push_back(g);
  return out;
}

template <Group G>
Json upper_certificate(const Context<G>& ctx, long long exponent, const MixedCommutatorDecomposition<ElementOf<G>>& d,
                       const ElementOf<G>& target, const std::string& kind = "scl_upper") {
  if (exponent < 1) throw InputError("power must be positive");
  if (kind == "cl_upper" && exponent != 1) throw InputError("cl_upper certificates have power 1");
  if (!ctx.group.equal(d.target, power(ctx.group, target, exponent)))
    throw std::logic_error("decomposition target is not target^power");
  auto check = verify_decomposition(ctx.group, d, ctx.in_sub);
  if (!check.ok) throw std::logic_error("refusing to emit an unverified decomposition: " + check.failure);
  Json factors = Json::array();
  for (const auto& [a, b] : d.factors) factors.push_back({ctx.format(a), ctx.format(b)});
  Json c;
  c["kind"] = kind;
  c["target"] = ctx.format(target);
  c["group_pair"] = ctx.pair.text();
  c["mode"] = ctx.pair.mixed() ? "mixed" : "ordinary";
  c["power"] = exponent;
  c["bound"] = to_string(Rational(static_cast<long long>(d.factors.size())) / exponent);
  c["direction"] = "upper";
  c["witness"] = {{"factors", factors}};
  c["evidence"] = {{"defect_provenance", "not applicable"},
                   {"invariance_sample", nullptr},
                   {"scope", "explicit decomposition of target^power into " + std::to_string(d.factors.size()) +
                                 " commutators"}};
  c["verified"] = true;
  return c;
}

struct LowerOptions {
  std::optional<Rational> defect_override;
  int conjugator_radius = 2;
};

/// Throws RefusalError when the quasimorphism is not homogeneous, has no defect (and no
/// override is given), or the sampled invariance check finds a violation.
template <Group G>
Json lower_certificate(const Context<G>& ctx, const ElementOf<G>& target, const std::string& qm_text,
                       const LowerOptions& options = {}) {
  auto phi = ctx.qm(qm_text);
  if (ctx.pair.mixed() && !ctx.in_sub(target))
    throw DomainError("target " + ctx.format(target) + " is not in the normal subgroup of " + ctx.pair.text());
  std::string source = "certified";
  if (options.defect_override) {
    if (*options.defect_override <= 0) throw InputError("defect override must be positive");
    phi.defect_upper = DefectBound{*options.defect_override, "user override " + to_string(*options.defect_override)};
    source = "override";
  }
  auto conjugators = default_conjugators(ctx, options.conjugator_radius);
  auto targets = default_invariance_targets(ctx, target);
  auto report = invariance_check(ctx.group, phi, conjugators, targets);
  if (!report.clean()) {
    const auto& v = report.violations.front();
    throw RefusalError(phi.spec + " is not invariant under " + ctx.pair.ambient_text() + ": conjugating " +
                       ctx.format(v.target) + " by " + ctx.format(v.conjugator) + " changes the value by " +
                       to_string(v.magnitude));
  }
  auto b = bavard_lower(target, phi);
  Json conj = Json::array(), tgt = Json::array();
  for (const auto& c : conjugators) conj.push_back(ctx.format(c));
  for (const auto& t : targets) tgt.push_back(ctx.format(t));
  Json c;
  c["kind"] = "scl_lower";
  c["target"] = ctx.format(target);
  c["group_pair"] = ctx.pair.text();
  c["mode"] = ctx.pair.mixed() ? "mixed" : "ordinary";
  c["power"] = 1;
  bool finite = b.kind == LowerBoundKind::bound;
  c["bound"] = finite ? to_string(b.value) : "inf";
  c["direction"] = "lower";
  c["verdict"] = finite ? "bound" : "not_in_commutator_group";
  c["witness"] = {{"qm", phi.spec}, {"phi_value", to_string(b.phi_value)}, {"defect", to_string(b.defect.value)}};
  c["evidence"] = {
      {"defect_provenance", b.defect.provenance},
      {"defect_source", source},
      {"invariance_sample",
       {{"group", ctx.pair.ambient_text()}, {"conjugators", conj}, {"targets", tgt}, {"checked", report.checked},
        {"violations", 0}}},
      {"scope", ctx.pair.mixed() ? "one-sided: invariance under the ambient group is sampled evidence; tightness "
                                   "is not claimed"
                                 : "one-sided: invariance follows from homogeneity; sample recorded"}};
  c["verified"] = true;
  return c;
}

}  // namespace qmlab
