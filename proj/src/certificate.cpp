#include "qmlab/certificate.hpp"

namespace qmlab {

namespace {

struct StepFailure {
  std::string step;
  std::string detail;
};

[[noreturn]] void fail(std::string step, std::string detail) { throw StepFailure{std::move(step), std::move(detail)}; }

const Json& field(const Json& c, const char* name) {
  if (!c.contains(name)) fail("schema", std::string("missing field '") + name + "'");
  return c.at(name);
}

std::string string_field(const Json& c, const char* name) {
  const auto& v = field(c, name);
  if (!v.is_string()) fail("schema", std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Rational rational_field(const Json& c, const char* name, const char* step) {
  auto text = string_field(c, name);
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    fail(step, std::string("field '") + name + "': " + e.what());
  }
}

template <Group G>
ElementOf<G> parse_in(const Context<G>& ctx, const std::string& text, const char* step) {
  try {
    return ctx.parse(text);
  } catch (const std::exception& e) {
    fail(step, "cannot parse '" + text + "': " + e.what());
  }
}

template <Group G>
void verify_upper(const Context<G>& ctx, const Json& c, const ElementOf<G>& target, long long power_n) {
  const auto& w = field(c, "witness");
  if (!w.is_object() || !w.contains("factors") || !w.at("factors").is_array())
    fail("witness", "witness.factors must be an array");
  MixedCommutatorDecomposition<ElementOf<G>> d;
  for (const auto& f : w.at("factors")) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_string())
      fail("witness", "each factor must be a pair of element strings");
    d.factors.push_back({parse_in(ctx, f[0].get<std::string>(), "witness"), parse_in(ctx, f[1].get<std::string>(), "witness")});
  }
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    if (!ctx.in_sub(d.factors[i].second))
      fail("membership", "factor " + std::to_string(i) + ": " + ctx.format(d.factors[i].second) +
                             " is not in the normal subgroup of " + ctx.pair.text());
  d.target = power(ctx.group, target, power_n);
  auto check = verify_decomposition(ctx.group, d, ctx.in_sub);
  if (!check.ok) fail("product", check.failure);
  Rational expected = Rational(static_cast<long long>(d.factors.size())) / power_n;
  Rational recorded = rational_field(c, "bound", "bound");
  if (recorded != expected)
    fail("bound", "recorded bound " + to_string(recorded) + " but the witness gives " + to_string(expected));
}

template <Group G>
void verify_lower(const Context<G>& ctx, const Json& c, const ElementOf<G>& target) {
  const auto& w = field(c, "witness");
  if (!w.is_object()) fail("witness", "witness must be an object");
  Quasimorphism<ElementOf<G>> phi;
  try {
    phi = ctx.qm(string_field(w, "qm"));
  } catch (const StepFailure&) {
    throw;
  } catch (const std::exception& e) {
    fail("qm", e.what());
  }
  if (!phi.homogeneous) fail("qm", phi.spec + " is not homogeneous");
  Rational value;
  try {
    value = phi(target);
  } catch (const std::exception& e) {
    fail("qm_value", e.what());
  }
  Rational recorded_value = rational_field(w, "phi_value", "qm_value");
  if (recorded_value != value)
    fail("qm_value", "recorded phi(target) = " + to_string(recorded_value) + " but re-evaluation gives " + to_string(value));

  const auto& ev = field(c, "evidence");
  if (!ev.is_object()) fail("schema", "evidence must be an object");
  Rational defect = rational_field(w, "defect", "defect");
  auto source = string_field(ev, "defect_source");
  if (source == "certified") {
    if (!phi.defect_upper) fail("defect", phi.spec + " has no certified defect");
    if (phi.defect_upper->value != defect)
      fail("defect", "recorded defect " + to_string(defect) + " but the certified bound is " +
                         to_string(phi.defect_upper->value));
  } else if (source == "override") {
    if (defect <= 0) fail("defect", "defect override must be positive");
  } else {
    fail("defect", "unknown defect_source '" + source + "'");
  }

  const auto& sample = field(ev, "invariance_sample");
  if (!sample.is_object() || !sample.contains("conjugators") || !sample.contains("targets"))
    fail("invariance", "invariance_sample must list conjugators and targets");
  std::vector<ElementOf<G>> conj, targets;
  for (const auto& s : sample.at("conjugators")) {
    if (!s.is_string()) fail("invariance", "conjugators must be strings");
    conj.push_back(parse_in(ctx, s.get<std::string>(), "invariance"));
  }
  for (const auto& s : sample.at("targets")) {
    if (!s.is_string()) fail("invariance", "targets must be strings");
    targets.push_back(parse_in(ctx, s.get<std::string>(), "invariance"));
  }
  if (conj.empty() || targets.empty()) fail("invariance", "empty invariance sample");
  bool covers_target = false;
  for (const auto& t : targets) covers_target = covers_target || ctx.group.equal(t, target);
  if (!covers_target) fail("invariance", "the target is not among the invariance targets");
  InvarianceReport<ElementOf<G>> report;
  try {
    report = invariance_check(ctx.group, phi, conj, targets);
  } catch (const std::exception& e) {
    fail("invariance", e.what());
  }
  if (!report.clean())
    fail("invariance", "conjugating " + ctx.format(report.violations.front().target) + " by " +
                           ctx.format(report.violations.front().conjugator) + " changes phi");
  if (!sample.contains("checked") || sample.at("checked") != report.checked)
    fail("invariance", "recorded check count does not match the sample (" + std::to_string(report.checked) + ")");

  auto verdict = string_field(c, "verdict");
  auto bound_text = string_field(c, "bound");
  if (verdict == "not_in_commutator_group") {
    if (defect != 0 || value == 0) fail("bound", "verdict not_in_commutator_group needs defect 0 and phi(target) != 0");
    if (bound_text != "inf") fail("bound", "verdict not_in_commutator_group records bound 'inf'");
    return;
  }
  if (verdict != "bound") fail("schema", "unknown verdict '" + verdict + "'");
  Rational expected = defect == 0 ? Rational(0) : Rational(abs(value) / (2 * defect));
  if (defect == 0 && value != 0) fail("bound", "defect 0 with phi(target) != 0 cannot give a finite bound");
  Rational recorded = rational_field(c, "bound", "bound");
  if (recorded != expected)
    fail("bound", "recorded bound " + to_string(recorded) + " but |phi|/(2D) = " + to_string(expected));
}

}  // namespace

CertificateCheck verify_certificate(const Json& c) {
  CertificateCheck out;
  try {
    if (!c.is_object()) fail("schema", "certificate must be a JSON object");
    auto kind = string_field(c, "kind");
    auto direction = string_field(c, "direction");
    auto mode = string_field(c, "mode");
    auto target_text = string_field(c, "target");
    auto pair_text = string_field(c, "group_pair");
    const auto& pw = field(c, "power");
    if (!pw.is_number_integer() || pw.get<long long>() < 1) fail("schema", "power must be a positive integer");
    long long power_n = pw.get<long long>();
    field(c, "bound");
    field(c, "witness");
    field(c, "evidence");
    const auto& verified = field(c, "verified");
    if (!verified.is_boolean()) fail("schema", "verified must be a boolean");
    bool upper = kind == "scl_upper" || kind == "cl_upper";
    if (!upper && kind != "scl_lower") fail("schema", "unknown kind '" + kind + "'");
    if (direction != (upper ? "upper" : "lower")) fail("schema", "direction does not match kind");
    if (kind == "cl_upper" && power_n != 1) fail("schema", "cl_upper certificates have power 1");
    if (kind == "scl_lower" && power_n != 1) fail("schema", "lower certificates have power 1");

    GroupPair pair;
    try {
      pair = parse_group_pair(pair_text);
    } catch (const std::exception& e) {
      fail("group_pair", e.what());
    }
    if (mode != (pair.mixed() ? "mixed" : "ordinary"))
      fail("group_pair", "mode '" + mode + "' does not match " + pair.text());

    visit_context(pair, [&](const auto& ctx) {
      auto target = parse_in(ctx, target_text, "target");
      if (pair.mixed() && !ctx.in_sub(target)) fail("target", "target is not in the normal subgroup");
      if (upper)
        verify_upper(ctx, c, target, power_n);
      else
        verify_lower(ctx, c, target);
      return 0;
    });
    if (!verified.get<bool>()) fail("verified", "certificate is marked unverified");
    out.ok = true;
  } catch (const StepFailure& f) {
    out.step = f.step;
    out.detail = f.detail;
  } catch (const std::exception& e) {
    out.step = "schema";
    out.detail = e.what();
  }
  return out;
}

}  // namespace qmlab
