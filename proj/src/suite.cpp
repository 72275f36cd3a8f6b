#include "qmlab/suite.hpp"

#include "qmlab/counting.hpp"
#include "qmlab/finite_group.hpp"
#include "qmlab/norms.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>

namespace qmlab {

namespace {

// Index of the first witness factor [a, b] that is not the identity.  Dropping a trivial
// factor leaves the product unchanged and would not be a fault.
std::optional<std::size_t> first_nontrivial_factor(const Json& certificate) {
  return visit_context(parse_group_pair(certificate["group_pair"].get<std::string>()),
                       [&certificate](const auto& ctx) -> std::optional<std::size_t> {
                         const auto& factors = certificate["witness"]["factors"];
                         for (std::size_t i = 0; i < factors.size(); ++i) {
                           auto a = ctx.parse(factors[i][0].template get<std::string>());
                           auto b = ctx.parse(factors[i][1].template get<std::string>());
                           if (!is_identity(ctx.group, commutator(ctx.group, a, b))) return i;
                         }
                         return std::nullopt;
                       });
}

BraidWord alpha() { return make_braid(3, {1, 1, 2, 2, -1, -1, -2, -2}); }

constexpr const char* kPureLowerSpec = "pullback(homog(brooks(w=xyXY)), pr1)";
constexpr const char* kShiftAverageSpec = "shiftavg(homog(brooks(w=uvUV)))";

class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    ++total_;
    if (condition) return;
    ++failed_;
    if (failures_.size() < 4) failures_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string out = std::to_string(failed_) + " of " + std::to_string(total_) + " checks failed";
    for (const auto& f : failures_) out += "; " + f;
    return out;
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome brooks_counts() {
  Checker check;
  FreeGroup f2(2);
  CountingWord w(f2.parse("xyXY"));
  Word c = commutator(f2.generator(1), f2.generator(2));
  for (long long n = 1; n <= 64; ++n) {
    Word cn = power(c, n);
    check.expect(count_copies(w, cn) == n, "c_w([x,y]^" + std::to_string(n) + ") != n");
    check.expect(count_copies(w.inverse(), cn) == 0, "c_{w^-1}([x,y]^" + std::to_string(n) + ") != 0");
  }
  Interval truncated = homogenize(f2, brooks(w, f2), c, 64);
  check.expect(truncated.contains(1) && truncated.center == 1, "truncated homogenization misses 1");
  check.expect(homogenize_counting_exact(w, c) == 1, "cyclic homogenization != 1");
  check.expect(homogenized_brooks(w, f2)(c) == 1, "homog(brooks(w=xyXY))([x,y]) != 1");
  return {check.ok(), check.summary("c_w([x,y]^n) = n and c_{w^-1}([x,y]^n) = 0 for n <= 64; hbar([x,y]) = 1 (truncated: " +
                                    to_string(truncated.center) + " +- " + to_string(*truncated.radius) +
                                    ", cyclic: exact)")};
}

Outcome flip_identity() {
  Checker check;
  BraidGroup b3(3);
  auto a = alpha();
  auto d = b3.half_twist();
  auto flipped = conjugate(b3, a, d);
  auto nf = normal_form(b3.multiply(flipped, a));
  check.expect(nf.infimum == 0 && nf.factors.empty(), "D a D^-1 a has normal form " + format_normal_form(nf));
  check.expect(b3.equal(flipped, commutator(b3, make_braid(3, {2, 2}), make_braid(3, {1, 1}))),
               "D a D^-1 != [s2^2, s1^2]");
  check.expect(!b3.equal(a, b3.identity()), "alpha is trivial");
  return {check.ok(), check.summary("normal form of D a D^-1 a is '" + format_normal_form(nf) + "'")};
}

Outcome mixed_upper_family(std::vector<Json>& certs) {
  Checker check;
  auto mixed = braid_context(parse_group_pair("braid:3/pure"));
  auto ambient = braid_context(parse_group_pair("braid:3"));
  auto a = alpha();
  auto d = mixed.group.half_twist();
  Json last;
  for (long long n = 1; n <= 32; ++n) {
    auto dec = flip_decomposition(mixed.group, a, d, n);
    auto cert = upper_certificate(mixed, 2 * n, dec, a);
    check.expect(cert["bound"] == to_string(Rational(1, 2 * n)), "bound for n = " + std::to_string(n));
    certs.push_back(cert);
    last = cert;
  }
  auto ordinary = upper_certificate(ambient, 64, flip_decomposition(ambient.group, a, d, 32), a);
  certs.push_back(ordinary);
  auto sandwich = sandwich_report({Rational(0), parse_rational(ordinary["bound"].get<std::string>())},
                                  {std::nullopt, parse_rational(last["bound"].get<std::string>())}, true);
  check.expect(sandwich.consistent, "sandwich inconsistent");
  return {check.ok(), check.summary("alpha^(2n) = [D, alpha^-n] verified for n <= 32; scl_{B3,P3}(alpha) <= " +
                                    last["bound"].get<std::string>() + "; sandwich consistent")};
}

Outcome ordinary_lower(std::vector<Json>& certs) {
  Checker check;
  auto pure = pure3_context(parse_group_pair("pure:3"));
  auto cert = lower_certificate(pure, alpha(), kPureLowerSpec);
  Rational d = parse_rational(cert["witness"]["defect"].get<std::string>());
  check.expect(d > 0, "certified defect is not positive");
  check.expect(cert["witness"]["phi_value"] == "1", "phi(alpha) != 1");
  check.expect(cert["bound"] == to_string(Rational(1) / (2 * d)), "bound != 1/(2D)");
  certs.push_back(cert);

  // The same quasimorphism is not invariant under B3, so no mixed lower bound is issued.
  auto mixed = braid_context(parse_group_pair("braid:3/pure"));
  bool refused = false;
  try {
    lower_certificate(mixed, alpha(), kPureLowerSpec);
  } catch (const RefusalError&) {
    refused = true;
  }
  check.expect(refused, "mixed lower bound was not refused");
  auto phi = mixed.qm(kPureLowerSpec);
  auto a = alpha();
  check.expect(phi(conjugate(mixed.group, a, mixed.group.half_twist())) == -phi(a), "phi(D a D^-1) != -phi(a)");

  // Searched defects against the certified constants, on F2 and on F2 x Z.
  FreeGroup f2(2);
  CountingWord w(f2.parse("xyXY"));
  auto h = brooks(w, f2);
  auto hbar = homogenized_brooks(w, f2);
  auto sh = defect_search(f2, h, 8);
  auto shbar = defect_search(f2, hbar, 8);
  check.expect(sh.lower <= h.defect_upper->value, "searched D(h_w) exceeds its bound");
  check.expect(shbar.lower <= hbar.defect_upper->value, "searched D(hbar_w) exceeds its bound");
  check.expect(hbar.defect_upper->value == d, "P3 defect differs from the free-group constant");
  auto product = product_context(parse_group_pair("product:free:2,int"));
  auto sp = defect_search(product.group, product.qm(kPureLowerSpec), 8);
  check.expect(sp.lower <= d, "searched defect on F2 x Z exceeds D");
  return {check.ok(), check.summary("scl_P3(alpha) >= " + cert["bound"].get<std::string>() + " with D = " + to_string(d) +
                                    "; radius-8 searched defects: h_w " + to_string(sh.lower) + " <= " +
                                    to_string(h.defect_upper->value) + ", hbar_w " + to_string(shbar.lower) +
                                    ", on F2 x Z " + to_string(sp.lower) + " <= " + to_string(d) +
                                    "; mixed lower refused")};
}

Outcome power_commutators(std::vector<Json>& certs) {
  Checker check;
  auto swap = swap_context(parse_group_pair("swap:free:2"));
  const auto& sg = swap.group;
  auto x = sg.factor().generator(1);
  auto f = sg.in_first(x);
  auto t = sg.swap();
  check.expect(sg.equal(commutator(sg, f, t), sg.multiply(sg.in_first(x), sg.in_second(invert(x)))),
               "[f, t] != (x, x^-1)");
  auto braid = braid_context(parse_group_pair("braid:3"));
  auto a = alpha();
  auto d = braid.group.half_twist();
  for (long long n = 1; n <= 32; ++n) {
    auto dec = power_commutator(sg, f, t, n);
    check.expect(dec.factors.size() == 1, "swap model factor count");
    certs.push_back(upper_certificate(swap, n, dec, commutator(sg, f, t)));
    auto bdec = power_commutator(braid.group, a, d, n);
    certs.push_back(upper_certificate(braid, n, bdec, commutator(braid.group, a, d)));
  }
  check.expect(power_commutator(sg, f, t, 0).factors.empty(), "n = 0 is not empty");

  FreeGroup f2(2);
  int rejected = 0;
  const std::vector<std::pair<std::string, std::string>> pairs = {{"x", "y"}, {"x", "yx"}, {"xy", "yx"}, {"xyX", "y"}};
  for (const auto& [fs, gs] : pairs) {
    try {
      power_commutator(f2, f2.parse(fs), f2.parse(gs), 3);
    } catch (const PreconditionError&) {
      ++rejected;
    }
  }
  check.expect(rejected == static_cast<int>(pairs.size()), "free-group precondition not rejected");
  return {check.ok(), check.summary("[f,g]^n = [f^n,g] for n <= 32 in (F2 x F2) x| C2 with f = (x,1), g = t, and in B3 "
                                    "with f = alpha, g = D; " + std::to_string(rejected) + "/" +
                                    std::to_string(pairs.size()) + " free-group pairs rejected")};
}

Outcome commutator_packing(std::vector<Json>& certs, std::mt19937_64& rng) {
  Checker check;
  auto ctx = free_context(parse_group_pair("free:2"));
  const auto& f2 = ctx.group;
  std::uniform_int_distribution<int> len(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Word x = random_element(f2, rng, len(rng));
    Word y = random_element(f2, rng, len(rng));
    for (long long n = 1; n <= 8; ++n) {
      auto d = commutator_identity_xy(f2, x, y, n);
      Word expected = multiply(power(multiply(x, y), 2 * n), multiply(power(x, -2 * n), power(y, -2 * n)));
      check.expect(d.target == expected, "target mismatch");
      check.expect(static_cast<long long>(d.factors.size()) == n, "factor count != n");
      auto v = verify_decomposition(f2, d, ctx.in_sub);
      check.expect(v.ok, "decomposition fails for x = " + f2.format(x) + ", y = " + f2.format(y) + ", n = " +
                             std::to_string(n) + ": " + v.failure);
      if (v.ok) certs.push_back(upper_certificate(ctx, 1, d, expected, "cl_upper"));
    }
  }
  return {check.ok(), check.summary("(xy)^2n x^-2n y^-2n = product of n commutators for n <= 8, 20 random (x, y)")};
}

Outcome extension(std::mt19937_64& rng) {
  Checker check;
  std::string detail;
  {
    auto ctx = product_context(parse_group_pair("product:free:2,int/left"));
    auto phi = ctx.qm(kPureLowerSpec);
    check.expect(check_section(ctx.group, *ctx.section, 8).ok, "F2 x Z section check");
    auto ext = extend_via_section(ctx.group, phi, *ctx.section, ctx.in_sub, 64);
    std::vector<ProductElement<FreeGroup, Integers>> samples;
    std::uniform_int_distribution<int> len(0, 20);
    for (int i = 0; i < 1000; ++i) samples.push_back(ctx.group.embed_left(random_element(ctx.group.left(), rng, len(rng))));
    auto r = restriction_check(ext.phi_hat, phi, samples);
    check.expect(r.ok && !r.insufficient_evidence && r.checked == 1000, "F2 x Z restriction");
    for (int i = 0; i < 50; ++i) {
      auto e = random_element(ctx.group, rng, 12);
      check.expect(ext.phi_hat(e).center == phi(ctx.group.embed_left(e.left)), "F2 x Z: phi_hat((w,k)) != phi(w)");
    }
    auto chain = defect_chain_check(ctx.group, ext, 6);
    check.expect(chain.ok, "F2 x Z defect chain");
    detail += "F2 x Z: restriction 1000/1000, searched D(phi') " + to_string(chain.phi_prime_search.lower) +
              ", D(phi_hat) " + to_string(chain.phi_hat_search.lower) + " <= 2 D = " + to_string(2 * ext.chain.phi) +
              " at radius 6";
  }
  {
    auto ctx = braid_context(parse_group_pair("braid:3/commutator"));
    auto phi = ctx.qm(kShiftAverageSpec);
    check.expect(check_section(ctx.group, *ctx.section, 6).ok, "B3 section check");
    auto ext = extend_via_section(ctx.group, phi, *ctx.section, ctx.in_sub, 16);
    std::vector<BraidWord> samples;
    std::uniform_int_distribution<int> len(0, 8);
    std::set<std::string> values;
    for (int i = 0; i < 1000; ++i) samples.push_back(random_product(ctx.group, ctx.sub_generators, rng, len(rng)));
    for (std::size_t i = 0; i < 50; ++i) values.insert(to_string(phi(samples[i])));
    auto r = restriction_check(ext.phi_hat, phi, samples);
    check.expect(r.ok && r.checked == 1000, "B3 restriction");
    check.expect(values.size() > 1, "shift-averaged quasimorphism is constant on samples");
    auto chain = defect_chain_check(ctx.group, ext, 4);
    check.expect(chain.ok, "B3 defect chain");
    detail += "; B3: restriction 1000/1000 (" + std::to_string(values.size()) + " distinct values on 50 samples), "
              "searched D(phi') " + to_string(chain.phi_prime_search.lower) + ", D(phi_hat) " +
              to_string(chain.phi_hat_search.lower) + " <= 2 D = " + to_string(2 * ext.chain.phi) + " at radius 4";
  }
  return {check.ok(), check.summary(detail)};
}

// Distances from the identity in the Cayley graph of S_n on all transpositions, by
// breadth-first search over one-line arrays.  Independent of the norm machinery.
std::map<std::vector<int>, long long> transposition_distances(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, long long> dist{{id, 0}};
  std::queue<std::vector<int>> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto p = todo.front();
    todo.pop();
    long long d = dist[p];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        auto q = p;
        std::swap(q[i], q[j]);
        if (dist.emplace(q, d + 1).second) todo.push(std::move(q));
      }
  }
  return dist;
}

Outcome fragmentation() {
  Checker check;
  const auto oracle = transposition_distances(5);
  auto s5 = FiniteGroup::symmetric(5);
  auto h = s5.subgroup({s5.index_of(Permutation::adjacent(5, 0))});
  std::vector<int> all(static_cast<std::size_t>(s5.order()));
  for (int i = 0; i < s5.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  FragmentationSearch search(s5, all, h, true);
  for (int g = 0; g < s5.order(); ++g) {
    auto r = search.query(g, 10);
    bool exact = r.verdict == FragmentationVerdict::exact;
    check.expect(exact && r.value == 5 - s5.permutation(g).cycle_count(),
                 "nu(" + s5.format(g) + ") = " + r.norm().str() + ", expected 5 - cycles");
    check.expect(exact && r.value == oracle.at(s5.permutation(g).images()),
                 "nu(" + s5.format(g) + ") disagrees with the transposition BFS");
    check.expect(reassemble_fragmentation(s5, r.witness) == g, "witness does not reassemble for " + s5.format(g));
  }
  auto s4 = FiniteGroup::symmetric(4);
  std::vector<int> all4(static_cast<std::size_t>(s4.order()));
  for (int i = 0; i < s4.order(); ++i) all4[static_cast<std::size_t>(i)] = i;
  auto h4 = s4.subgroup({s4.index_of(Permutation::adjacent(4, 0))});
  auto search4 = std::make_shared<FragmentationSearch<FiniteGroup>>(s4, all4, h4, true);
  ConjugationInvariantNorm<int> nu{"fragmentation", [search4](const int& g) { return search4->query(g, 10).norm(); }};
  auto axioms = check_norm_axioms(s4, nu, all4);
  check.expect(axioms.ok(), "fragmentation norm axioms fail on S4");
  check.expect(check_norm_axioms(s4, trivial_norm(s4), all4).ok(), "trivial norm axioms fail on S4");
  return {check.ok(), check.summary("nu_H = 5 - cycles = BFS distance on all 120 elements of S5; norm axioms hold on " +
                                    std::to_string(axioms.checked_pairs) + " pairs of S4")};
}

Outcome p3_splitting(std::mt19937_64& rng) {
  Checker check;
  FreeGroup f2(2);
  std::uniform_int_distribution<int> len(0, 40), twist(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    PureBraidCoordinates c{random_element(f2, rng, len(rng)), twist(rng)};
    check.expect(p3_coordinates(reassemble(c)) == c, "round trip fails for (" + f2.format(c.f2_part) + ", " +
                                                         std::to_string(c.center_exponent) + ")");
  }
  PureBraidGroup3 p3;
  BraidGroup b3(3);
  std::uniform_int_distribution<int> plen(0, 12), clen(0, 4);
  for (int i = 0; i < 1000; ++i) {
    // Conjugating by a random 3-braid mixes in pure braids outside <x, y, z> as words.
    auto r = random_element(b3, rng, clen(rng));
    auto a = conjugate(b3, random_element(p3, rng, plen(rng)), r);
    auto b = conjugate(b3, random_element(p3, rng, plen(rng)), r);
    check.expect(pr1(p3.multiply(a, b)) == multiply(pr1(a), pr1(b)), "pr1 is not multiplicative");
  }
  return {check.ok(), check.summary("p3_coordinates round trip exact on 1000 samples; pr1 multiplicative on 1000 pairs")};
}

Outcome word_algebra(std::mt19937_64& rng) {
  Checker check;
  std::uniform_int_distribution<int> len(0, 16), letter(1, 3), sign(0, 1);
  auto raw = [&] {
    std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
    for (auto& l : out) l = Letter(letter(rng), sign(rng) ? 1 : -1);
    return out;
  };
  for (int i = 0; i < 100000; ++i) {
    auto ra = raw(), rb = raw();
    Word a = Word::reduce(ra), b = Word::reduce(rb), c = Word::reduce(raw());
    check.expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), "associativity");
    check.expect(multiply(a, invert(a)).empty() && multiply(invert(a), a).empty(), "inverse");
    check.expect(Word::reduce(a.letters()) == a, "reduction idempotence");
    std::vector<Letter> cat(ra);
    cat.insert(cat.end(), rb.begin(), rb.end());
    check.expect(Word::reduce(cat) == multiply(a, b), "reduce(ab) != reduce(a) reduce(b)");
    check.expect(invert(multiply(a, b)) == multiply(invert(b), invert(a)), "(ab)^-1 != b^-1 a^-1");
  }
  return {check.ok(), check.summary("100000 random triples in F3: associativity, inverses, reduction idempotence")};
}

Outcome certificate_integrity(std::vector<Json>& certs) {
  Checker check;
  if (certs.empty()) {
    certs = separation_certificates(4);
    std::vector<Json> extra;
    std::mt19937_64 rng(1);
    commutator_packing(extra, rng);
    auto it = std::find_if(extra.begin(), extra.end(), [](const Json& c) { return first_nontrivial_factor(c).has_value(); });
    certs.push_back(it != extra.end() ? *it : extra.front());
  }
  std::size_t verified = 0;
  for (const auto& c : certs) {
    auto r = verify_certificate(Json::parse(c.dump()));
    check.expect(r.ok, "certificate for " + c.value("target", std::string()) + " fails at " + r.step + ": " + r.detail);
    verified += r.ok;
  }
  // One certificate of each kind: mixed upper, ordinary lower, cl upper.
  std::vector<const Json*> samples;
  for (const char* kind : {"scl_upper", "scl_lower", "cl_upper"}) {
    // Prefer upper certificates where dropping a factor is a real fault.
    auto it = std::find_if(certs.begin(), certs.end(), [kind](const Json& c) {
      return c["kind"] == kind && (c["direction"] != "upper" || first_nontrivial_factor(c));
    });
    if (it != certs.end()) samples.push_back(&*it);
  }
  std::size_t injected = 0;
  for (const Json* s : samples) {
    for (const auto& fault : fault_injections(*s)) {
      ++injected;
      auto r = verify_certificate(fault.certificate);
      check.expect(!r.ok && r.step == fault.expected_step,
                   fault.name + ": expected step " + fault.expected_step + ", got " + (r.ok ? "pass" : r.step));
    }
  }
  return {check.ok(), check.summary(std::to_string(verified) + "/" + std::to_string(certs.size()) +
                                    " certificates re-verify; " + std::to_string(injected) +
                                    " injected faults rejected at the expected step")};
}

struct ItemDef {
  const char* id;
  const char* title;
  double limit;
};

const std::vector<ItemDef>& item_defs() {
  static const std::vector<ItemDef> defs = {
      {"brooks-counts", "Brooks counts on [x,y]^n and hbar([x,y]) = 1", 1},
      {"flip-identity", "D alpha D^-1 alpha = 1 in B3", 1},
      {"mixed-upper-family", "alpha^(2n) = [D, alpha^-n], n <= 32", 10},
      {"ordinary-lower", "scl_P3(alpha) >= 1/(2D) and searched defect <= D", 60},
      {"power-commutator", "[f,g]^n = [f^n,g] and precondition rejection", 5},
      {"commutator-packing", "(xy)^2n x^-2n y^-2n as n commutators", 30},
      {"extension", "extension via a section on F2 x Z and B3", 120},
      {"fragmentation", "fragmentation norm on S5 and norm axioms on S4", 30},
      {"p3-splitting", "P3 = F2 x Z coordinates and pr1", 30},
      {"word-algebra", "free-group word algebra properties", 10},
      {"certificate-integrity", "certificates re-verify; faults are named", 10},
  };
  return defs;
}

}  // namespace

bool SuiteReport::pass() const {
  return !items.empty() && std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass(); });
}

Json SuiteReport::to_json(std::uint64_t seed) const {
  Json out;
  out["seed"] = seed;
  out["pass"] = pass();
  Json list = Json::array();
  for (const auto& i : items)
    list.push_back({{"id", i.id},
                    {"title", i.title},
                    {"pass", i.pass()},
                    {"checks_pass", i.checks_pass},
                    {"limit_seconds", i.limit_seconds},
                    {"detail", i.detail}});
  out["items"] = list;
  out["certificates"] = certificates.size();
  return out;
}

std::vector<std::string> suite_item_ids() {
  std::vector<std::string> ids;
  for (const auto& d : item_defs()) ids.push_back(d.id);
  return ids;
}

std::vector<Json> separation_certificates(long long n_max) {
  std::vector<Json> out;
  auto mixed = braid_context(parse_group_pair("braid:3/pure"));
  auto a = alpha();
  for (long long n = 1; n <= n_max; ++n)
    out.push_back(upper_certificate(mixed, 2 * n, flip_decomposition(mixed.group, a, mixed.group.half_twist(), n), a));
  out.push_back(lower_certificate(pure3_context(parse_group_pair("pure:3")), a, kPureLowerSpec));
  return out;
}

std::vector<FaultInjection> fault_injections(const Json& certificate) {
  std::vector<FaultInjection> out;
  auto add = [&out, &certificate](std::string name, std::string step, const std::function<void(Json&)>& edit) {
    Json c = certificate;
    edit(c);
    out.push_back({std::move(name), std::move(c), std::move(step)});
  };
  add("missing witness", "schema", [](Json& c) { c.erase("witness"); });
  add("unknown group", "group_pair", [](Json& c) { c["group_pair"] = "braid:zz"; });
  add("mode flipped", "group_pair", [](Json& c) { c["mode"] = c["mode"] == "mixed" ? "ordinary" : "mixed"; });
  add("garbled target", "target", [](Json& c) { c["target"] = "#"; });
  add("marked unverified", "verified", [](Json& c) { c["verified"] = false; });
  add("edited bound", "bound", [](Json& c) {
    c["bound"] = to_string(parse_rational(c["bound"].get<std::string>()) + Rational(1, 7));
  });
  if (certificate["direction"] == "upper") {
    if (auto k = first_nontrivial_factor(certificate))
      add("dropped factor", "product", [k](Json& c) {
        auto& f = c["witness"]["factors"];
        f.erase(f.begin() + static_cast<long>(*k));
      });
    if (certificate["mode"] == "mixed")
      add("non-member factor", "membership", [](Json& c) {
        auto& f = c["witness"]["factors"][0];
        f[1] = f[0];
      });
  } else {
    add("edited phi value", "qm_value", [](Json& c) {
      c["witness"]["phi_value"] = to_string(parse_rational(c["witness"]["phi_value"].get<std::string>()) + 1);
    });
    add("edited defect", "defect", [](Json& c) {
      c["witness"]["defect"] = to_string(parse_rational(c["witness"]["defect"].get<std::string>()) + 1);
    });
    add("broken qm", "qm", [](Json& c) { c["witness"]["qm"] = "brooks(w="; });
    add("edited check count", "invariance", [](Json& c) {
      c["evidence"]["invariance_sample"]["checked"] = c["evidence"]["invariance_sample"]["checked"].get<long long>() + 1;
    });
  }
  return out;
}

SuiteReport run_suite(const SuiteOptions& options) {
  for (const auto& id : options.only) {
    auto ids = suite_item_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown suite item '" + id + "'");
  }
  SuiteReport report;
  std::mt19937_64 rng(options.seed);
  std::vector<Json>& certs = report.certificates;
  const std::vector<std::function<Outcome()>> bodies = {
      [] { return brooks_counts(); },
      [] { return flip_identity(); },
      [&certs] { return mixed_upper_family(certs); },
      [&certs] { return ordinary_lower(certs); },
      [&certs] { return power_commutators(certs); },
      [&certs, &rng] { return commutator_packing(certs, rng); },
      [&rng] { return extension(rng); },
      [] { return fragmentation(); },
      [&rng] { return p3_splitting(rng); },
      [&rng] { return word_algebra(rng); },
      [&certs] { return certificate_integrity(certs); },
  };
  const auto& defs = item_defs();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), defs[i].id) == options.only.end())
      continue;
    SuiteItem item{defs[i].id, defs[i].title, false, 0, defs[i].limit, {}};
    auto start = std::chrono::steady_clock::now();
    try {
      auto outcome = bodies[i]();
      item.checks_pass = outcome.ok;
      item.detail = outcome.detail;
    } catch (const std::exception& e) {
      item.detail = std::string("exception: ") + e.what();
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace qmlab
