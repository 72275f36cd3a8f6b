#pragma once

// Extending an ambient-invariant homogeneous quasimorphism from a normal subgroup N to
// the ambient group A, given a homomorphic section s of the projection A -> A/N = Z:
//   phi'(a)   = phi(s(pi(a))^-1 a)          with D(phi') <= D(phi)
//   phi_hat   = homogenization of phi'      with D(phi_hat) <= 2 D(phi')
// On N, phi_hat == phi exactly; off N it is reported as a certified interval.

#include "qmlab/errors.hpp"
#include "qmlab/group.hpp"
#include "qmlab/quasimorphism.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qmlab {

template <class E>
struct SectionData {
  std::string spec;
  std::function<E(long long)> section;
  std::function<long long(const E&)> projection;
};

struct SectionCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// pi(s(k)) == k for |k| <= radius, s(0) == 1, and s(a + b) == s(a) s(b) on that range.
template <Group G>
SectionCheck check_section(const G& group, const SectionData<ElementOf<G>>& s, long long radius) {
  SectionCheck r;
  if (!is_identity(group, s.section(0))) {
    r.ok = false;
    r.failures.push_back("s(0) is not the identity");
  }
  for (long long k = -radius; k <= radius; ++k) {
    if (s.projection(s.section(k)) != k) {
      r.ok = false;
      r.failures.push_back("pi(s(" + std::to_string(k) + ")) != " + std::to_string(k));
    }
    for (long long j = -radius; j <= radius; ++j) {
      if (!group.equal(s.section(k + j), group.multiply(s.section(k), s.section(j)))) {
        r.ok = false;
        r.failures.push_back("s is not a homomorphism at (" + std::to_string(k) + ", " + std::to_string(j) + ")");
      }
    }
  }
  return r;
}

struct DefectChain {
  Rational phi;        // certified D(phi)
  Rational phi_prime;  // certified upper bound, <= D(phi)
  Rational phi_hat;    // certified upper bound, <= 2 D(phi')
};

template <class E>
struct ExtensionResult {
  Quasimorphism<E> phi_prime;
  /// Certified interval for phi_hat(a); radius 0 on the normal subgroup.
  std::function<Interval(const E&)> phi_hat;
  DefectChain chain;
  long long n_max = 0;
};

template <Group G>
ExtensionResult<ElementOf<G>> extend_via_section(const G& group, const Quasimorphism<ElementOf<G>>& phi,
                                                 const SectionData<ElementOf<G>>& s,
                                                 std::function<bool(const ElementOf<G>&)> in_subgroup,
                                                 long long n_max) {
  using E = ElementOf<G>;
  if (!phi.defect_upper) throw RefusalError("extension needs a certified defect for " + phi.spec);
  if (!phi.homogeneous) throw RefusalError("extension needs a homogeneous quasimorphism");
  if (phi.invariance.empty()) throw RefusalError("extension needs ambient-invariance evidence for " + phi.spec);
  if (n_max < 1) throw InputError("n_max must be positive");

  ExtensionResult<E> out;
  out.n_max = n_max;
  out.chain = {phi.defect_upper->value, phi.defect_upper->value, 2 * phi.defect_upper->value};

  auto sub_part = [group, s, in_subgroup](const E& a) {
    E rest = group.multiply(group.invert(s.section(s.projection(a))), a);
    if (!in_subgroup(rest))
      throw std::logic_error("section inconsistent: s(pi(a))^-1 a = " + group.format(rest) + " is not in the subgroup");
    return rest;
  };

  out.phi_prime.spec = "extend(" + phi.spec + ", " + s.spec + ")'";
  out.phi_prime.evaluate = [phi, sub_part](const E& a) { return phi(sub_part(a)); };
  out.phi_prime.defect_upper = DefectBound{out.chain.phi_prime, "D(phi') <= D(phi) [" + phi.defect_upper->provenance + "]"};

  auto phi_prime = out.phi_prime;
  out.phi_hat = [group, phi, phi_prime, s, in_subgroup, n_max](const E& a) -> Interval {
    if (s.projection(a) == 0 && in_subgroup(a)) return {phi(a), Rational(0)};
    return homogenize(group, phi_prime, a, n_max);
  };
  return out;
}

template <class E>
struct RestrictionReport {
  bool ok = true;
  bool insufficient_evidence = false;  // empty sample
  std::vector<E> mismatches;
  std::size_t checked = 0;
};

template <class E, class PhiHat>
RestrictionReport<E> restriction_check(const PhiHat& phi_hat, const Quasimorphism<E>& phi, const std::vector<E>& samples) {
  RestrictionReport<E> r;
  r.insufficient_evidence = samples.empty();
  for (const auto& g : samples) {
    ++r.checked;
    Interval v = phi_hat(g);
    if (!v.radius || *v.radius != 0 || v.center != phi(g)) {
      r.ok = false;
      r.mismatches.push_back(g);
    }
  }
  return r;
}

template <class E>
struct DefectChainReport {
  bool ok = true;
  DefectSearchResult<E> phi_prime_search;
  DefectSearchResult<E> phi_hat_search;
  std::vector<std::string> violations;
};

/// Searched defect lower bounds of phi' and phi_hat inside the ball must not exceed D(phi)
/// and 2 D(phi).
template <Group G>
DefectChainReport<ElementOf<G>> defect_chain_check(const G& group, const ExtensionResult<ElementOf<G>>& ext,
                                                   int radius) {
  DefectChainReport<ElementOf<G>> r;
  r.phi_prime_search = defect_search(group, ext.phi_prime, radius);
  r.phi_hat_search = defect_search_intervals(group, ext.phi_hat, radius);
  if (r.phi_prime_search.lower > ext.chain.phi) {
    r.ok = false;
    r.violations.push_back("D(phi') search " + to_string(r.phi_prime_search.lower) + " exceeds D(phi) " +
                           to_string(ext.chain.phi));
  }
  if (r.phi_hat_search.lower > 2 * ext.chain.phi) {
    r.ok = false;
    r.violations.push_back("D(phi_hat) search " + to_string(r.phi_hat_search.lower) + " exceeds 2 D(phi) " +
                           to_string(2 * ext.chain.phi));
  }
  return r;
}

}  // namespace qmlab
