#pragma once

// Commutator-length certificates: explicit (mixed) commutator decompositions, searches
// for short ones, the constructive identities that produce them, and quasimorphism lower
// bounds.  scl is never asserted exactly; every output is one side of an interval.

#include "qmlab/errors.hpp"
#include "qmlab/group.hpp"
#include "qmlab/norms.hpp"
#include "qmlab/quasimorphism.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qmlab {

/// target == prod [ambient_i, sub_i]
template <class E>
struct MixedCommutatorDecomposition {
  std::vector<std::pair<E, E>> factors;
  E target;
};

struct DecompositionCheck {
  bool ok = false;
  std::string failure;                       // empty when ok
  std::optional<std::size_t> offending_factor;
};

template <Group G>
DecompositionCheck verify_decomposition(const G& group, const MixedCommutatorDecomposition<ElementOf<G>>& d,
                                        const std::function<bool(const ElementOf<G>&)>& in_subgroup) {
  DecompositionCheck out;
  auto prod = group.identity();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& [a, b] = d.factors[i];
    if (in_subgroup && !in_subgroup(b)) {
      out.failure = "factor " + std::to_string(i) + ": second entry " + group.format(b) + " is not in the subgroup";
      out.offending_factor = i;
      return out;
    }
    prod = group.multiply(prod, commutator(group, a, b));
  }
  if (!group.equal(prod, d.target)) {
    out.failure = "product of commutators is " + group.format(prod) + ", not the target " + group.format(d.target);
    return out;
  }
  out.ok = true;
  return out;
}

template <class E>
struct ClSearchResult {
  std::optional<int> factors;  // least count found; empty means "> max_factors" within the balls
  MixedCommutatorDecomposition<E> witness;
  std::size_t commutators = 0;  // distinct commutators generated from the balls
  std::size_t states = 0;
};

/// Exhaustive search over products of at most `max_factors` commutators [a, b], a from
/// `ambient`, b from `sub`.  Ties resolve to the first commutator in enumeration order, so
/// the witness is deterministic.  The count is exact relative to the supplied elements
/// only; larger balls can only lower it.
template <Group G>
ClSearchResult<ElementOf<G>> mixed_cl_search(const G& group, const ElementOf<G>& target,
                                             const std::vector<ElementOf<G>>& ambient,
                                             const std::vector<ElementOf<G>>& sub, int max_factors,
                                             std::size_t max_states = 2'000'000) {
  using E = ElementOf<G>;
  ClSearchResult<E> out;
  out.witness.target = target;
  if (is_identity(group, target)) {
    out.factors = 0;
    return out;
  }
  struct Step {
    E value;
    E a, b;
  };
  std::vector<Step> steps;
  {
    std::unordered_map<std::string, bool> seen;
    for (const auto& a : ambient)
      for (const auto& b : sub) {
        auto c = commutator(group, a, b);
        if (is_identity(group, c)) continue;
        if (seen.emplace(group.key(c), true).second) steps.push_back({c, a, b});
      }
  }
  out.commutators = steps.size();
  struct Node {
    E element;
    std::size_t parent;
    std::size_t step;
  };
  std::vector<Node> nodes{{group.identity(), 0, 0}};
  std::unordered_map<std::string, std::size_t> index{{group.key(group.identity()), 0}};
  const std::string target_key = group.key(target);
  std::size_t begin = 0;
  for (int layer = 1; layer <= max_factors; ++layer) {
    std::size_t end = nodes.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < steps.size(); ++s) {
        auto next = group.multiply(nodes[i].element, steps[s].value);
        auto key = group.key(next);
        if (!index.emplace(key, nodes.size()).second) continue;
        nodes.push_back({std::move(next), i, s});
        if (key == target_key) {
          out.factors = layer;
          for (std::size_t n = nodes.size() - 1; n != 0; n = nodes[n].parent)
            out.witness.factors.push_back({steps[nodes[n].step].a, steps[nodes[n].step].b});
          std::reverse(out.witness.factors.begin(), out.witness.factors.end());
          out.states = nodes.size();
          return out;
        }
        if (nodes.size() >= max_states) {
          out.states = nodes.size();
          return out;
        }
      }
    }
    begin = end;
  }
  out.states = nodes.size();
  return out;
}

/// (xy)^{2n} x^{-2n} y^{-2n} as a product of n commutators, valid in any group:
///   P_n = [xyx, y^{2n-1} x^-1] * t_n P_{n-1} t_n^-1,   t_n = y^{2n} x^2 y^{-(2n-2)},
/// unrolled so that the k-th factor is the level-k commutator conjugated by t_n ... t_{k+1}.
template <Group G>
MixedCommutatorDecomposition<ElementOf<G>> commutator_identity_xy(const G& group, const ElementOf<G>& x,
                                                                  const ElementOf<G>& y, long long n) {
  if (n < 0) throw InputError("commutator_identity_xy needs n >= 0");
  MixedCommutatorDecomposition<ElementOf<G>> d;
  auto xy = group.multiply(x, y);
  d.target = group.multiply(power(group, xy, 2 * n), group.multiply(power(group, x, -2 * n), power(group, y, -2 * n)));
  const auto xyx = group.multiply(xy, x);
  const auto x_inv = group.invert(x);
  auto conj = group.identity();
  for (long long k = n; k >= 1; --k) {
    auto a = xyx;
    auto b = group.multiply(power(group, y, 2 * k - 1), x_inv);
    d.factors.push_back({conjugate(group, a, conj), conjugate(group, b, conj)});
    auto t = group.multiply(power(group, y, 2 * k), group.multiply(power(group, x, 2), power(group, y, -(2 * k - 2))));
    conj = group.multiply(conj, t);
  }
  return d;
}

/// [f,g]^n = [f^n, g] when f commutes with g f^-1 g^-1; returns the single-factor
/// decomposition (empty for n = 0).
template <Group G>
MixedCommutatorDecomposition<ElementOf<G>> power_commutator(const G& group, const ElementOf<G>& f,
                                                            const ElementOf<G>& g, long long n) {
  if (!split_commutator_hypothesis(group, f, g))
    throw PreconditionError("f = " + group.format(f) + " does not commute with g f^-1 g^-1");
  if (n < 0) throw InputError("power_commutator needs n >= 0");
  MixedCommutatorDecomposition<ElementOf<G>> d;
  d.target = power(group, commutator(group, f, g), n);
  if (n > 0) d.factors.push_back({power(group, f, n), g});
  return d;
}

/// If c x c^-1 == x^-1, then x^{2n} = [c, x^-n] for every n.
template <Group G>
MixedCommutatorDecomposition<ElementOf<G>> flip_decomposition(const G& group, const ElementOf<G>& x,
                                                              const ElementOf<G>& flipper, long long n) {
  if (!group.equal(conjugate(group, x, flipper), group.invert(x)))
    throw PreconditionError(group.format(flipper) + " does not conjugate the target to its inverse");
  return {{{flipper, power(group, x, -n)}}, power(group, x, 2 * n)};
}

enum class LowerBoundKind {
  bound,                    // value is a valid lower bound
  not_in_commutator_group,  // defect 0 and phi(target) != 0
};

struct BavardLower {
  LowerBoundKind kind = LowerBoundKind::bound;
  Rational value = 0;   // |phi(target)| / (2 D)
  Rational phi_value = 0;
  DefectBound defect;
};

/// |phi(target)| / (2 D(phi)).  Requires a homogeneous phi with certified defect; the
/// caller supplies the invariance evidence.
template <class E>
BavardLower bavard_lower(const E& target, const Quasimorphism<E>& phi) {
  if (!phi.homogeneous) throw RefusalError("quasimorphism " + phi.spec + " is not homogeneous");
  if (!phi.defect_upper) throw RefusalError("quasimorphism " + phi.spec + " has no certified defect");
  BavardLower out;
  out.defect = *phi.defect_upper;
  out.phi_value = phi(target);
  if (out.defect.value == 0) {
    out.kind = out.phi_value == 0 ? LowerBoundKind::bound : LowerBoundKind::not_in_commutator_group;
    return out;
  }
  out.value = abs(out.phi_value) / (2 * out.defect.value);
  return out;
}

/// Certified interval for one scl quantity.
struct SclInterval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

struct SandwichReport {
  bool consistent = true;
  std::vector<std::string> contradictions;
};

/// scl_ambient <= scl_mixed <= 2 scl_ambient, checked against certified intervals: ambient
/// lower <= mixed upper, and (when the section hypothesis is asserted) mixed lower <= 2
/// ambient upper.  Each interval must also be internally ordered.
inline SandwichReport sandwich_report(const SclInterval& ambient, const SclInterval& mixed, bool section_hypothesis) {
  SandwichReport r;
  auto flag = [&r](std::string what) {
    r.consistent = false;
    r.contradictions.push_back(std::move(what));
  };
  if (ambient.lower && ambient.upper && *ambient.lower > *ambient.upper)
    flag("ambient interval inverted: " + to_string(*ambient.lower) + " > " + to_string(*ambient.upper));
  if (mixed.lower && mixed.upper && *mixed.lower > *mixed.upper)
    flag("mixed interval inverted: " + to_string(*mixed.lower) + " > " + to_string(*mixed.upper));
  if (ambient.lower && mixed.upper && *ambient.lower > *mixed.upper)
    flag("ambient lower " + to_string(*ambient.lower) + " exceeds mixed upper " + to_string(*mixed.upper));
  if (section_hypothesis && mixed.lower && ambient.upper && *mixed.lower > 2 * *ambient.upper)
    flag("mixed lower " + to_string(*mixed.lower) + " exceeds twice the ambient upper " + to_string(*ambient.upper));
  return r;
}

}  // namespace qmlab
