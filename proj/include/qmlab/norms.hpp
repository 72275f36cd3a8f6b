#pragma once

// Conjugation-invariant norms (trivial and fragmentation), norm-controlled ("partial")
// quasimorphisms, and executable forms of the estimates used to show that such
// quasimorphisms are conjugation invariant and vanish on split commutators.

#include "qmlab/errors.hpp"
#include "qmlab/group.hpp"
#include "qmlab/rational.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qmlab {

/// Non-negative rational or +infinity.
class NormValue {
 public:
  NormValue(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by intent
  NormValue(long long v) : value_(Rational(v)) {}  // NOLINT
  static NormValue infinity() { return NormValue(); }

  bool is_infinite() const { return !value_; }
  const Rational& value() const { return *value_; }
  std::string str() const { return value_ ? to_string(*value_) : "inf"; }

  friend NormValue operator+(const NormValue& a, const NormValue& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return NormValue(a.value() + b.value());
  }
  friend bool operator==(const NormValue& a, const NormValue& b) { return a.value_ == b.value_; }
  friend bool operator<=(const NormValue& a, const NormValue& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return a.value() <= b.value();
  }
  friend NormValue min(const NormValue& a, const NormValue& b) { return a <= b ? a : b; }

 private:
  NormValue() = default;
  std::optional<Rational> value_;
};

template <class E>
struct ConjugationInvariantNorm {
  std::string name;
  std::function<NormValue(const E&)> evaluate;
  NormValue operator()(const E& g) const { return evaluate(g); }
};

template <Group G>
ConjugationInvariantNorm<ElementOf<G>> trivial_norm(const G& group) {
  return {"trivial", [group](const ElementOf<G>& g) { return NormValue(is_identity(group, g) ? 0 : 1); }};
}

enum class FragmentationVerdict {
  exact,     // least k found and every shorter product enumerated
  at_least,  // not reached within the cap; value is a lower bound
  infinite,  // the search space was exhausted without reaching f
};

template <class E>
struct FragmentationResult {
  FragmentationVerdict verdict = FragmentationVerdict::exact;
  long long value = 0;  // k for exact, cap + 1 for at_least, unused for infinite
  /// (g_i, h_i) with f = prod g_i h_i g_i^-1.
  std::vector<std::pair<E, E>> witness;

  NormValue norm() const {
    return verdict == FragmentationVerdict::infinite ? NormValue::infinity() : NormValue(value);
  }
};

/// Breadth-first search over products of conjugates g h g^-1 (g from `conjugators`, h
/// from `subgroup_elements`), keyed by canonical element form.  Layer k holds exactly the
/// elements of fragmentation length k with respect to these generating data.  When both
/// lists are complete (finite groups) the values are the exact fragmentation norm.
template <Group G>
class FragmentationSearch {
 public:
  using E = ElementOf<G>;

  FragmentationSearch(const G& group, const std::vector<E>& conjugators, const std::vector<E>& subgroup_elements,
                      bool complete)
      : group_(group), complete_(complete) {
    std::unordered_map<std::string, std::size_t> step_index;
    for (const auto& h : subgroup_elements) {
      if (is_identity(group_, h)) continue;
      for (const auto& g : conjugators) {
        auto c = conjugate(group_, h, g);
        if (step_index.emplace(group_.key(c), steps_.size()).second) steps_.push_back({c, g, h});
      }
    }
    nodes_.push_back({group_.identity(), 0, 0, 0});
    index_.emplace(group_.key(group_.identity()), 0);
  }

  /// Expands layers until `layer` is complete or the search space is exhausted.
  void expand_to(long long layer) {
    while (expanded_ < layer && !exhausted_) {
      std::size_t begin = layer_begin_, end = nodes_.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t s = 0; s < steps_.size(); ++s) {
          auto next = group_.multiply(nodes_[i].element, steps_[s].conjugate);
          auto k = group_.key(next);
          if (index_.emplace(k, nodes_.size()).second) nodes_.push_back({std::move(next), expanded_ + 1, i, s});
        }
      }
      layer_begin_ = end;
      ++expanded_;
      if (nodes_.size() == end) exhausted_ = true;
    }
  }

  FragmentationResult<E> query(const E& f, long long cap) {
    expand_to(cap);
    FragmentationResult<E> out;
    auto it = index_.find(group_.key(f));
    if (it == index_.end()) {
      if (exhausted_ && complete_) {
        out.verdict = FragmentationVerdict::infinite;
      } else {
        out.verdict = FragmentationVerdict::at_least;
        out.value = cap + 1;
      }
      return out;
    }
    out.value = nodes_[it->second].layer;
    for (std::size_t n = it->second; n != 0; n = nodes_[n].parent) {
      const auto& st = steps_[nodes_[n].step];
      out.witness.push_back({st.conjugator, st.element});
    }
    std::reverse(out.witness.begin(), out.witness.end());
    return out;
  }

  /// (element, layer) for every element reached so far.
  std::vector<std::pair<E, long long>> layers() const {
    std::vector<std::pair<E, long long>> out;
    for (const auto& n : nodes_) out.push_back({n.element, n.layer});
    return out;
  }

  std::size_t generating_set_size() const { return steps_.size(); }
  bool exhausted() const { return exhausted_; }

 private:
  struct Step {
    E conjugate;
    E conjugator;
    E element;
  };
  struct Node {
    E element;
    long long layer;
    std::size_t parent;
    std::size_t step;
  };

  G group_;
  bool complete_;
  std::vector<Step> steps_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t layer_begin_ = 0;
  long long expanded_ = 0;
  bool exhausted_ = false;
};

/// Reassembles prod g_i h_i g_i^-1.
template <Group G>
ElementOf<G> reassemble_fragmentation(const G& group, const std::vector<std::pair<ElementOf<G>, ElementOf<G>>>& witness) {
  auto out = group.identity();
  for (const auto& [g, h] : witness) out = group.multiply(out, conjugate(group, h, g));
  return out;
}

struct NormAxiomReport {
  std::size_t identity_violations = 0;
  std::size_t symmetry_violations = 0;
  std::size_t triangle_violations = 0;
  std::size_t conjugation_violations = 0;
  std::size_t positivity_violations = 0;
  std::size_t checked_pairs = 0;
  bool ok() const {
    return identity_violations + symmetry_violations + triangle_violations + conjugation_violations +
               positivity_violations ==
           0;
  }
};

/// Checks the five norm axioms on every pair drawn from `elements`.
template <Group G>
NormAxiomReport check_norm_axioms(const G& group, const ConjugationInvariantNorm<ElementOf<G>>& norm,
                                  const std::vector<ElementOf<G>>& elements) {
  NormAxiomReport r;
  if (!(norm(group.identity()) == NormValue(0))) ++r.identity_violations;
  std::vector<NormValue> values;
  for (const auto& f : elements) values.push_back(norm(f));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& f = elements[i];
    if (!(norm(group.invert(f)) == values[i])) ++r.symmetry_violations;
    if (!is_identity(group, f) && values[i] <= NormValue(0)) ++r.positivity_violations;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto& g = elements[j];
      ++r.checked_pairs;
      if (!(norm(group.multiply(f, g)) <= values[i] + values[j])) ++r.triangle_violations;
      if (!(norm(conjugate(group, f, g)) == values[i])) ++r.conjugation_violations;
    }
  }
  return r;
}

/// phi with |phi(fg) - phi(f) - phi(g)| <= C min(nu(f), nu(g)).  The non-strict form is
/// tested since strictness at a single C is not observable.
template <class E>
struct PartialQuasimorphism {
  std::string name;
  std::function<Rational(const E&)> evaluate;
  ConjugationInvariantNorm<E> norm;
  Rational constant;
  bool semi_homogeneous = false;
  Rational operator()(const E& g) const { return evaluate(g); }
};

template <class E>
struct PartialQmReport {
  std::vector<std::string> violations;
  std::size_t checked_pairs = 0;
  std::size_t checked_powers = 0;
  bool ok() const { return violations.empty(); }
};

template <Group G>
PartialQmReport<ElementOf<G>> partial_qm_check(const G& group, const PartialQuasimorphism<ElementOf<G>>& phi,
                                               const std::vector<ElementOf<G>>& samples, long long n_max) {
  PartialQmReport<ElementOf<G>> r;
  std::vector<Rational> values;
  std::vector<NormValue> norms;
  for (const auto& f : samples) {
    values.push_back(phi(f));
    norms.push_back(phi.norm(f));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      ++r.checked_pairs;
      auto m = min(norms[i], norms[j]);
      if (m.is_infinite()) continue;
      Rational gap = abs(phi(group.multiply(samples[i], samples[j])) - values[i] - values[j]);
      if (gap > phi.constant * m.value())
        r.violations.push_back("controlled defect fails at (" + group.format(samples[i]) + ", " +
                               group.format(samples[j]) + "): " + to_string(gap) + " > " +
                               to_string(phi.constant * m.value()));
    }
    if (phi.semi_homogeneous) {
      for (long long n = 0; n <= n_max; ++n) {
        ++r.checked_powers;
        if (phi(power(group, samples[i], n)) != values[i] * n)
          r.violations.push_back("semi-homogeneity fails at " + group.format(samples[i]) + "^" + std::to_string(n));
      }
    }
  }
  return r;
}

struct ConjugationDeviationRow {
  long long k;
  Rational deviation;  // |phi(g f^k g^-1)/k - phi(f)|
  Rational bound;      // (|phi(g)| + |phi(g^-1)| + 2 C nu(g)) / k
  bool ok;
};

/// The quantitative estimate behind conjugation invariance of semi-homogeneous
/// norm-controlled quasimorphisms.
template <Group G>
std::vector<ConjugationDeviationRow> conj_invariance_of_partial_qm(const G& group,
                                                                   const PartialQuasimorphism<ElementOf<G>>& phi,
                                                                   const ElementOf<G>& f, const ElementOf<G>& g,
                                                                   long long n_max) {
  auto nu = phi.norm(g);
  if (nu.is_infinite()) throw PreconditionError("controlling norm is infinite on the conjugator");
  Rational numerator = abs(phi(g)) + abs(phi(group.invert(g))) + 2 * phi.constant * nu.value();
  Rational base = phi(f);
  std::vector<ConjugationDeviationRow> rows;
  for (long long k = 1; k <= n_max; ++k) {
    Rational dev = abs(phi(conjugate(group, power(group, f, k), g)) / k - base);
    Rational bound = numerator / k;
    rows.push_back({k, dev, bound, dev <= bound});
  }
  return rows;
}

/// f (g f^-1 g^-1) == (g f^-1 g^-1) f, checked exactly.
template <Group G>
bool split_commutator_hypothesis(const G& group, const ElementOf<G>& f, const ElementOf<G>& g) {
  auto other = conjugate(group, group.invert(f), g);
  return group.equal(group.multiply(f, other), group.multiply(other, f));
}

struct VanishingRow {
  long long n;
  bool identity_holds;  // [f,g]^n == [f^n, g]
  Rational value;       // |phi([f,g])|
  Rational bound;       // R / n
  bool ok;
};

struct VanishingReport {
  Rational R;
  std::vector<VanishingRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.identity_holds || !r.ok) return false;
    return true;
  }
};

/// Verifies [f,g]^n = [f^n, g] exactly for n <= n_max and |phi([f,g])| <= R/n with
/// R = max(|phi(g) + phi(g^-1) + C nu(g)|, |C nu(g)|).  Throws PreconditionError when f
/// does not commute with g f^-1 g^-1.
template <Group G>
VanishingReport vanishing_on_split_commutators(const G& group, const PartialQuasimorphism<ElementOf<G>>& phi,
                                               const ElementOf<G>& f, const ElementOf<G>& g, long long n_max) {
  if (!split_commutator_hypothesis(group, f, g))
    throw PreconditionError("f = " + group.format(f) + " does not commute with g f^-1 g^-1 for g = " +
                            group.format(g));
  auto nu = phi.norm(g);
  if (nu.is_infinite()) throw PreconditionError("controlling norm is infinite on g");
  Rational c_nu = phi.constant * nu.value();
  VanishingReport report;
  report.R = std::max(abs(phi(g) + phi(group.invert(g)) + c_nu), abs(c_nu));
  auto fg = commutator(group, f, g);
  Rational value = abs(phi(fg));
  for (long long n = 1; n <= n_max; ++n) {
    bool identity = group.equal(power(group, fg, n), commutator(group, power(group, f, n), g));
    Rational bound = report.R / n;
    report.rows.push_back({n, identity, value, bound, value <= bound});
  }
  return report;
}

}  // namespace qmlab
