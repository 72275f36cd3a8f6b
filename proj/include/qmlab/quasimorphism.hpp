#pragma once

// Quasimorphisms as exact rational-valued evaluations carrying a defect record, plus
// the generic operations on them: homogenization, pullback, defect search, and
// conjugation-invariance checks.

#include "qmlab/group.hpp"
#include "qmlab/rational.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace qmlab {

/// A certified upper bound on the defect and how it was obtained.
struct DefectBound {
  Rational value;
  std::string provenance;
};

template <class E>
struct Quasimorphism {
  std::string spec;
  std::function<Rational(const E&)> evaluate;
  std::optional<DefectBound> defect_upper;
  Rational defect_lower = 0;
  bool homogeneous = false;
  /// Name of the group under whose conjugation action invariance is known ("" if none).
  std::string invariance;

  Rational operator()(const E& g) const { return evaluate(g); }
};

template <class E>
Quasimorphism<E> zero_quasimorphism() {
  return {"zero", [](const E&) { return Rational(0); }, DefectBound{0, "zero map"}, 0, true, "*"};
}

/// phi(g^n_max)/n_max with certified radius D/n_max; exact (radius 0) when phi is
/// homogeneous.  Radius is absent when no defect bound is known.
template <Group G>
Interval homogenize(const G& group, const Quasimorphism<ElementOf<G>>& phi, const ElementOf<G>& g, long long n_max) {
  if (phi.homogeneous) return {phi(g), Rational(0)};
  if (n_max < 1) n_max = 1;
  Interval out{phi(power(group, g, n_max)) / n_max, std::nullopt};
  if (phi.defect_upper) out.radius = phi.defect_upper->value / n_max;
  return out;
}

/// g -> phi(hom(g)).  D(phi o hom) <= D(phi), so the defect bound carries over.
template <class From, class To, class Hom>
Quasimorphism<From> pullback(const Quasimorphism<To>& phi, Hom hom, const std::string& hom_name) {
  Quasimorphism<From> out;
  out.spec = "pullback(" + phi.spec + ", " + hom_name + ")";
  out.evaluate = [phi, hom](const From& g) { return phi(hom(g)); };
  if (phi.defect_upper)
    out.defect_upper = DefectBound{phi.defect_upper->value, "pullback of [" + phi.defect_upper->provenance + "]"};
  out.homogeneous = phi.homogeneous;
  return out;
}

template <class E>
struct DefectSearchResult {
  Rational lower = 0;
  std::optional<std::pair<E, E>> witness;
  int radius = 0;
  std::size_t pairs = 0;
};

/// Lower bound for the defect of an interval-valued function: over all pairs (g, h) with
/// |g| + |h| <= radius in the word metric, the largest value of
///   |f(gh) - f(g) - f(h)| - (sum of the three radii),
/// clamped at 0.  Exact functions have radius 0.  Shards over g run concurrently and are
/// merged by (value, then first pair in enumeration order), so the result is deterministic.
template <Group G, class IntervalEval>
DefectSearchResult<ElementOf<G>> defect_search_intervals(const G& group, IntervalEval eval, int radius,
                                                         unsigned workers = 0) {
  using E = ElementOf<G>;
  auto elements = ball(group, radius);
  std::vector<Interval> values;
  values.reserve(elements.size());
  for (const auto& e : elements) values.push_back(eval(e.element));

  struct Best {
    Rational value = -1;
    std::size_t i = 0, j = 0;
    std::size_t pairs = 0;
  };
  auto run_shard = [&](std::size_t shard, std::size_t shards) {
    Best best;
    for (std::size_t i = shard; i < elements.size(); i += shards) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        if (elements[i].length + elements[j].length > radius) continue;
        ++best.pairs;
        auto gh = eval(group.multiply(elements[i].element, elements[j].element));
        Rational slack = *gh.radius + *values[i].radius + *values[j].radius;
        Rational gap = abs(gh.center - values[i].center - values[j].center) - slack;
        if (gap < 0) gap = 0;
        if (gap > best.value || (gap == best.value && std::make_pair(i, j) < std::make_pair(best.i, best.j))) {
          best.value = gap;
          best.i = i;
          best.j = j;
        }
      }
    }
    return best;
  };

  for (const auto& v : values)
    if (!v.radius) throw std::invalid_argument("defect search needs certified values");

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Best> results;
  if (workers == 1) {
    results.push_back(run_shard(0, 1));
  } else {
    std::vector<std::future<Best>> futures;
    for (unsigned s = 0; s < workers; ++s) futures.push_back(std::async(std::launch::async, run_shard, s, workers));
    for (auto& f : futures) results.push_back(f.get());
  }

  DefectSearchResult<E> out;
  out.radius = radius;
  Best merged;
  for (const auto& b : results) {
    out.pairs += b.pairs;
    if (b.pairs == 0) continue;
    if (b.value > merged.value ||
        (b.value == merged.value && std::make_pair(b.i, b.j) < std::make_pair(merged.i, merged.j)))
      merged = Best{b.value, b.i, b.j, 0};
  }
  if (merged.value >= 0) {
    out.lower = merged.value;
    out.witness = std::make_pair(elements[merged.i].element, elements[merged.j].element);
  }
  return out;
}

template <Group G>
DefectSearchResult<ElementOf<G>> defect_search(const G& group, const Quasimorphism<ElementOf<G>>& phi, int radius,
                                               unsigned workers = 0) {
  return defect_search_intervals(
      group, [&phi](const ElementOf<G>& g) { return Interval{phi(g), Rational(0)}; }, radius, workers);
}

template <class E>
struct InvarianceViolation {
  E conjugator;
  E target;
  Rational magnitude;  // |phi(c t c^-1) - phi(t)|
};

template <class E>
struct InvarianceReport {
  std::vector<InvarianceViolation<E>> violations;
  std::size_t checked = 0;
  bool clean() const { return violations.empty(); }
};

template <Group G>
InvarianceReport<ElementOf<G>> invariance_check(const G& group, const Quasimorphism<ElementOf<G>>& phi,
                                                const std::vector<ElementOf<G>>& conjugators,
                                                const std::vector<ElementOf<G>>& targets) {
  InvarianceReport<ElementOf<G>> report;
  for (const auto& t : targets) {
    Rational base = phi(t);
    for (const auto& c : conjugators) {
      ++report.checked;
      Rational diff = abs(phi(conjugate(group, t, c)) - base);
      if (diff != 0) report.violations.push_back({c, t, diff});
    }
  }
  return report;
}

/// Returns the first (g, n) with phi(g^n) != n phi(g), n in [n_min, n_max].
template <Group G>
std::optional<std::pair<ElementOf<G>, long long>> homogeneity_violation(const G& group,
                                                                        const Quasimorphism<ElementOf<G>>& phi,
                                                                        const std::vector<ElementOf<G>>& samples,
                                                                        long long n_min, long long n_max) {
  for (const auto& g : samples) {
    Rational base = phi(g);
    for (long long n = n_min; n <= n_max; ++n)
      if (phi(power(group, g, n)) != base * n) return std::make_pair(g, n);
  }
  return std::nullopt;
}

}  // namespace qmlab
