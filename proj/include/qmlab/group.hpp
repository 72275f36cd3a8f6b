#pragma once

// Generic group-element interface shared by every module.  A group context is any type
// modelling `Group`: it owns the parameters (rank, strand count, ...) and supplies the
// four group operations plus a canonical key used for hashing and deduplication.

#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qmlab {

template <class G>
concept Group = requires(const G& group, const typename G::Element& a) {
  typename G::Element;
  { group.identity() } -> std::same_as<typename G::Element>;
  { group.multiply(a, a) } -> std::same_as<typename G::Element>;
  { group.invert(a) } -> std::same_as<typename G::Element>;
  { group.equal(a, a) } -> std::same_as<bool>;
  // Canonical form: key(a) == key(b) iff equal(a, b).
  { group.key(a) } -> std::same_as<std::string>;
  { group.format(a) } -> std::same_as<std::string>;
  // Generating set; ball enumeration closes it under inversion.
  { group.generators() } -> std::same_as<std::vector<typename G::Element>>;
};

template <Group G>
using ElementOf = typename G::Element;

template <Group G>
ElementOf<G> power(const G& group, const ElementOf<G>& a, long long n) {
  ElementOf<G> base = n < 0 ? group.invert(a) : a;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  ElementOf<G> result = group.identity();
  while (e) {
    if (e & 1) result = group.multiply(result, base);
    e >>= 1;
    if (e) base = group.multiply(base, base);
  }
  return result;
}

/// a b a^-1 b^-1
template <Group G>
ElementOf<G> commutator(const G& group, const ElementOf<G>& a, const ElementOf<G>& b) {
  return group.multiply(group.multiply(a, b), group.multiply(group.invert(a), group.invert(b)));
}

/// by * a * by^-1
template <Group G>
ElementOf<G> conjugate(const G& group, const ElementOf<G>& a, const ElementOf<G>& by) {
  return group.multiply(group.multiply(by, a), group.invert(by));
}

template <Group G>
ElementOf<G> product(const G& group, std::span<const ElementOf<G>> factors) {
  ElementOf<G> result = group.identity();
  for (const auto& f : factors) result = group.multiply(result, f);
  return result;
}

template <Group G>
bool is_identity(const G& group, const ElementOf<G>& a) {
  return group.equal(a, group.identity());
}

template <class E>
struct BallEntry {
  E element;
  int length;
};

/// Breadth-first enumeration of the word-metric ball of the given radius with respect to
/// `generators` and their inverses, deduplicated by canonical key.  Entries come out in
/// nondecreasing length, and the order is deterministic.
template <Group G>
std::vector<BallEntry<ElementOf<G>>> ball(const G& group, int radius,
                                          const std::vector<ElementOf<G>>& generators) {
  std::vector<ElementOf<G>> steps;
  std::unordered_set<std::string> step_keys;
  for (const auto& g : generators) {
    for (const auto& s : {g, group.invert(g)}) {
      if (is_identity(group, s)) continue;
      if (step_keys.insert(group.key(s)).second) steps.push_back(s);
    }
  }
  std::vector<BallEntry<ElementOf<G>>> out;
  std::unordered_set<std::string> seen;
  out.push_back({group.identity(), 0});
  seen.insert(group.key(group.identity()));
  std::size_t layer_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : steps) {
        auto next = group.multiply(out[i].element, s);
        if (seen.insert(group.key(next)).second) out.push_back({std::move(next), r});
      }
    }
    layer_begin = layer_end;
    if (layer_begin == out.size()) break;
  }
  return out;
}

template <Group G>
std::vector<BallEntry<ElementOf<G>>> ball(const G& group, int radius) {
  return ball(group, radius, group.generators());
}

/// Random product of `length` letters drawn from `gens` and their inverses.  Not uniform
/// on the sphere; sufficient for property sampling.
template <Group G>
ElementOf<G> random_product(const G& group, const std::vector<ElementOf<G>>& gens, std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  ElementOf<G> result = group.identity();
  for (int i = 0; i < length; ++i) {
    std::size_t k = pick(rng);
    const auto& g = gens[k / 2];
    result = group.multiply(result, k % 2 ? group.invert(g) : g);
  }
  return result;
}

template <Group G>
ElementOf<G> random_element(const G& group, std::mt19937_64& rng, int length) {
  return random_product(group, group.generators(), rng, length);
}

/// Checks h(ab) = h(a)h(b) on `samples` random pairs.  Returns the index of the first
/// failing pair, or -1.
template <Group From, Group To, class Hom>
long long find_homomorphism_violation(const From& from, const To& to, const Hom& hom, std::mt19937_64& rng,
                                      int samples, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  for (int i = 0; i < samples; ++i) {
    auto a = random_element(from, rng, len(rng));
    auto b = random_element(from, rng, len(rng));
    if (!to.equal(hom(from.multiply(a, b)), to.multiply(hom(a), hom(b)))) return i;
  }
  return -1;
}

}  // namespace qmlab
