#pragma once

// Runtime group contexts named by text ("free:2", "braid:3/pure", ...): element parsing,
// normal-subgroup membership, quasimorphism construction from specs, and sampling
// generators.  visit_context dispatches a generic callable on the concrete group type.

#include "qmlab/b3_commutator.hpp"
#include "qmlab/braid.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/extension.hpp"
#include "qmlab/product.hpp"
#include "qmlab/pure_braid.hpp"
#include "qmlab/qm_spec.hpp"
#include "qmlab/quasimorphism.hpp"
#include "qmlab/word.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmlab {

enum class AmbientKind {
  free_group,    // free:N
  braid,         // braid:N
  pure3,         // pure:3
  free_times_z,  // product:free:N,int
  swap_free,     // swap:free:N, the extension (F_N x F_N) ⋊ C2
};

/// Ambient group plus an optional normal subgroup ("/pure", "/commutator", "/left").
/// A pair with a subgroup selects mixed mode.
struct GroupPair {
  AmbientKind kind = AmbientKind::free_group;
  int param = 2;
  std::string sub;

  bool mixed() const { return !sub.empty(); }
  std::string ambient_text() const;
  std::string text() const;
};

GroupPair parse_group_pair(std::string_view text);

using FreeTimesZ = DirectProduct<FreeGroup, Integers>;
using SwapFree = SwapExtension<FreeGroup>;

template <Group G>
struct Context {
  G group;
  GroupPair pair;
  std::function<ElementOf<G>(std::string_view)> parse;
  /// Normal-subgroup membership; accepts everything in ordinary mode.
  std::function<bool(const ElementOf<G>&)> in_sub;
  std::function<Quasimorphism<ElementOf<G>>(const QmSpec&)> build_qm;
  /// Elements of the subgroup used for sampling (ambient generators in ordinary mode).
  std::vector<ElementOf<G>> sub_generators;
  /// Index-sum style projection to Z with a homomorphic section, when one is known.
  std::optional<SectionData<ElementOf<G>>> section;

  std::string format(const ElementOf<G>& g) const { return group.format(g); }
  Quasimorphism<ElementOf<G>> qm(std::string_view spec) const { return build_qm(parse_qm_spec(spec)); }
};

/// Quasimorphisms on a free group: brooks(w=..), homog(..), hom(expsum=g), zero.
Quasimorphism<Word> build_free_qm(const QmSpec& spec, const FreeGroup& group);
/// On B_n: hom(indexsum), zero; for n = 3 also pullback(<free qm over xy>, pr1) on P3 and
/// shiftavg(<homogeneous free qm over uv>) on [B3, B3].
Quasimorphism<BraidWord> build_braid_qm(const QmSpec& spec, int strands);
/// On F_N x Z: pullback(<free qm>, pr1), hom(pr2), zero.
Quasimorphism<ProductElement<FreeGroup, Integers>> build_product_qm(const QmSpec& spec, const FreeTimesZ& group);
/// On the swap extension only zero is offered.
Quasimorphism<SwapElement<FreeGroup>> build_swap_qm(const QmSpec& spec, const SwapFree& group);

/// The [B3, B3]-invariant averaging: (1/6) sum_{j<6} phi(theta^j(psi(g))), where psi
/// rewrites g over u, v and theta is conjugation by s1.  Since theta^6 is inner, the
/// result is B3-invariant whenever phi is homogeneous, with the same defect bound.
Quasimorphism<BraidWord> shift_average(const Quasimorphism<Word>& phi);

ProductElement<FreeGroup, Integers> parse_product_element(std::string_view text, const FreeTimesZ& group);
SwapElement<FreeGroup> parse_swap_element(std::string_view text, const SwapFree& group);

Context<FreeGroup> free_context(const GroupPair& pair);
Context<BraidGroup> braid_context(const GroupPair& pair);
Context<PureBraidGroup3> pure3_context(const GroupPair& pair);
Context<FreeTimesZ> product_context(const GroupPair& pair);
Context<SwapFree> swap_context(const GroupPair& pair);

/// Calls f(context) with the concrete context named by `pair`.
template <class F>
decltype(auto) visit_context(const GroupPair& pair, F&& f) {
  switch (pair.kind) {
    case AmbientKind::free_group: return f(free_context(pair));
    case AmbientKind::braid: return f(braid_context(pair));
    case AmbientKind::pure3: return f(pure3_context(pair));
    case AmbientKind::free_times_z: return f(product_context(pair));
    case AmbientKind::swap_free: return f(swap_context(pair));
  }
  throw std::logic_error("unknown group kind");
}

}  // namespace qmlab
