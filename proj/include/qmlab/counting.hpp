#pragma once

// Brooks counting functions on free groups.

#include "qmlab/quasimorphism.hpp"
#include "qmlab/word.hpp"

#include <string>
#include <vector>

namespace qmlab {

/// A nonempty reduced word whose copies are counted.
class CountingWord {
 public:
  explicit CountingWord(Word w);
  const Word& word() const { return w_; }
  CountingWord inverse() const { return CountingWord(invert(w_)); }

 private:
  Word w_;
};

/// Start positions of (possibly overlapping) occurrences of w in g.
std::vector<std::size_t> occurrences(const Word& w, const Word& g);

/// Maximal number of pairwise disjoint copies of w in g.  Leftmost-first greedy; optimal
/// because all candidate intervals have the same length.
long long count_copies(const CountingWord& w, const Word& g);

/// lim_n c_w(core^n) / n for a cyclically reduced nonempty core: the greedy scan on the
/// periodic word is a deterministic walk on residues mod |core|, so its cycle gives the
/// exact rate.
Rational periodic_copy_rate(const CountingWord& w, const Word& core);

/// lim c_w(g^n)/n - lim c_{w^-1}(g^n)/n, computed on the cyclic core of g.
Rational homogenize_counting_exact(const CountingWord& w, const Word& g);

/// Certified bound for D(h_w).
///
/// Write g = g'c and h = c^-1 h' with g'h' the reduced form of gh.  For a reduced
/// concatenation uv, c(u) + c(v) <= c(uv) <= c(u) + c(v) + 1, since disjoint copies can
/// straddle the junction at most once.  Applying this to g = g'.c, h = c^-1.h' and gh =
/// g'.h', and using c_w(c^-1) = c_{w^-1}(c), both c_w(gh) - c_w(g) - c_w(h) and the same
/// expression for w^-1 lie in [-S - 2, -S + 1] with S = c_w(c) + c_{w^-1}(c).  Their
/// difference is therefore at most 3.  For |w| = 1, h_w is an exponent sum, so D = 0.
DefectBound defect_bound_counting(const CountingWord& w);

/// h_w(g) = c_w(g) - c_{w^-1}(g).
Quasimorphism<Word> brooks(const CountingWord& w, const FreeGroup& group);
/// The homogenization of h_w, evaluated exactly; D <= 2 D(h_w).
Quasimorphism<Word> homogenized_brooks(const CountingWord& w, const FreeGroup& group);

/// Exponent sum of one generator, a homomorphism F_n -> Z.
Quasimorphism<Word> exponent_sum_hom(int generator, const FreeGroup& group);

}  // namespace qmlab
