#pragma once

// [B3, B3] is free on u = s2 s1^-1 and v = s1 s2 s1^-2 (Reidemeister-Schreier with
// transversal {s1^k}).  Writing s_k = s1^k s2 s1^-(k+1), the braid relation gives
// s_{k+2} = s_k^-1 s_{k+1}, and conjugation by s1 shifts s_k -> s_{k+1}.  Since
// s1^6 = Delta^2 c with Delta^2 central and c in [B3, B3], s_{k+6} = c s_k c^-1, which keeps
// every s_k of length linear in |k|.

#include "qmlab/braid.hpp"
#include "qmlab/word.hpp"

#include <array>

namespace qmlab {

class B3CommutatorBasis {
 public:
  B3CommutatorBasis();

  /// Rewrites a 3-braid of index sum 0 as a word in u (generator 1) and v (generator 2).
  Word to_free(const BraidWord& b) const;
  BraidWord from_free(const Word& w) const;
  /// The automorphism induced by conjugation with s1^times.
  Word shift(const Word& w, long long times) const;
  /// s_k as a word in u, v.
  Word schreier_generator(long long k) const;
  /// c = s1^6 Delta^-2 as a word in u, v.
  const Word& period_conjugator() const { return c_; }

 private:
  std::array<Word, 6> base_;  // s_0 .. s_5
  Word c_;
};

}  // namespace qmlab
