#pragma once

// Braid groups B_n: Artin words, permutation braids, and the left-greedy Garside normal
// form used as the equality oracle.

#include <string>
#include <string_view>
#include <vector>

namespace qmlab {

/// A permutation of {0, ..., n-1} in one-line notation: images()[i] is where the strand
/// starting at position i ends.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The transposition of positions i and i+1 (0-based i).
  static Permutation adjacent(int n, int i);
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  /// Strand-tracking composition: first *this, then `next`.
  Permutation then(const Permutation& next) const;
  bool is_identity() const;
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// One-line notation, 1-based: "[2,1,3]".
std::string format_permutation(const Permutation& p);

struct BraidWord {
  int strands = 2;
  /// Signed Artin generator indices in [1, strands-1]; -i is sigma_i^-1.
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Left-greedy normal form Delta^infimum * factors[0] * ... with every factor a proper,
/// nontrivial permutation braid and every adjacent pair left-weighted.
struct GarsideNormalForm {
  int strands = 2;
  long long infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

BraidWord make_braid(int strands, std::vector<int> letters);
BraidWord delta(int strands);
BraidWord braid_multiply(const BraidWord& a, const BraidWord& b);
BraidWord braid_invert(const BraidWord& a);
/// Cancels adjacent s s^-1 pairs; does not change the element.
BraidWord braid_free_reduce(const BraidWord& a);

GarsideNormalForm normal_form(const BraidWord& b);
bool braid_equal(const BraidWord& a, const BraidWord& b);
/// "D^k | [..] [..]"
std::string format_normal_form(const GarsideNormalForm& nf);

/// Index-sum homomorphism B_n -> Z, sigma_i -> 1.
long long index_sum(const BraidWord& b);
/// sigma_1^k, a section of index_sum.
BraidWord index_section(long long k, int strands);
Permutation underlying_permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

/// Accepts "s1 s2 s1^-1", "D^2 s1" (D is the half twist), or "1,2,-1".
BraidWord parse_braid(std::string_view text, int strands);
/// Compact form "1,2,-1"; the empty braid prints as "".
std::string format_braid(const BraidWord& b);

namespace detail {
// Exposed for tests.
std::vector<int> starting_set(const Permutation& simple);
std::vector<int> finishing_set(const Permutation& simple);
bool left_weighted(const Permutation& a, const Permutation& b);
}  // namespace detail

class BraidGroup {
 public:
  using Element = BraidWord;

  explicit BraidGroup(int strands);

  int strands() const { return strands_; }

  BraidWord identity() const { return {strands_, {}}; }
  BraidWord multiply(const BraidWord& a, const BraidWord& b) const;
  BraidWord invert(const BraidWord& a) const;
  bool equal(const BraidWord& a, const BraidWord& b) const { return braid_equal(a, b); }
  std::string key(const BraidWord& a) const { return format_normal_form(normal_form(a)); }
  std::string format(const BraidWord& a) const { return format_braid(a); }
  std::vector<BraidWord> generators() const;

  BraidWord parse(std::string_view text) const { return parse_braid(text, strands_); }
  BraidWord sigma(int i) const;
  BraidWord half_twist() const { return delta(strands_); }

 private:
  int strands_;
};

}  // namespace qmlab
