#pragma once

// Finite groups as multiplication tables, built from permutation generators or read from
// a table.  Elements are indices; 0 is the identity.

#include "qmlab/braid.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmlab {

class FiniteGroup {
 public:
  using Element = int;

  static FiniteGroup from_permutations(const std::vector<Permutation>& generators);
  /// Validates closure, identity at index 0, inverses, and associativity.
  static FiniteGroup from_table(std::vector<std::vector<int>> table);
  static FiniteGroup symmetric(int degree);

  int order() const { return static_cast<int>(table_.size()); }

  int identity() const { return 0; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int invert(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  bool equal(int a, int b) const { return a == b; }
  std::string key(int a) const { return std::to_string(a); }
  std::string format(int a) const;
  std::vector<int> generators() const { return generators_; }

  bool has_permutations() const { return !perms_.empty(); }
  const Permutation& permutation(int a) const { return perms_.at(static_cast<std::size_t>(a)); }
  /// Index of a permutation element; throws DomainError if absent.
  int index_of(const Permutation& p) const;
  /// All elements of the subgroup generated by `gens`, identity first.
  std::vector<int> subgroup(const std::vector<int>& gens) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<Permutation> perms_;
};

/// Text format, one directive per line ('#' starts a comment):
///   perm 2 1 3 4 5        (a generator in 1-based one-line notation)
/// or
///   table N               (followed by N rows of N 0-based entries; 0 is the identity)
FiniteGroup parse_finite_group(std::string_view text);

/// "2 1 3" or "[2,1,3]" (1-based).
Permutation parse_permutation(std::string_view text);

}  // namespace qmlab
