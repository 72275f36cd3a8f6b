#pragma once

// Free-group word algebra.  A Word is always freely reduced, so syntactic equality of
// Words is equality in the free group.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmlab {

/// Signed generator: +i is generator i, -i its inverse (i >= 1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : value_(sign < 0 ? -generator : generator) {}
  static constexpr Letter from_signed(int value) { return Letter(value < 0 ? -value : value, value < 0 ? -1 : 1); }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int value_ = 1;
};

class Word {
 public:
  Word() = default;

  /// Freely reduces `raw` (single stack pass).
  static Word reduce(std::span<const Letter> raw);
  static Word from_signed(std::initializer_list<int> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw, int rank);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, long long n);
/// Sum of the signs of the letters of generator `generator`.
long long exponent_sum(const Word& w, int generator);
/// Sum of all letter signs.
long long total_exponent_sum(const Word& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input == conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& a);

/// Generator names: lowercase letter = generator, uppercase = inverse.  The default
/// alphabet for ranks up to 3 is "xyz"; larger ranks use "abc...z".
std::string default_alphabet(int rank);

/// Parses word text over `alphabet` (the i-th character names generator i+1).  Accepts
/// whitespace, powers `x^3`, `x^-2`, parenthesised groups `(xy)^2` and commutator
/// brackets `[u,v]`.  Throws InputError with the offending position.
Word parse_word(std::string_view text, std::string_view alphabet);
std::string format_word(const Word& w, std::string_view alphabet);

class FreeGroup {
 public:
  using Element = Word;

  explicit FreeGroup(int rank);
  FreeGroup(int rank, std::string alphabet);

  int rank() const { return rank_; }
  const std::string& alphabet() const { return alphabet_; }

  Word identity() const { return {}; }
  Word multiply(const Word& a, const Word& b) const;
  Word invert(const Word& a) const { return qmlab::invert(a); }
  bool equal(const Word& a, const Word& b) const { return a == b; }
  std::string key(const Word& a) const { return format(a); }
  std::string format(const Word& a) const { return format_word(a, alphabet_); }
  std::vector<Word> generators() const;

  Word parse(std::string_view text) const;
  Word generator(int index) const;
  /// Throws DomainError if `a` uses a generator beyond the rank.
  void check(const Word& a) const;

 private:
  int rank_;
  std::string alphabet_;
};

}  // namespace qmlab
