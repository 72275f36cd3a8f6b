#include "qmlab/word.hpp"

#include "qmlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>

namespace qmlab {

Word Word::reduce(std::span<const Letter> raw) {
  Word out;
  out.letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse())
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

Word Word::from_signed(std::initializer_list<int> letters) {
  std::vector<Letter> raw;
  for (int v : letters) {
    if (v == 0) throw InputError("generator index 0 is not a letter");
    raw.push_back(Letter::from_signed(v));
  }
  return reduce(raw);
}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.generator());
  return m;
}

Word reduce(std::span<const Letter> raw, int rank) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].generator() < 1 || raw[i].generator() > rank)
      throw InputError("letter " + std::to_string(i) + " has generator index " +
                       std::to_string(raw[i].generator()) + " outside rank " + std::to_string(rank));
  }
  return Word::reduce(raw);
}

Word multiply(const Word& a, const Word& b) {
  auto la = a.letters();
  auto lb = b.letters();
  std::size_t cancel = 0;
  while (cancel < la.size() && cancel < lb.size() && la[la.size() - 1 - cancel] == lb[cancel].inverse()) ++cancel;
  std::vector<Letter> raw(la.begin(), la.end() - static_cast<std::ptrdiff_t>(cancel));
  raw.insert(raw.end(), lb.begin() + static_cast<std::ptrdiff_t>(cancel), lb.end());
  return Word::reduce(raw);
}

Word invert(const Word& a) {
  std::vector<Letter> raw;
  raw.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) raw.push_back(it->inverse());
  return Word::reduce(raw);
}

Word commutator(const Word& a, const Word& b) { return multiply(multiply(a, b), multiply(invert(a), invert(b))); }

Word power(const Word& a, long long n) {
  Word base = n < 0 ? invert(a) : a;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Word result;
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

long long exponent_sum(const Word& w, int generator) {
  long long s = 0;
  for (Letter l : w.letters())
    if (l.generator() == generator) s += l.sign();
  return s;
}

long long total_exponent_sum(const Word& w) {
  long long s = 0;
  for (Letter l : w.letters()) s += l.sign();
  return s;
}

CyclicReduction cyclic_reduce(const Word& a) {
  auto l = a.letters();
  std::size_t peel = 0;
  while (2 * peel + 1 < l.size() && l[peel] == l[l.size() - 1 - peel].inverse()) ++peel;
  CyclicReduction out;
  out.conjugator = Word::reduce(l.subspan(0, peel));
  out.core = Word::reduce(l.subspan(peel, l.size() - 2 * peel));
  return out;
}

std::string default_alphabet(int rank) {
  if (rank <= 3) return std::string("xyz").substr(0, static_cast<std::size_t>(std::max(rank, 0)));
  return std::string("abcdefghijklmnopqrstuvwxyz").substr(0, static_cast<std::size_t>(rank));
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::string_view alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("word parse error at position " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Word sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')' || text_[pos_] == ']' || text_[pos_] == ',') return w;
      w = multiply(w, powered());
    }
  }

  Word powered() {
    Word base = atom();
    if (at('^')) {
      ++pos_;
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 9) fail("exponent too large");
      long long e = std::stoll(std::string(text_.substr(start, pos_ - start)));
      return power(base, negative ? -e : e);
    }
    return base;
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word a = sequence();
      if (!at(',')) fail("expected ','");
      ++pos_;
      Word b = sequence();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      return commutator(a, b);
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto idx = alphabet_.find(lower);
    if (!std::isalpha(static_cast<unsigned char>(c)) || idx == std::string_view::npos)
      fail(std::string("letter '") + c + "' is not a generator of this group");
    ++pos_;
    int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    Letter l(static_cast<int>(idx) + 1, sign);
    return Word::reduce(std::span<const Letter>(&l, 1));
  }

  std::string_view text_;
  std::string_view alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::string_view alphabet) { return WordParser(text, alphabet).parse(); }

std::string format_word(const Word& w, std::string_view alphabet) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    if (l.generator() > static_cast<int>(alphabet.size()))
      throw DomainError("generator " + std::to_string(l.generator()) + " has no name in alphabet '" +
                        std::string(alphabet) + "'");
    char c = alphabet[static_cast<std::size_t>(l.generator() - 1)];
    out.push_back(l.sign() < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
  }
  return out;
}

FreeGroup::FreeGroup(int rank) : FreeGroup(rank, default_alphabet(rank)) {}

FreeGroup::FreeGroup(int rank, std::string alphabet) : rank_(rank), alphabet_(std::move(alphabet)) {
  if (rank < 1 || rank > 26) throw InputError("free group rank must be in [1, 26]");
  if (static_cast<int>(alphabet_.size()) != rank) throw InputError("alphabet size must equal the rank");
}

Word FreeGroup::multiply(const Word& a, const Word& b) const { return qmlab::multiply(a, b); }

std::vector<Word> FreeGroup::generators() const {
  std::vector<Word> out;
  for (int i = 1; i <= rank_; ++i) out.push_back(generator(i));
  return out;
}

Word FreeGroup::generator(int index) const {
  if (index < 1 || index > rank_) throw InputError("generator index out of rank");
  Letter l(index, 1);
  return Word::reduce(std::span<const Letter>(&l, 1));
}

Word FreeGroup::parse(std::string_view text) const { return parse_word(text, alphabet_); }

void FreeGroup::check(const Word& a) const {
  if (a.max_generator() > rank_) throw DomainError("word uses a generator beyond rank " + std::to_string(rank_));
}

}  // namespace qmlab
