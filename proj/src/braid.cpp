#include "qmlab/braid.hpp"

#include "qmlab/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cctype>
#include <sstream>

namespace qmlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) throw InputError("not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int n, int i) {
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(i + 1)]);
  return p;
}

Permutation Permutation::reversal(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (int i = 0; i < size(); ++i) out.images_[static_cast<std::size_t>((*this)[i])] = i;
  return out;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out = *this;
  for (int i = 0; i < size(); ++i) out.images_[static_cast<std::size_t>(i)] = next[(*this)[i]];
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)[j]) seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

std::string format_permutation(const Permutation& p) {
  std::string out = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i] + 1);
  }
  return out + "]";
}

BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 2) throw InputError("a braid needs at least 2 strands");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw InputError("Artin generator index " + std::to_string(l) + " out of range for B_" + std::to_string(strands));
  return {strands, std::move(letters)};
}

BraidWord delta(int strands) {
  // (s1 s2 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)
  std::vector<int> letters;
  for (int top = strands - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  return make_braid(strands, std::move(letters));
}

BraidWord braid_free_reduce(const BraidWord& a) {
  BraidWord out{a.strands, {}};
  out.letters.reserve(a.letters.size());
  for (int l : a.letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

BraidWord braid_multiply(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw DomainError("strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return braid_free_reduce(out);
}

BraidWord braid_invert(const BraidWord& a) {
  BraidWord out{a.strands, {}};
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

namespace detail {

std::vector<int> starting_set(const Permutation& simple) {
  std::vector<int> out;
  for (int j = 0; j + 1 < simple.size(); ++j)
    if (simple[j] > simple[j + 1]) out.push_back(j);
  return out;
}

std::vector<int> finishing_set(const Permutation& simple) {
  return starting_set(simple.inverse());
}

bool left_weighted(const Permutation& a, const Permutation& b) {
  auto inv = a.inverse();
  for (int j : starting_set(b))
    if (inv[j] < inv[j + 1]) return false;
  return true;
}

}  // namespace detail

namespace {

// Permutation braids on at most kMaxStrands strands, stored inline.
constexpr int kMaxStrands = 32;
using Simple = std::array<std::uint8_t, kMaxStrands>;

Simple simple_identity(int n) {
  Simple p{};
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

// Delta sigma_j^-1: the reversal followed by the transposition of j, j+1.
Simple delta_over_letter(int n, int j) {
  Simple p{};
  for (int i = 0; i < n; ++i) {
    int v = n - 1 - i;
    if (v == j) v = j + 1;
    else if (v == j + 1) v = j;
    p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Simple flip(const Simple& p, int n) {
  Simple out{};
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - 1 - p[static_cast<std::size_t>(n - 1 - i)]);
  return out;
}

bool is_reversal(const Simple& p, int n) {
  for (int i = 0; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] != n - 1 - i) return false;
  return true;
}

bool is_trivial(const Simple& p, int n) {
  for (int i = 0; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

// Moves generators from the head of b to the tail of a until S(b) ⊆ F(a).  Returns
// whether anything moved.  Both stay permutation braids: a * s_j is simple exactly when
// the strands ending at j, j+1 have not crossed in a.
bool make_left_weighted(Simple& a, Simple& b, int n) {
  Simple a_inv{};
  for (int i = 0; i < n; ++i) a_inv[a[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  bool changed = false;
  for (;;) {
    int move = -1;
    for (int j = 0; j + 1 < n; ++j) {
      auto u = static_cast<std::size_t>(j);
      if (b[u] > b[u + 1] && a_inv[u] < a_inv[u + 1]) {
        move = j;
        break;
      }
    }
    if (move < 0) return changed;
    auto u = static_cast<std::size_t>(move);
    // a <- a s_j swaps the values j, j+1; b <- s_j b swaps the entries j, j+1.
    std::swap(a[a_inv[u]], a[a_inv[u + 1]]);
    std::swap(a_inv[u], a_inv[u + 1]);
    std::swap(b[u], b[u + 1]);
    changed = true;
  }
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& b) {
  const int n = b.strands;
  if (n > kMaxStrands) throw DomainError("normal forms are limited to " + std::to_string(kMaxStrands) + " strands");
  GarsideNormalForm nf;
  nf.strands = n;
  // sigma_j^-1 = Delta^-1 (Delta sigma_j^-1), and A Delta^-1 = Delta^-1 flip(A).  Rather
  // than flipping every stored factor, keep them in a frame where the actual factor is
  // flip^parity(stored); left-weightedness is invariant under flip.
  std::vector<Simple> f;
  f.reserve(b.letters.size());
  bool parity = false;
  for (int letter : b.letters) {
    int j = std::abs(letter) - 1;
    Simple s;
    if (letter > 0) {
      s = simple_identity(n);
      std::swap(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j + 1)]);
    } else {
      parity = !parity;
      --nf.infimum;
      s = delta_over_letter(n, j);
    }
    f.push_back(parity ? flip(s, n) : s);
    for (std::size_t k = f.size() - 1; k > 0; --k)
      if (!make_left_weighted(f[k - 1], f[k], n)) break;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = f.size(); k-- > 1;) changed |= make_left_weighted(f[k - 1], f[k], n);
  }
  std::size_t lead = 0;
  while (lead < f.size() && is_reversal(f[lead], n)) ++lead;
  std::size_t end = f.size();
  while (end > lead && is_trivial(f[end - 1], n)) --end;
  nf.infimum += static_cast<long long>(lead);
  nf.factors.reserve(end - lead);
  for (std::size_t k = lead; k < end; ++k) {
    const Simple& p = parity ? flip(f[k], n) : f[k];
    nf.factors.emplace_back(std::vector<int>(p.begin(), p.begin() + n));
  }
  return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw DomainError("strand count mismatch");
  return normal_form(a) == normal_form(b);
}

std::string format_normal_form(const GarsideNormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.infimum) + " |";
  for (const auto& p : nf.factors) out += " " + format_permutation(p);
  return out;
}

long long index_sum(const BraidWord& b) {
  long long s = 0;
  for (int l : b.letters) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord index_section(long long k, int strands) {
  BraidWord out{strands, {}};
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.letters.push_back(k < 0 ? -1 : 1);
  return out;
}

Permutation underlying_permutation(const BraidWord& b) {
  auto p = Permutation::identity(b.strands);
  for (int l : b.letters) p = p.then(Permutation::adjacent(b.strands, std::abs(l) - 1));
  return p;
}

bool is_pure(const BraidWord& b) { return underlying_permutation(b).is_identity(); }

namespace {

[[noreturn]] void braid_parse_fail(std::string_view text, const std::string& why) {
  throw InputError("braid parse error: " + why + " in '" + std::string(text) + "'");
}

long long parse_int(std::string_view token, std::string_view text) {
  if (token.empty()) braid_parse_fail(text, "empty number");
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size() || token.size() > 10) braid_parse_fail(text, "bad number '" + std::string(token) + "'");
  for (std::size_t k = i; k < token.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(token[k])))
      braid_parse_fail(text, "bad number '" + std::string(token) + "'");
  return std::stoll(std::string(token));
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<int> letters;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::istringstream in(buf);
  std::string token;
  const auto half_twist = delta(strands).letters;
  while (in >> token) {
    std::string_view t = token;
    long long exponent = 1;
    if (auto caret = t.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(t.substr(caret + 1), text);
      t = t.substr(0, caret);
    }
    std::vector<int> unit;
    if (t == "D") {
      unit = half_twist;
    } else if (!t.empty() && (t[0] == 's' || t[0] == 'S')) {
      unit = {static_cast<int>(parse_int(t.substr(1), text))};
    } else {
      if (exponent != 1) braid_parse_fail(text, "exponent on compact letter");
      unit = {static_cast<int>(parse_int(t, text))};
    }
    for (int l : unit)
      if (l == 0 || std::abs(l) >= strands)
        braid_parse_fail(text, "generator " + std::to_string(l) + " out of range for B_" + std::to_string(strands));
    if (exponent < -100000 || exponent > 100000) braid_parse_fail(text, "exponent too large");
    for (long long e = 0; e < (exponent < 0 ? -exponent : exponent); ++e) {
      if (exponent > 0) {
        letters.insert(letters.end(), unit.begin(), unit.end());
      } else {
        for (auto it = unit.rbegin(); it != unit.rend(); ++it) letters.push_back(-*it);
      }
    }
  }
  return make_braid(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b.letters[i]);
  }
  return out;
}

BraidGroup::BraidGroup(int strands) : strands_(strands) {
  if (strands < 2) throw InputError("a braid group needs at least 2 strands");
}

BraidWord BraidGroup::multiply(const BraidWord& a, const BraidWord& b) const { return braid_multiply(a, b); }
BraidWord BraidGroup::invert(const BraidWord& a) const { return braid_invert(a); }

std::vector<BraidWord> BraidGroup::generators() const {
  std::vector<BraidWord> out;
  for (int i = 1; i < strands_; ++i) out.push_back(sigma(i));
  return out;
}

BraidWord BraidGroup::sigma(int i) const { return make_braid(strands_, {i}); }

}  // namespace qmlab
