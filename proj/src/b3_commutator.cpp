#include "qmlab/b3_commutator.hpp"

#include "qmlab/errors.hpp"

namespace qmlab {

B3CommutatorBasis::B3CommutatorBasis() {
  std::array<Word, 7> s;
  s[0] = Word::from_signed({1});
  s[1] = Word::from_signed({2});
  for (std::size_t k = 2; k < s.size(); ++k) s[k] = multiply(invert(s[k - 2]), s[k - 1]);
  for (std::size_t k = 0; k < base_.size(); ++k) base_[k] = s[k];
  // Rewrite s1^6 Delta^-2; the running s1-exponent stays in [0, 6].
  std::vector<Letter> raw;
  std::size_t k = 0;
  for (int l : {1, 1, 1, 1, 1, 1, -1, -2, -1, -1, -2, -1}) {
    if (l == 1) ++k;
    if (l == -1) --k;
    if (l == -2) {
      --k;
      Word piece = invert(s[k]);
      raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
    }
  }
  c_ = Word::reduce(raw);
}

Word B3CommutatorBasis::schreier_generator(long long k) const {
  long long m = k >= 0 ? k / 6 : -((-k + 5) / 6);
  long long r = k - 6 * m;
  Word cm = power(c_, m);
  return multiply(multiply(cm, base_[static_cast<std::size_t>(r)]), invert(cm));
}

Word B3CommutatorBasis::to_free(const BraidWord& b) const {
  if (b.strands != 3) throw DomainError("expected a 3-braid");
  if (index_sum(b) != 0) throw DomainError("braid " + format_braid(b) + " is not in [B3, B3]");
  std::vector<Letter> raw;
  auto append = [&raw](const Word& piece) { raw.insert(raw.end(), piece.letters().begin(), piece.letters().end()); };
  long long k = 0;
  for (int l : b.letters) {
    switch (l) {
      case 1: ++k; break;
      case -1: --k; break;
      case 2: append(schreier_generator(k)); ++k; break;
      case -2: --k; append(invert(schreier_generator(k))); break;
      default: throw DomainError("bad B3 letter");
    }
  }
  return Word::reduce(raw);
}

BraidWord B3CommutatorBasis::from_free(const Word& w) const {
  BraidWord out{3, {}};
  for (Letter l : w.letters()) {
    BraidWord piece = l.generator() == 1 ? BraidWord{3, {2, -1}} : BraidWord{3, {1, 2, -1, -1}};
    if (l.generator() > 2) throw DomainError("expected a word in u, v");
    out = braid_multiply(out, l.sign() > 0 ? piece : braid_invert(piece));
  }
  return out;
}

Word B3CommutatorBasis::shift(const Word& w, long long times) const {
  // s_0 -> s_times, s_1 -> s_{1+times}.
  Word image_u = schreier_generator(times);
  Word image_v = schreier_generator(times + 1);
  const Word inverse_u = invert(image_u), inverse_v = invert(image_v);
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    const Word& piece = l.generator() == 1 ? (l.sign() > 0 ? image_u : inverse_u) : (l.sign() > 0 ? image_v : inverse_v);
    raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word::reduce(raw);
}

}  // namespace qmlab
