#include "qmlab/pure_braid.hpp"

#include "qmlab/errors.hpp"

#include <stdexcept>

namespace qmlab {

BraidWord embed_f2(const Word& w) {
  BraidWord out{3, {}};
  for (Letter l : w.letters()) {
    if (l.generator() > 2) throw DomainError("embed_f2 expects a word over x, y");
    int s = l.generator() * l.sign();
    out.letters.push_back(s);
    out.letters.push_back(s);
  }
  return out;
}

BraidWord full_twist_power(long long k) {
  BraidWord out{3, {}};
  const auto d = delta(3);
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
    auto piece = k < 0 ? braid_invert(d) : d;
    for (int j = 0; j < 2; ++j) out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return out;
}

BraidWord reassemble(const PureBraidCoordinates& c) {
  return braid_multiply(embed_f2(c.f2_part), full_twist_power(c.center_exponent));
}

namespace {

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Integer weight(const Matrix2& m) {
  Integer s = 0;
  for (const auto& e : m) s += e < 0 ? Integer(-e) : e;
  return s;
}

}  // namespace

Matrix2 sl2_image(const BraidWord& b) {
  if (b.strands != 3) throw DomainError("sl2_image is defined on B3 only");
  static const Matrix2 s1{1, 1, 0, 1}, s1i{1, -1, 0, 1}, s2{1, 0, -1, 1}, s2i{1, 0, 1, 1};
  Matrix2 m{1, 0, 0, 1};
  for (int l : b.letters) {
    switch (l) {
      case 1: m = mul(m, s1); break;
      case -1: m = mul(m, s1i); break;
      case 2: m = mul(m, s2); break;
      case -2: m = mul(m, s2i); break;
      default: throw DomainError("bad B3 letter");
    }
  }
  return m;
}

PureBraidCoordinates p3_coordinates(const BraidWord& b) {
  if (b.strands != 3) throw DomainError("p3_coordinates requires a 3-strand braid");
  if (!is_pure(b)) throw DomainError("braid " + format_braid(b) + " is not pure");

  // Images of x^{±1}, y^{±1}; left-multiplying by the inverse of the leading letter is the
  // unique move that strictly lowers the entry weight (ping-pong on the Sanov subgroup).
  struct Move {
    Letter letter;
    Matrix2 inverse_image;
  };
  static const std::array<Move, 4> moves{{
      {Letter(1, 1), Matrix2{1, -2, 0, 1}},
      {Letter(1, -1), Matrix2{1, 2, 0, 1}},
      {Letter(2, 1), Matrix2{1, 0, 2, 1}},
      {Letter(2, -1), Matrix2{1, 0, -2, 1}},
  }};

  Matrix2 m = sl2_image(b);
  std::vector<Letter> peeled;
  const std::size_t cap = 4 * b.letters.size() + 16;
  while (weight(m) > 2) {
    if (peeled.size() >= cap) throw std::logic_error("P3 peeling exceeded its iteration cap");
    const Move* best = nullptr;
    Matrix2 best_m;
    Integer best_w = weight(m);
    for (const auto& mv : moves) {
      auto cand = mul(mv.inverse_image, m);
      auto w = weight(cand);
      if (w < best_w) {
        best = &mv;
        best_m = cand;
        best_w = w;
      }
    }
    if (!best) throw std::logic_error("P3 peeling stalled: image is not in <x, y> x <-1>");
    peeled.push_back(best->letter);
    m = best_m;
  }
  int sign;
  if (m == Matrix2{1, 0, 0, 1})
    sign = 1;
  else if (m == Matrix2{-1, 0, 0, -1})
    sign = -1;
  else
    throw std::logic_error("P3 peeling ended away from +-I");

  PureBraidCoordinates c;
  c.f2_part = Word::reduce(peeled);
  long long rest = index_sum(b) - 2 * total_exponent_sum(c.f2_part);
  if (rest % 6 != 0) throw std::logic_error("P3 centre exponent is not an integer");
  c.center_exponent = rest / 6;
  if ((c.center_exponent % 2 == 0) != (sign == 1)) throw std::logic_error("P3 centre parity disagrees with SL2 sign");
  if (!braid_equal(reassemble(c), b)) throw std::logic_error("P3 coordinates failed reassembly check");
  return c;
}

std::vector<BraidWord> PureBraidGroup3::generators() const {
  return {BraidWord{3, {1, 1}}, BraidWord{3, {2, 2}}, full_twist_power(1)};
}

}  // namespace qmlab
