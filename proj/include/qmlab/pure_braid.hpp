#pragma once

// The splitting P3 = <x, y> x <z> ≅ F2 x Z with x = s1^2, y = s2^2, z = Delta^2.

#include "qmlab/braid.hpp"
#include "qmlab/rational.hpp"
#include "qmlab/word.hpp"

#include <array>
#include <string>
#include <vector>

namespace qmlab {

struct PureBraidCoordinates {
  Word f2_part;                // over x = generator 1, y = generator 2
  long long center_exponent = 0;

  friend bool operator==(const PureBraidCoordinates&, const PureBraidCoordinates&) = default;
};

/// x -> s1^2, y -> s2^2.
BraidWord embed_f2(const Word& w);
BraidWord full_twist_power(long long k);
/// embed_f2(f2_part) * Delta^(2 k).
BraidWord reassemble(const PureBraidCoordinates& c);

/// Exact 2x2 integer matrix, row-major.
using Matrix2 = std::array<Integer, 4>;

/// B3 -> SL(2, Z): s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]].
Matrix2 sl2_image(const BraidWord& b);

/// Coordinates of a pure 3-braid.  The F2 part is recovered by peeling the SL(2, Z) image
/// letter by letter; the result is re-verified by reassembly and Garside equality before it
/// is returned.  Throws DomainError for non-pure input and std::logic_error if the peeling
/// fails to terminate within 4 * |b| + 16 steps or the reassembly check fails.
PureBraidCoordinates p3_coordinates(const BraidWord& b);

/// First projection P3 -> F2.
inline Word pr1(const BraidWord& b) { return p3_coordinates(b).f2_part; }

/// P3 as an abstract group on braids: generated by x, y, z; equality by normal form.
class PureBraidGroup3 {
 public:
  using Element = BraidWord;

  BraidWord identity() const { return {3, {}}; }
  BraidWord multiply(const BraidWord& a, const BraidWord& b) const { return braid_multiply(a, b); }
  BraidWord invert(const BraidWord& a) const { return braid_invert(a); }
  bool equal(const BraidWord& a, const BraidWord& b) const { return braid_equal(a, b); }
  std::string key(const BraidWord& a) const { return format_normal_form(normal_form(a)); }
  std::string format(const BraidWord& a) const { return format_braid(a); }
  std::vector<BraidWord> generators() const;
  bool contains(const BraidWord& b) const { return b.strands == 3 && is_pure(b); }
};

}  // namespace qmlab
