#include "oracles.hpp"
#include "qmlab/braid.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/group.hpp"

#include <doctest.h>

#include <random>

using namespace qmlab;

namespace {

BraidWord random_braid(int n, std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  BraidWord b{n, {}};
  for (int i = 0; i < length; ++i) b.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return b;
}

// Applies relation moves that preserve the braid: insert s s^-1, rewrite s_i s_j s_i as
// s_j s_i s_j for |i - j| = 1, or swap commuting neighbours.
BraidWord rewrite(BraidWord b, std::mt19937_64& rng, int moves) {
  std::uniform_int_distribution<int> kind(0, 2), gen(1, b.strands - 1);
  for (int m = 0; m < moves; ++m) {
    auto& l = b.letters;
    std::uniform_int_distribution<std::size_t> pos(0, l.size());
    std::size_t p = pos(rng);
    switch (kind(rng)) {
      case 0: {
        int s = gen(rng);
        l.insert(l.begin() + static_cast<long>(p), {s, -s});
        break;
      }
      case 1:
        if (p + 2 < l.size() && l[p] == l[p + 2] && std::abs(std::abs(l[p]) - std::abs(l[p + 1])) == 1 &&
            (l[p] > 0) == (l[p + 1] > 0))
          std::swap(l[p], l[p + 1]), l[p + 2] = l[p];
        break;
      default:
        if (p + 1 < l.size() && std::abs(std::abs(l[p]) - std::abs(l[p + 1])) > 1) std::swap(l[p], l[p + 1]);
    }
  }
  return b;
}

}  // namespace

TEST_CASE("braid relations hold in normal form") {
  BraidGroup b4(4);
  auto s = [&](int i) { return b4.sigma(i); };
  CHECK(b4.equal(braid_multiply(braid_multiply(s(1), s(2)), s(1)), braid_multiply(braid_multiply(s(2), s(1)), s(2))));
  CHECK(b4.equal(braid_multiply(s(1), s(3)), braid_multiply(s(3), s(1))));
  CHECK_FALSE(b4.equal(braid_multiply(s(1), s(2)), braid_multiply(s(2), s(1))));
  CHECK_FALSE(b4.equal(s(1), b4.identity()));
  BraidWord d = delta(4), d2 = braid_multiply(d, d);
  for (int i = 1; i <= 3; ++i) {
    CHECK(b4.equal(conjugate(b4, s(i), d), s(4 - i)));
    CHECK(b4.equal(braid_multiply(d2, s(i)), braid_multiply(s(i), d2)));
  }
}

TEST_CASE("normal form shape") {
  CHECK(format_normal_form(normal_form(parse_braid("s1 s2 s1", 3))) == "D^1 |");
  auto nf = normal_form(power(BraidGroup(5), delta(5), -3));
  CHECK(nf.infimum == -3);
  CHECK(nf.factors.empty());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto b = random_braid(5, rng, 30);
    auto f = normal_form(b);
    for (const auto& p : f.factors) {
      CHECK_FALSE(p.is_identity());
      CHECK(p != Permutation::reversal(5));
    }
    for (std::size_t k = 0; k + 1 < f.factors.size(); ++k) CHECK(detail::left_weighted(f.factors[k], f.factors[k + 1]));
    CHECK(normal_form(braid_multiply(b, braid_invert(b))).factors.empty());
  }
}

TEST_CASE("normal form agrees with the Burau representation on B3") {
  std::mt19937_64 rng(2024);
  int equal_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    auto a = random_braid(3, rng, 10);
    auto b = i % 2 ? rewrite(a, rng, 12) : random_braid(3, rng, 10);
    bool nf = braid_equal(a, b);
    CHECK(nf == (oracle::burau(a) == oracle::burau(b)));
    equal_pairs += nf;
  }
  CHECK(equal_pairs >= 200);
  for (int i = 0; i < 500; ++i) {
    auto a = random_braid(3, rng, 6), b = random_braid(3, rng, 6);
    CHECK(braid_equal(a, b) == (oracle::burau(a) == oracle::burau(b)));
  }
}

TEST_CASE("relation moves preserve the normal form on B4 and B6") {
  std::mt19937_64 rng(99);
  for (int n : {4, 6}) {
    for (int i = 0; i < 150; ++i) {
      auto a = random_braid(n, rng, 16);
      auto b = rewrite(a, rng, 20);
      CHECK(normal_form(a) == normal_form(b));
      CHECK(oracle::burau(a) == oracle::burau(b));
    }
  }
}

TEST_CASE("braid utilities") {
  BraidWord b = parse_braid("s1 s2^-1 s1", 3);
  CHECK(b == parse_braid("1,-2,1", 3));
  CHECK(index_sum(b) == 1);
  CHECK(is_pure(parse_braid("1,1,2,2", 3)));
  CHECK_FALSE(is_pure(b));
  CHECK(underlying_permutation(delta(4)) == Permutation::reversal(4));
  CHECK(braid_equal(parse_braid("D^2", 3), power(BraidGroup(3), delta(3), 2)));
  CHECK(index_sum(index_section(5, 4)) == 5);
  CHECK_THROWS_AS(parse_braid("s3", 3), InputError);
  CHECK_THROWS_AS(parse_braid("s1 q", 3), InputError);
  CHECK_THROWS_AS(normal_form(make_braid(40, {1})), DomainError);
  CHECK(detail::starting_set(Permutation::adjacent(3, 1)).size() == 1);
  CHECK(detail::starting_set(Permutation::adjacent(3, 1)) == detail::finishing_set(Permutation::adjacent(3, 1)));
  CHECK(detail::finishing_set(Permutation::reversal(3)).size() == 2);
}
