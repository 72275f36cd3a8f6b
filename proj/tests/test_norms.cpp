#include "qmlab/counting.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/finite_group.hpp"
#include "qmlab/norms.hpp"
#include "qmlab/product.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>

using namespace qmlab;

namespace {

// Word length in S5 with respect to all transpositions, by breadth-first search on
// one-line arrays.
std::map<std::array<int, 5>, int> transposition_lengths() {
  std::array<int, 5> id;
  std::iota(id.begin(), id.end(), 0);
  std::map<std::array<int, 5>, int> dist{{id, 0}};
  std::queue<std::array<int, 5>> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto p = todo.front();
    todo.pop();
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        auto q = p;
        std::swap(q[i], q[j]);
        if (dist.emplace(q, dist[p] + 1).second) todo.push(q);
      }
  }
  return dist;
}

std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

TEST_CASE("fragmentation norm of S5 relative to a transposition") {
  auto s5 = FiniteGroup::symmetric(5);
  REQUIRE(s5.order() == 120);
  auto oracle = transposition_lengths();
  REQUIRE(oracle.size() == 120);
  auto h = s5.subgroup({s5.index_of(Permutation::adjacent(5, 0))});
  CHECK(h.size() == 2);
  FragmentationSearch search(s5, all_elements(s5), h, true);
  for (int g = 0; g < 120; ++g) {
    std::array<int, 5> key;
    for (int i = 0; i < 5; ++i) key[static_cast<std::size_t>(i)] = s5.permutation(g)[i];
    auto r = search.query(g, 10);
    REQUIRE(r.verdict == FragmentationVerdict::exact);
    CHECK(r.value == oracle.at(key));
    CHECK(static_cast<long long>(r.witness.size()) == r.value);
    CHECK(reassemble_fragmentation(s5, r.witness) == g);
  }
}

TEST_CASE("fragmentation verdicts") {
  auto s4 = FiniteGroup::symmetric(4);
  // A4 is normal; odd permutations are never reached.
  auto a4 = s4.subgroup({s4.index_of(Permutation({1, 2, 0, 3})), s4.index_of(Permutation({0, 2, 3, 1}))});
  CHECK(a4.size() == 12);
  FragmentationSearch search(s4, all_elements(s4), a4, true);
  auto odd = s4.index_of(Permutation::adjacent(4, 0));
  CHECK(search.query(odd, 10).verdict == FragmentationVerdict::infinite);
  CHECK(search.query(odd, 10).norm().is_infinite());
  FragmentationSearch shallow(s4, all_elements(s4), s4.subgroup({s4.index_of(Permutation::adjacent(4, 0))}), true);
  auto r = shallow.query(s4.index_of(Permutation({1, 2, 3, 0})), 1);
  CHECK(r.verdict == FragmentationVerdict::at_least);
  CHECK(r.value == 2);
}

TEST_CASE("norm axioms") {
  auto s4 = FiniteGroup::symmetric(4);
  auto all = all_elements(s4);
  CHECK(check_norm_axioms(s4, trivial_norm(s4), all).ok());
  ConjugationInvariantNorm<int> not_invariant{"moved points of 0",
                                              [&s4](const int& g) { return NormValue(s4.permutation(g)[0] == 0 ? 0 : 1); }};
  auto r = check_norm_axioms(s4, not_invariant, all);
  CHECK_FALSE(r.ok());
  CHECK(r.conjugation_violations > 0);
  CHECK(r.positivity_violations > 0);
}

TEST_CASE("finite group input") {
  auto g = parse_finite_group("# cyclic of order 3\ntable 3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(g.order() == 3);
  CHECK(g.invert(1) == 2);
  CHECK(parse_finite_group("perm 2 1 3\nperm 1 3 2\n").order() == 6);
  CHECK(parse_permutation("[2,1,3]") == Permutation({1, 0, 2}));
  CHECK_THROWS_AS(parse_finite_group("table 2\n0 1\n1 1\n"), InputError);
  CHECK_THROWS_AS(parse_finite_group("table 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_finite_group("frob 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_finite_group(""), InputError);
  CHECK_THROWS_AS(parse_permutation("1 1 2"), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InputError);
}

TEST_CASE("partial quasimorphism checks") {
  FreeGroup f2(2);
  auto hb = homogenized_brooks(CountingWord(f2.parse("xyXY")), f2);
  std::vector<Word> samples;
  for (auto& e : ball(f2, 3)) samples.push_back(e.element);
  PartialQuasimorphism<Word> phi{"hbar", hb.evaluate, trivial_norm(f2), hb.defect_upper->value, true};
  auto ok = partial_qm_check(f2, phi, samples, 4);
  CHECK(ok.ok());
  CHECK(ok.checked_powers > 0);
  auto tight = phi;
  tight.constant = 0;
  CHECK_FALSE(partial_qm_check(f2, tight, samples, 4).ok());
  auto h = brooks(CountingWord(f2.parse("xy")), f2);
  PartialQuasimorphism<Word> not_homog{"h", h.evaluate, trivial_norm(f2), 3, true};
  CHECK_FALSE(partial_qm_check(f2, not_homog, {f2.parse("yx")}, 3).ok());

  for (const auto& row : conj_invariance_of_partial_qm(f2, phi, f2.parse("xyXY"), f2.parse("yxx"), 12)) CHECK(row.ok);
}

TEST_CASE("vanishing on split commutators") {
  SwapExtension<FreeGroup> g{FreeGroup(2)};
  auto f = g.in_first(g.factor().parse("xyXY"));
  auto t = g.swap();
  CHECK(split_commutator_hypothesis(g, f, t));
  auto hb = homogenized_brooks(CountingWord(g.factor().parse("xyXY")), g.factor());
  PartialQuasimorphism<SwapElement<FreeGroup>> phi{
      "sum", [hb](const SwapElement<FreeGroup>& e) { return hb(e.first) + hb(e.second); }, trivial_norm(g),
      2 * hb.defect_upper->value, false};
  auto report = vanishing_on_split_commutators(g, phi, f, t, 20);
  CHECK(report.ok());
  CHECK(report.rows.size() == 20);
  CHECK(report.rows.front().value == 0);
  auto x = g.in_first(g.factor().parse("x")), y = g.in_first(g.factor().parse("y"));
  CHECK_FALSE(split_commutator_hypothesis(g, x, y));
  CHECK_THROWS_AS(vanishing_on_split_commutators(g, phi, x, y, 3), PreconditionError);
}
