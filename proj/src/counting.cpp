#include "qmlab/counting.hpp"

#include "qmlab/errors.hpp"

#include <map>

namespace qmlab {

CountingWord::CountingWord(Word w) : w_(std::move(w)) {
  if (w_.empty()) throw InputError("counting word must be nonempty");
}

std::vector<std::size_t> occurrences(const Word& w, const Word& g) {
  std::vector<std::size_t> out;
  if (w.empty() || w.size() > g.size()) return out;
  for (std::size_t i = 0; i + w.size() <= g.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < w.size() && match; ++k) match = g[i + k] == w[k];
    if (match) out.push_back(i);
  }
  return out;
}

long long count_copies(const CountingWord& w, const Word& g) {
  long long count = 0;
  std::size_t next_free = 0;
  for (std::size_t start : occurrences(w.word(), g)) {
    if (start < next_free) continue;
    ++count;
    next_free = start + w.word().size();
  }
  return count;
}

Rational periodic_copy_rate(const CountingWord& w, const Word& core) {
  const std::size_t period = core.size();
  if (period == 0) return 0;
  const Word& pattern = w.word();
  std::vector<bool> starts(period, false);
  bool any = false;
  for (std::size_t r = 0; r < period; ++r) {
    bool match = true;
    for (std::size_t k = 0; k < pattern.size() && match; ++k) match = core[(r + k) % period] == pattern[k];
    starts[r] = match;
    any |= match;
  }
  if (!any) return 0;

  // state: scan position mod period.  Walk until a state repeats.
  std::map<std::size_t, std::pair<long long, unsigned long long>> first_visit;  // state -> (matches, absolute position)
  std::size_t state = 0;
  long long matches = 0;
  unsigned long long position = 0;
  for (;;) {
    if (auto it = first_visit.find(state); it != first_visit.end()) {
      long long cycle_matches = matches - it->second.first;
      unsigned long long cycle_length = position - it->second.second;
      return Rational(Integer(cycle_matches) * Integer(period), Integer(cycle_length));
    }
    first_visit[state] = {matches, position};
    std::size_t gap = 0;
    while (!starts[(state + gap) % period]) ++gap;
    position += gap + pattern.size();
    ++matches;
    state = (state + gap + pattern.size()) % period;
  }
}

Rational homogenize_counting_exact(const CountingWord& w, const Word& g) {
  Word core = cyclic_reduce(g).core;
  return periodic_copy_rate(w, core) - periodic_copy_rate(w.inverse(), core);
}

DefectBound defect_bound_counting(const CountingWord& w) {
  if (w.word().size() == 1) return {0, "junction bound: |w| = 1, h_w is an exponent sum"};
  return {3, "junction bound: D(h_w) <= 3"};
}

Quasimorphism<Word> brooks(const CountingWord& w, const FreeGroup& group) {
  group.check(w.word());
  Quasimorphism<Word> q;
  q.spec = "brooks(w=" + group.format(w.word()) + ")";
  CountingWord inv = w.inverse();
  q.evaluate = [w, inv, group](const Word& g) {
    group.check(g);
    return Rational(count_copies(w, g) - count_copies(inv, g));
  };
  q.defect_upper = defect_bound_counting(w);
  q.homogeneous = w.word().size() == 1;
  q.invariance = q.homogeneous ? "free:" + std::to_string(group.rank()) : "";
  return q;
}

Quasimorphism<Word> homogenized_brooks(const CountingWord& w, const FreeGroup& group) {
  group.check(w.word());
  Quasimorphism<Word> q;
  q.spec = "homog(brooks(w=" + group.format(w.word()) + "))";
  q.evaluate = [w, group](const Word& g) {
    group.check(g);
    return homogenize_counting_exact(w, g);
  };
  auto base = defect_bound_counting(w);
  q.defect_upper = DefectBound{2 * base.value, "homogenization doubles [" + base.provenance + "]"};
  q.homogeneous = true;
  q.invariance = "free:" + std::to_string(group.rank());
  return q;
}

Quasimorphism<Word> exponent_sum_hom(int generator, const FreeGroup& group) {
  if (generator < 1 || generator > group.rank()) throw InputError("generator out of rank");
  Quasimorphism<Word> q;
  q.spec = "hom(expsum=" + std::string(1, group.alphabet()[static_cast<std::size_t>(generator - 1)]) + ")";
  q.evaluate = [generator](const Word& g) { return Rational(exponent_sum(g, generator)); };
  q.defect_upper = DefectBound{0, "homomorphism"};
  q.homogeneous = true;
  q.invariance = "free:" + std::to_string(group.rank());
  return q;
}

}  // namespace qmlab
