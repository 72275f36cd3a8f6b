#pragma once
// Reference implementations used only by the tests.  Each one is computed by a different
// method than the library code it checks.
#include "qmlab/braid.hpp"
#include "qmlab/word.hpp"

#include <map>
#include <vector>

namespace oracle {

// Laurent polynomials in t with integer coefficients, zero terms dropped.
using Laurent = std::map<int, long long>;

inline Laurent add(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b)
    if ((out[e] += c) == 0) out.erase(e);
  return out;
}

inline Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      if ((out[ea + eb] += ca * cb) == 0) out.erase(ea + eb);
  return out;
}

using BurauMatrix = std::vector<std::vector<Laurent>>;

// Unreduced Burau representation.  sigma_i acts on coordinates i-1, i by
// [[1 - t, t], [1, 0]], its inverse by [[0, 1], [t^-1, 1 - t^-1]].  Faithful on B3.
inline BurauMatrix burau(const qmlab::BraidWord& b) {
  const int n = b.strands;
  BurauMatrix m(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i) m[i][i] = {{0, 1}};
  for (int l : b.letters) {
    int i = (l < 0 ? -l : l) - 1;
    Laurent p, q, r, s;
    if (l > 0) {
      p = {{0, 1}, {1, -1}};
      q = {{1, 1}};
      r = {{0, 1}};
    } else {
      q = {{0, 1}};
      r = {{-1, 1}};
      s = {{0, 1}, {-1, -1}};
    }
    for (int row = 0; row < n; ++row) {
      Laurent a = m[row][i], c = m[row][i + 1];
      m[row][i] = add(mul(a, p), mul(c, r));
      m[row][i + 1] = add(mul(a, q), mul(c, s));
    }
  }
  return m;
}

// Largest number of pairwise disjoint occurrences of w in g, by dynamic programming over
// start positions.
inline long long max_disjoint_copies(const qmlab::Word& w, const qmlab::Word& g) {
  const std::size_t n = g.size(), k = w.size();
  std::vector<long long> best(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    best[i] = best[i + 1];
    if (i + k <= n) {
      bool match = true;
      for (std::size_t j = 0; j < k && match; ++j) match = g[i + j] == w[j];
      if (match) best[i] = std::max(best[i], 1 + best[i + k]);
    }
  }
  return best[0];
}

// Every reduced word of length exactly `length` over `rank` generators.
inline std::vector<qmlab::Word> reduced_words(int rank, int length) {
  std::vector<std::vector<int>> layer{{}};
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int g = -rank; g <= rank; ++g) {
        if (g == 0 || (!w.empty() && w.back() == -g)) continue;
        auto v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  std::vector<qmlab::Word> out;
  for (const auto& w : layer) {
    std::vector<qmlab::Letter> letters;
    for (int g : w) letters.push_back(qmlab::Letter::from_signed(g));
    out.push_back(qmlab::Word::reduce(letters));
  }
  return out;
}

}  // namespace oracle
