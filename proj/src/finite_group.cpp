#include "qmlab/finite_group.hpp"

#include "qmlab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qmlab {

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw InputError("need at least one generator");
  const int n = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != n) throw InputError("generators act on different degrees");

  FiniteGroup group;
  std::map<Permutation, int> index;
  group.perms_.push_back(Permutation::identity(n));
  index[group.perms_.back()] = 0;
  for (std::size_t i = 0; i < group.perms_.size(); ++i) {
    for (const auto& g : generators) {
      auto next = group.perms_[i].then(g);
      if (index.emplace(next, static_cast<int>(group.perms_.size())).second) group.perms_.push_back(next);
      if (group.perms_.size() > 50000) throw InputError("generated group is too large");
    }
  }
  const std::size_t order = group.perms_.size();
  group.table_.assign(order, std::vector<int>(order));
  group.inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) group.table_[a][b] = index.at(group.perms_[a].then(group.perms_[b]));
    group.inverse_[a] = index.at(group.perms_[a].inverse());
  }
  for (const auto& g : generators) group.generators_.push_back(index.at(g));
  return group;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InputError("table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][static_cast<std::size_t>(a)] != a || table[static_cast<std::size_t>(a)][0] != a)
      throw InputError("element 0 is not the identity");
  FiniteGroup group;
  group.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0) group.inverse_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (group.inverse_[static_cast<std::size_t>(a)] < 0) throw InputError("element without inverse");
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw InputError("multiplication table is not associative");
  group.table_ = std::move(table);
  for (int a = 1; a < n; ++a) group.generators_.push_back(a);
  return group;
}

FiniteGroup FiniteGroup::symmetric(int degree) {
  if (degree < 2) throw InputError("symmetric group degree must be >= 2");
  std::vector<int> cycle(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % degree;
  return from_permutations({Permutation::adjacent(degree, 0), Permutation(cycle)});
}

std::string FiniteGroup::format(int a) const {
  if (has_permutations()) return format_permutation(permutation(a));
  return "e" + std::to_string(a);
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::find(perms_.begin(), perms_.end(), p);
  if (it == perms_.end()) throw DomainError("permutation " + format_permutation(p) + " is not in the group");
  return static_cast<int>(it - perms_.begin());
}

std::vector<int> FiniteGroup::subgroup(const std::vector<int>& gens) const {
  std::vector<int> out{0};
  std::vector<bool> seen(table_.size(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      int next = multiply(out[i], g);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        out.push_back(next);
      }
    }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::string buf(text);
  for (char& c : buf)
    if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  std::istringstream in(buf);
  std::vector<int> img;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("");
      img.push_back(v - 1);
    } catch (const std::exception&) {
      throw InputError("bad permutation entry '" + tok + "'");
    }
  }
  if (img.empty()) throw InputError("empty permutation");
  return Permutation(img);
}

FiniteGroup parse_finite_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Permutation> perms;
  std::optional<std::vector<std::vector<int>>> table;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    if (directive == "perm") {
      std::string rest;
      std::getline(ls, rest);
      perms.push_back(parse_permutation(rest));
    } else if (directive == "table") {
      int n = 0;
      if (!(ls >> n) || n <= 0) throw InputError("line " + std::to_string(line_no) + ": bad table size");
      table.emplace();
      for (int r = 0; r < n; ++r) {
        std::vector<int> row(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
          if (!(in >> row[static_cast<std::size_t>(c)])) throw InputError("truncated multiplication table");
        table->push_back(std::move(row));
      }
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown directive '" + directive + "'");
    }
  }
  if (table && !perms.empty()) throw InputError("give either permutations or a table, not both");
  if (table) return FiniteGroup::from_table(std::move(*table));
  if (perms.empty()) throw InputError("no group data");
  return FiniteGroup::from_permutations(perms);
}

}  // namespace qmlab
