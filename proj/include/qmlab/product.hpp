#pragma once

// Integers, direct products, and the factor-swapping extension (G x G) ⋊ C2.

#include "qmlab/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmlab {

class Integers {
 public:
  using Element = long long;

  long long identity() const { return 0; }
  long long multiply(long long a, long long b) const { return a + b; }
  long long invert(long long a) const { return -a; }
  bool equal(long long a, long long b) const { return a == b; }
  std::string key(long long a) const { return std::to_string(a); }
  std::string format(long long a) const { return std::to_string(a); }
  std::vector<long long> generators() const { return {1}; }
};

template <Group Left, Group Right>
struct ProductElement {
  ElementOf<Left> left;
  ElementOf<Right> right;
};

template <Group Left, Group Right>
class DirectProduct {
 public:
  using Element = ProductElement<Left, Right>;

  DirectProduct(Left left, Right right) : left_(std::move(left)), right_(std::move(right)) {}

  const Left& left() const { return left_; }
  const Right& right() const { return right_; }

  Element identity() const { return {left_.identity(), right_.identity()}; }
  Element multiply(const Element& a, const Element& b) const {
    return {left_.multiply(a.left, b.left), right_.multiply(a.right, b.right)};
  }
  Element invert(const Element& a) const { return {left_.invert(a.left), right_.invert(a.right)}; }
  bool equal(const Element& a, const Element& b) const {
    return left_.equal(a.left, b.left) && right_.equal(a.right, b.right);
  }
  std::string key(const Element& a) const { return "(" + left_.key(a.left) + "," + right_.key(a.right) + ")"; }
  std::string format(const Element& a) const {
    return "(" + left_.format(a.left) + "," + right_.format(a.right) + ")";
  }
  std::vector<Element> generators() const {
    std::vector<Element> out;
    for (auto& g : left_.generators()) out.push_back({g, right_.identity()});
    for (auto& g : right_.generators()) out.push_back({left_.identity(), g});
    return out;
  }

  Element embed_left(const ElementOf<Left>& a) const { return {a, right_.identity()}; }
  Element embed_right(const ElementOf<Right>& b) const { return {left_.identity(), b}; }

 private:
  Left left_;
  Right right_;
};

template <Group Factor>
struct SwapElement {
  ElementOf<Factor> first;
  ElementOf<Factor> second;
  bool swapped = false;
};

/// (G x G) ⋊ C2 where the C2 generator t swaps the two factors: t (a, b) t^-1 = (b, a).
/// An element (a, b, s) stands for (a, b) * t^s.  Used as a model of two commuting
/// "disjointly supported" copies of G exchanged by a single element.
template <Group Factor>
class SwapExtension {
 public:
  using Element = SwapElement<Factor>;

  explicit SwapExtension(Factor factor) : factor_(std::move(factor)) {}

  const Factor& factor() const { return factor_; }

  Element identity() const { return {factor_.identity(), factor_.identity(), false}; }
  Element multiply(const Element& a, const Element& b) const {
    const auto& bf = a.swapped ? b.second : b.first;
    const auto& bs = a.swapped ? b.first : b.second;
    return {factor_.multiply(a.first, bf), factor_.multiply(a.second, bs), a.swapped != b.swapped};
  }
  Element invert(const Element& a) const {
    auto f = factor_.invert(a.first);
    auto s = factor_.invert(a.second);
    if (a.swapped) std::swap(f, s);
    return {f, s, a.swapped};
  }
  bool equal(const Element& a, const Element& b) const {
    return a.swapped == b.swapped && factor_.equal(a.first, b.first) && factor_.equal(a.second, b.second);
  }
  std::string key(const Element& a) const {
    return "(" + factor_.key(a.first) + "," + factor_.key(a.second) + (a.swapped ? ",t)" : ")");
  }
  std::string format(const Element& a) const {
    return "(" + factor_.format(a.first) + "," + factor_.format(a.second) + (a.swapped ? ",t)" : ")");
  }
  std::vector<Element> generators() const {
    std::vector<Element> out;
    for (auto& g : factor_.generators()) out.push_back({g, factor_.identity(), false});
    out.push_back(swap());
    return out;
  }

  Element swap() const { return {factor_.identity(), factor_.identity(), true}; }
  Element in_first(const ElementOf<Factor>& a) const { return {a, factor_.identity(), false}; }
  Element in_second(const ElementOf<Factor>& a) const { return {factor_.identity(), a, false}; }

 private:
  Factor factor_;
};

}  // namespace qmlab
