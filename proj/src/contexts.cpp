#include "qmlab/contexts.hpp"

#include "qmlab/counting.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qmlab {

namespace {

int parse_small_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("bad number '" + std::string(text) + "' in group spec '" + std::string(whole) + "'");
  return value;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

/// Splits "(a, b, c)" at top-level commas.
std::vector<std::string> tuple_parts(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw InputError("expected a tuple '(..)', got '" + t + "'");
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    char c = t[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

void require_children(const QmSpec& spec, std::size_t n) {
  if (spec.children.size() != n)
    throw InputError("'" + spec.head + "' takes " + std::to_string(n) + " positional argument(s): " + spec.text());
}

template <class E>
Quasimorphism<E> homomorphism(std::string spec, std::function<Rational(const E&)> f, std::string invariance) {
  Quasimorphism<E> q;
  q.spec = std::move(spec);
  q.evaluate = std::move(f);
  q.defect_upper = DefectBound{0, "homomorphism"};
  q.homogeneous = true;
  q.invariance = std::move(invariance);
  return q;
}

}  // namespace

std::string GroupPair::ambient_text() const {
  switch (kind) {
    case AmbientKind::free_group: return "free:" + std::to_string(param);
    case AmbientKind::braid: return "braid:" + std::to_string(param);
    case AmbientKind::pure3: return "pure:3";
    case AmbientKind::free_times_z: return "product:free:" + std::to_string(param) + ",int";
    case AmbientKind::swap_free: return "swap:free:" + std::to_string(param);
  }
  return "?";
}

std::string GroupPair::text() const { return sub.empty() ? ambient_text() : ambient_text() + "/" + sub; }

GroupPair parse_group_pair(std::string_view text) {
  std::string whole = trim(text);
  std::string_view t = whole;
  GroupPair p;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    p.sub = std::string(t.substr(slash + 1));
    t = t.substr(0, slash);
  }
  auto after = [&t](std::string_view prefix) -> std::optional<std::string_view> {
    if (t.substr(0, prefix.size()) == prefix) return t.substr(prefix.size());
    return std::nullopt;
  };
  std::vector<std::string> subs;
  if (auto rest = after("free:")) {
    p.kind = AmbientKind::free_group;
    p.param = parse_small_int(*rest, whole);
    if (p.param < 1 || p.param > 26) throw InputError("free group rank must be in 1..26");
    subs = {"commutator"};
  } else if (auto rest = after("braid:")) {
    p.kind = AmbientKind::braid;
    p.param = parse_small_int(*rest, whole);
    if (p.param < 2 || p.param > 16) throw InputError("braid strand count must be in 2..16");
    subs = {"pure", "commutator"};
  } else if (auto rest = after("pure:")) {
    p.kind = AmbientKind::pure3;
    p.param = parse_small_int(*rest, whole);
    if (p.param != 3) throw InputError("only pure:3 is supported");
  } else if (auto rest = after("product:free:")) {
    auto comma = rest->find(',');
    if (comma == std::string_view::npos || rest->substr(comma + 1) != "int")
      throw InputError("product groups are written product:free:N,int");
    p.kind = AmbientKind::free_times_z;
    p.param = parse_small_int(rest->substr(0, comma), whole);
    if (p.param < 1 || p.param > 26) throw InputError("free group rank must be in 1..26");
    subs = {"left"};
  } else if (auto rest = after("swap:free:")) {
    p.kind = AmbientKind::swap_free;
    p.param = parse_small_int(*rest, whole);
    if (p.param < 1 || p.param > 26) throw InputError("free group rank must be in 1..26");
  } else {
    throw InputError("unknown group spec '" + whole + "'");
  }
  if (!p.sub.empty() && std::find(subs.begin(), subs.end(), p.sub) == subs.end())
    throw InputError("unknown subgroup '" + p.sub + "' for " + p.ambient_text());
  return p;
}

Quasimorphism<Word> build_free_qm(const QmSpec& spec, const FreeGroup& group) {
  if (spec.head == "zero") return zero_quasimorphism<Word>();
  if (spec.head == "brooks") {
    auto it = spec.args.find("w");
    if (it == spec.args.end() || spec.args.size() != 1 || !spec.children.empty())
      throw InputError("brooks takes exactly w=<word>: " + spec.text());
    return brooks(CountingWord(group.parse(it->second)), group);
  }
  if (spec.head == "homog") {
    require_children(spec, 1);
    const auto& inner = spec.children[0];
    if (inner.head == "brooks") {
      auto it = inner.args.find("w");
      if (it == inner.args.end()) throw InputError("brooks takes w=<word>");
      return homogenized_brooks(CountingWord(group.parse(it->second)), group);
    }
    auto phi = build_free_qm(inner, group);
    if (phi.homogeneous) return phi;
    throw RefusalError("exact homogenization is only available for Brooks functions: " + spec.text());
  }
  if (spec.head == "hom") {
    auto it = spec.args.find("expsum");
    if (it == spec.args.end() || it->second.size() != 1) throw InputError("hom on a free group takes expsum=<generator>");
    auto pos = group.alphabet().find(it->second[0]);
    if (pos == std::string::npos) throw InputError("unknown generator '" + it->second + "'");
    return exponent_sum_hom(static_cast<int>(pos) + 1, group);
  }
  throw InputError("unknown quasimorphism '" + spec.head + "' for a free group");
}

Quasimorphism<BraidWord> shift_average(const Quasimorphism<Word>& phi) {
  if (!phi.homogeneous) throw RefusalError("shiftavg needs a homogeneous quasimorphism, got " + phi.spec);
  if (!phi.defect_upper) throw RefusalError("shiftavg needs a certified defect for " + phi.spec);
  static const B3CommutatorBasis basis;
  Quasimorphism<BraidWord> q;
  q.spec = "shiftavg(" + phi.spec + ")";
  q.evaluate = [phi](const BraidWord& b) {
    Word w = basis.to_free(b);
    Rational sum = 0;
    for (int j = 0; j < 6; ++j) sum += phi(basis.shift(w, j));
    return Rational(sum / 6);
  };
  q.defect_upper = DefectBound{phi.defect_upper->value, "average of 6 automorphic images of [" + phi.defect_upper->provenance + "]"};
  q.homogeneous = true;
  q.invariance = "braid:3";
  return q;
}

Quasimorphism<BraidWord> build_braid_qm(const QmSpec& spec, int strands) {
  if (spec.head == "zero") return zero_quasimorphism<BraidWord>();
  if (spec.head == "hom") {
    require_children(spec, 1);
    if (spec.children[0].head != "indexsum") throw InputError("braid homomorphisms: hom(indexsum)");
    return homomorphism<BraidWord>(
        "hom(indexsum)", [](const BraidWord& b) { return Rational(index_sum(b)); }, "braid:" + std::to_string(strands));
  }
  if (strands == 3 && spec.head == "pullback") {
    require_children(spec, 2);
    if (spec.children[1].head != "pr1") throw InputError("braid pullbacks go through pr1: " + spec.text());
    auto phi = build_free_qm(spec.children[0], FreeGroup(2));
    auto q = pullback<BraidWord, Word>(phi, [](const BraidWord& b) { return pr1(b); }, "pr1");
    q.invariance = phi.homogeneous ? "pure:3" : "";
    return q;
  }
  if (strands == 3 && spec.head == "shiftavg") {
    require_children(spec, 1);
    return shift_average(build_free_qm(spec.children[0], FreeGroup(2, "uv")));
  }
  throw InputError("unknown quasimorphism '" + spec.text() + "' on B" + std::to_string(strands));
}

Quasimorphism<ProductElement<FreeGroup, Integers>> build_product_qm(const QmSpec& spec, const FreeTimesZ& group) {
  using E = ProductElement<FreeGroup, Integers>;
  if (spec.head == "zero") return zero_quasimorphism<E>();
  if (spec.head == "hom") {
    require_children(spec, 1);
    if (spec.children[0].head != "pr2") throw InputError("product homomorphisms: hom(pr2)");
    return homomorphism<E>("hom(pr2)", [](const E& e) { return Rational(e.right); }, "*");
  }
  if (spec.head == "pullback") {
    require_children(spec, 2);
    if (spec.children[1].head != "pr1") throw InputError("product pullbacks go through pr1: " + spec.text());
    auto phi = build_free_qm(spec.children[0], group.left());
    auto q = pullback<E, Word>(phi, [](const E& e) { return e.left; }, "pr1");
    // Z is central, so conjugation acts through the free factor.
    q.invariance = phi.homogeneous ? "product:free:" + std::to_string(group.left().rank()) + ",int" : "";
    return q;
  }
  throw InputError("unknown quasimorphism '" + spec.text() + "' on a product group");
}

Quasimorphism<SwapElement<FreeGroup>> build_swap_qm(const QmSpec& spec, const SwapFree&) {
  if (spec.head == "zero") return zero_quasimorphism<SwapElement<FreeGroup>>();
  throw InputError("the swap extension only offers the zero quasimorphism");
}

ProductElement<FreeGroup, Integers> parse_product_element(std::string_view text, const FreeTimesZ& group) {
  std::string t = trim(text);
  if (t.empty() || t.front() != '(') return {group.left().parse(t), 0};
  auto parts = tuple_parts(t);
  if (parts.size() != 2) throw InputError("product elements are written (word,k): '" + t + "'");
  long long k = 0;
  auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), k);
  if (ec != std::errc() || ptr != parts[1].data() + parts[1].size())
    throw InputError("bad integer '" + parts[1] + "' in '" + t + "'");
  return {group.left().parse(parts[0]), k};
}

SwapElement<FreeGroup> parse_swap_element(std::string_view text, const SwapFree& group) {
  auto parts = tuple_parts(text);
  if (parts.size() == 3 && parts[2] != "t") throw InputError("third entry of a swap element must be 't'");
  if (parts.size() != 2 && parts.size() != 3) throw InputError("swap elements are written (a,b) or (a,b,t)");
  return {group.factor().parse(parts[0]), group.factor().parse(parts[1]), parts.size() == 3};
}

Context<FreeGroup> free_context(const GroupPair& pair) {
  FreeGroup g(pair.param);
  Context<FreeGroup> c{g, pair, nullptr, nullptr, nullptr, {}, std::nullopt};
  c.parse = [g](std::string_view t) { return g.parse(t); };
  c.build_qm = [g](const QmSpec& s) { return build_free_qm(s, g); };
  if (pair.sub == "commutator") {
    const int rank = pair.param;
    c.in_sub = [rank](const Word& w) {
      for (int i = 1; i <= rank; ++i)
        if (exponent_sum(w, i) != 0) return false;
      return true;
    };
    for (int i = 1; i <= rank; ++i)
      for (int j = i + 1; j <= rank; ++j) c.sub_generators.push_back(commutator(g.generator(i), g.generator(j)));
  } else {
    c.in_sub = [](const Word&) { return true; };
    c.sub_generators = g.generators();
  }
  return c;
}

Context<BraidGroup> braid_context(const GroupPair& pair) {
  BraidGroup g(pair.param);
  const int n = pair.param;
  Context<BraidGroup> c{g, pair, nullptr, nullptr, nullptr, {}, std::nullopt};
  c.parse = [g](std::string_view t) { return g.parse(t); };
  c.build_qm = [n](const QmSpec& s) { return build_braid_qm(s, n); };
  if (pair.sub == "pure") {
    c.in_sub = [](const BraidWord& b) { return is_pure(b); };
    if (n == 3) {
      c.sub_generators = PureBraidGroup3().generators();
    } else {
      for (int i = 1; i < n; ++i) c.sub_generators.push_back(make_braid(n, {i, i}));
      for (int i = 1; i + 1 < n; ++i) c.sub_generators.push_back(make_braid(n, {i, i + 1, i + 1, -i}));
    }
  } else if (pair.sub == "commutator") {
    c.in_sub = [](const BraidWord& b) { return index_sum(b) == 0; };
    for (int i = 2; i < n; ++i) {
      c.sub_generators.push_back(make_braid(n, {i, -1}));
      c.sub_generators.push_back(make_braid(n, {1, i, -1, -1}));
    }
    c.section = SectionData<BraidWord>{"section(quotient=Z, map=s1^k)",
                                       [n](long long k) { return index_section(k, n); },
                                       [](const BraidWord& b) { return index_sum(b); }};
  } else {
    c.in_sub = [](const BraidWord&) { return true; };
    c.sub_generators = g.generators();
  }
  return c;
}

Context<PureBraidGroup3> pure3_context(const GroupPair& pair) {
  PureBraidGroup3 g;
  Context<PureBraidGroup3> c{g, pair, nullptr, nullptr, nullptr, {}, std::nullopt};
  c.parse = [g](std::string_view t) {
    auto b = parse_braid(t, 3);
    if (!g.contains(b)) throw DomainError("braid " + format_braid(b) + " is not pure");
    return b;
  };
  c.build_qm = [](const QmSpec& s) { return build_braid_qm(s, 3); };
  c.in_sub = [](const BraidWord&) { return true; };
  c.sub_generators = g.generators();
  return c;
}

Context<FreeTimesZ> product_context(const GroupPair& pair) {
  FreeTimesZ g(FreeGroup(pair.param), Integers{});
  Context<FreeTimesZ> c{g, pair, nullptr, nullptr, nullptr, {}, std::nullopt};
  c.parse = [g](std::string_view t) { return parse_product_element(t, g); };
  c.build_qm = [g](const QmSpec& s) { return build_product_qm(s, g); };
  if (pair.sub == "left") {
    c.in_sub = [](const ProductElement<FreeGroup, Integers>& e) { return e.right == 0; };
    for (const auto& w : g.left().generators()) c.sub_generators.push_back(g.embed_left(w));
    c.section = SectionData<ProductElement<FreeGroup, Integers>>{
        "section(quotient=Z, map=(1,k))", [g](long long k) { return g.embed_right(k); },
        [](const ProductElement<FreeGroup, Integers>& e) { return e.right; }};
  } else {
    c.in_sub = [](const ProductElement<FreeGroup, Integers>&) { return true; };
    c.sub_generators = g.generators();
  }
  return c;
}

Context<SwapFree> swap_context(const GroupPair& pair) {
  SwapFree g{FreeGroup(pair.param)};
  Context<SwapFree> c{g, pair, nullptr, nullptr, nullptr, {}, std::nullopt};
  c.parse = [g](std::string_view t) { return parse_swap_element(t, g); };
  c.build_qm = [g](const QmSpec& s) { return build_swap_qm(s, g); };
  c.in_sub = [](const SwapElement<FreeGroup>&) { return true; };
  c.sub_generators = g.generators();
  return c;
}

}  // namespace qmlab
