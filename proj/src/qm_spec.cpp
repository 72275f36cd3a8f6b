#include "qmlab/qm_spec.hpp"

#include "qmlab/errors.hpp"

#include <cctype>

namespace qmlab {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  QmSpec parse() {
    QmSpec s = node();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("spec parse error at position " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string value() {
    skip();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if ((c == ',' || c == ')') && depth == 0) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      ++pos_;
    }
    auto v = std::string(text_.substr(start, pos_ - start));
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
    return v;
  }
  QmSpec node() {
    QmSpec s;
    s.head = identifier();
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '(') return s;
    ++pos_;
    skip();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return s;
    }
    for (;;) {
      skip();
      std::size_t save = pos_;
      std::string name = identifier();
      skip();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        ++pos_;
        if (s.args.count(name)) fail("duplicate argument '" + name + "'");
        s.args[name] = value();
      } else {
        pos_ = save;
        s.children.push_back(node());
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return s;
      }
      fail("expected ',' or ')'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QmSpec parse_qm_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string QmSpec::text() const {
  if (args.empty() && children.empty()) return head;
  std::string out = head + "(";
  bool first = true;
  for (const auto& c : children) {
    if (!first) out += ", ";
    out += c.text();
    first = false;
  }
  for (const auto& [k, v] : args) {
    if (!first) out += ", ";
    out += k + "=" + v;
    first = false;
  }
  return out + ")";
}

}  // namespace qmlab
