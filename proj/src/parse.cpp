#include "nctorus/parse.hpp"

#include <cctype>
#include <vector>

namespace nct {

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  NcElement parse_all() {
    NcElement x = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' || c == 't' || c == 'U' || c == 'V';
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t signed_integer() {
    skip_space();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 15) {
      pos_ = start;
      fail("exponent out of range");
    }
    const std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

  std::int64_t optional_exponent() { return accept('^') ? signed_integer() : 1; }

  NcElement expression() {
    NcElement acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  NcElement term() {
    // a sign may follow a binary operator, as in "U + -1i V"
    if (accept('-')) return -term();
    accept('+');
    NcElement acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  NcElement factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek('/')) {
        ++pos_;
        const std::size_t den_pos = pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        num += "/" + den;
      }
      return NcElement(PhaseScalar(GaussianRational(parse_rational(num))));
    }
    if (c == '(') {
      ++pos_;
      NcElement inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    ++pos_;
    switch (c) {
      case 'i': return NcElement(PhaseScalar(GaussianRational::imaginary_unit()));
      case 't': return NcElement(PhaseScalar::t_power(optional_exponent()));
      case 'U': return NcElement::U(optional_exponent());
      case 'V': return NcElement::V(optional_exponent());
      default: --pos_; fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

constexpr std::string_view kCompose = "\xE2\x88\x98";  // U+2218 RING OPERATOR

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  AutomorphismSpec parse_all() {
    std::vector<AutomorphismSpec> parts;
    parts.push_back(atom());
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == '.') {
        ++pos_;
      } else if (text_.substr(pos_, kCompose.size()) == kCompose) {
        pos_ += kCompose.size();
      } else {
        fail("expected '.' or '∘' between maps");
      }
      parts.push_back(atom());
    }
    return AutomorphismSpec::composite(std::move(parts));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an automorphism name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits_start == pos_ || pos_ - digits_start > 15) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // Text up to the delimiter at parenthesis depth zero.
  std::size_t scan_to(char delim) {
    int depth = 0;
    for (std::size_t i = pos_; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) {
          if (delim == ')') return i;
          fail("unbalanced ')' in custom image");
        }
        --depth;
      }
      if (c == delim && depth == 0) return i;
    }
    fail(std::string("missing '") + delim + "'");
  }

  AutomorphismSpec atom() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "mod") {
      expect('(');
      const auto a = integer();
      expect(',');
      const auto b = integer();
      expect(',');
      const auto c = integer();
      expect(',');
      const auto d = integer();
      expect(')');
      return AutomorphismSpec::modular(a, b, c, d);
    }
    if (name == "custom") {
      expect('(');
      const std::size_t semi = scan_to(';');
      NcElement u = ElementParser(text_.substr(pos_, semi - pos_), pos_).parse_all();
      pos_ = semi + 1;
      const std::size_t close = scan_to(')');
      NcElement v = ElementParser(text_.substr(pos_, close - pos_), pos_).parse_all();
      pos_ = close + 1;
      return AutomorphismSpec::custom(std::move(u), std::move(v));
    }
    static const std::pair<const char*, NamedMap> kNames[] = {
        {"id", NamedMap::Identity},     {"sigma", NamedMap::Sigma},   {"kappa", NamedMap::Kappa},
        {"flip", NamedMap::Flip},       {"gamma1", NamedMap::Gamma1}, {"gamma2", NamedMap::Gamma2},
        {"gamma3", NamedMap::Gamma3},
    };
    for (const auto& [label, map] : kNames) {
      if (name == label) return AutomorphismSpec::named(map);
    }
    pos_ = start;
    skip_space();
    fail("unknown automorphism '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NcElement parse_element(std::string_view text) { return ElementParser(text, 0).parse_all(); }

AutomorphismSpec parse_spec(std::string_view text) { return SpecParser(text).parse_all(); }

}  // namespace nct
