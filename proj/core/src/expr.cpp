#include "lgorb/expr.hpp"

#include <cctype>
#include <sstream>

#include "lgorb/error.hpp"

namespace lgorb {

namespace {

class Parser {
public:
  Parser(const std::string& text, const PolyRingPtr& ring)
      : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  const std::string& text_;
  const PolyRingPtr& ring_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(static_cast<int>(pos_), what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial parse_sum() {
    Polynomial p = parse_product();
    for (;;) {
      if (consume('+'))
        p += parse_product();
      else if (consume('-'))
        p -= parse_product();
      else
        return p;
    }
  }

  Polynomial parse_product() {
    Polynomial p = parse_unary();
    for (;;) {
      if (consume('*')) {
        p *= parse_unary();
      } else if (consume('/')) {
        size_t at = pos_;
        Polynomial d = parse_unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division is only allowed by variable-free expressions");
        }
        FieldScalar c = d.constant_term();
        if (c.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        p = p * c.inverse();
      } else {
        return p;
      }
    }
  }

  Polynomial parse_unary() {
    if (consume('-')) return -parse_unary();
    return parse_power();
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (!consume('^')) return base;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a non-negative integer literal");
    return base.pow(parse_integer());
  }

  int parse_integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_sum();
      if (!consume(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(ring_, Cyclo(Rational(parse_integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_symbol();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_symbol() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (name == "w") return Polynomial::constant(ring_, Cyclo::zeta(1));
    int slot = ring_->slot_of(name);
    if (slot >= 0) return Polynomial::var(ring_, slot);
    int param = ring_->params()->index_of(name);
    if (param >= 0)
      return Polynomial::constant(ring_,
                                  FieldScalar::param(ring_->params(), param));
    pos_ = start;
    std::ostringstream known;
    known << "w";
    for (const auto& v : ring_->names()) known << ", " << v << ", " << v << "'";
    for (const auto& p : ring_->params()->names()) known << ", " << p;
    fail("unknown symbol '" + name + "' (known: " + known.str() + ")");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace lgorb
