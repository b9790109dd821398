#include <cctype>
#include <string>

#include "flexalg/error.hpp"
#include "flexalg/poly/polynomial.hpp"

namespace flexalg {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*    division only by rational constants
// factor := primary ['^' integer]
// primary:= number | identifier | '(' expr ')'
class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse polynomial '" + std::string(text_) + "' at offset " +
                    std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return Polynomial::constant(ring_, Rational(n, mpz_class(1)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = ring_.find(name);
      if (!idx)
        throw Error(ErrorCode::UnknownVariable,
                    "unknown variable '" + std::string(name) + "' in '" + std::string(text_) + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return Parser(ring, text).run();
}

}  // namespace flexalg
