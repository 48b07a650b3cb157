#include "lienorm/parser.hpp"

#include "lienorm/error.hpp"

#include <cctype>

namespace lienorm {

int resolve_variable(std::string_view ident, std::span<const std::string> variables) {
  const int n = static_cast<int>(variables.size());
  for (int i = 0; i < n; ++i)
    if (variables[i] == ident) return i;
  if (ident.size() >= 2 && ident[0] == 'x' && ident[1] != '0') {
    int k = 0;
    bool digits = true;
    for (std::size_t i = 1; i < ident.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(ident[i])) || k > 1000) {
        digits = false;
        break;
      }
      k = 10 * k + (ident[i] - '0');
    }
    if (digits && k >= 1 && k <= n) return k - 1;
  }
  if (n <= 3 && ident.size() == 1) {
    int k = ident[0] == 'x' ? 0 : ident[0] == 'y' ? 1 : ident[0] == 'z' ? 2 : -1;
    if (k >= 0 && k < n) return k;
  }
  return -1;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  RationalFunction parse() {
    skip();
    if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_);
    RationalFunction r = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

private:
  std::size_t nv() const { return vars_.size(); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else {
        skip();
        std::size_t at = pos_;
        if (!accept('/')) return acc;
        RationalFunction d = unary();
        if (d.is_zero()) throw InputError("division by the zero polynomial at position " + std::to_string(at));
        acc = acc / d;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError("exponent must be a nonnegative integer literal", pos_);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) throw SyntaxError("exponent too large", start);
      unsigned e = static_cast<unsigned>(std::stoul(digits));
      if (e == 0) return RationalFunction(nv(), Rational(1));
      return base.pow(e);
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer z(std::string(text_.substr(start, pos_ - start)), 10);
      return RationalFunction(nv(), Rational(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      int idx = resolve_variable(ident, vars_);
      if (idx < 0) throw InputError("unknown identifier '" + std::string(ident) + "' at position " + std::to_string(start));
      return RationalFunction::variable(nv(), static_cast<std::size_t>(idx));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse();
}

}  // namespace lienorm
