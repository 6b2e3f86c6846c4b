#include "stabenv/parse.hpp"

#include <cctype>
#include <string>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSetPtr& vars) : text_(text), vars_(vars) {}

  FactoredFraction parse() {
    FactoredFraction f = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  FactoredFraction expr() {
    FactoredFraction acc = signed_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  FactoredFraction signed_term() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -term();
    }
    if (c == '+') {
      ++pos_;
    }
    return term();
  }

  FactoredFraction term() {
    FactoredFraction acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        FactoredFraction d = power();
        if (d.is_zero()) {
          fail("division by zero");
        }
        FactoredFraction inv(MultiPoly::constant(vars_, Rational(1)));
        for (const auto& f : d.factors()) {
          inv *= f.poly.pow(f.mult);
        }
        inv.divide_by(d.num());
        acc *= inv;
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  FactoredFraction power() {
    FactoredFraction base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) {
        fail("expected an exponent");
      }
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      FactoredFraction out(MultiPoly::constant(vars_, Rational(1)));
      for (unsigned long i = 0; i < e; ++i) {
        out *= base;
      }
      return out;
    }
    return base;
  }

  FactoredFraction primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FactoredFraction inner = expr();
      if (peek() != ')') {
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return FactoredFraction(MultiPoly::constant(vars_, Rational(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto index = vars_->index_of(name);
      if (!index) {
        fail("unknown variable '" + name + "'");
      }
      return FactoredFraction(MultiPoly::variable(vars_, *index));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const VarSetPtr& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

FactoredFraction parse_fraction(std::string_view text, const VarSetPtr& vars) {
  return Parser(text, vars).parse();
}

RationalFunction parse_rational_function(std::string_view text, const VarSetPtr& vars) {
  return parse_fraction(text, vars).to_rational_function();
}

MultiPoly parse_poly(std::string_view text, const VarSetPtr& vars) {
  FactoredFraction f = parse_fraction(text, vars);
  if (!f.factors().empty()) {
    throw ParseError("expression is not a polynomial: '" + std::string(text) + "'");
  }
  return f.num();
}

}  // namespace stabenv
