#include "weingarten/expr_parse.hpp"

#include <cctype>

namespace weingarten::cas {

namespace {

class Parser {
 public:
  Parser(const AlphabetPtr& alphabet, const std::string& text)
      : alpha_(alphabet), text_(text) {}

  RationalExpr parse() {
    RationalExpr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing input at offset " + std::to_string(pos_) +
                       " in '" + text_ + "'");
    return e;
  }

 private:
  const AlphabetPtr& alpha_;
  const std::string& text_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalExpr expr() {
    RationalExpr acc = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalExpr term() {
    RationalExpr acc = factor();
    for (;;) {
      if (eat('*'))
        acc = acc * factor();
      else if (eat('/'))
        acc = acc / factor();
      else
        return acc;
    }
  }

  RationalExpr factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    RationalExpr base = primary();
    if (eat('^')) {
      const unsigned e = integer_literal();
      return base.pow(e);
    }
    return base;
  }

  unsigned integer_literal() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent in '" + text_ + "'");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  RationalExpr primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of '" + text_ + "'");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalExpr e = expr();
      if (!eat(')')) throw ParseError("missing ')' in '" + text_ + "'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return RationalExpr(Polynomial::constant(
          alpha_, Rational(Integer(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      return RationalExpr(Polynomial::symbol(alpha_, name));
    }
    throw ParseError(std::string("unexpected character '") + c + "' in '" + text_ + "'");
  }
};

}  // namespace

RationalExpr parse_expression(const AlphabetPtr& alphabet, const std::string& text) {
  return Parser(alphabet, text).parse();
}

Polynomial parse_polynomial(const AlphabetPtr& alphabet, const std::string& text) {
  return parse_expression(alphabet, text).as_polynomial();
}

}  // namespace weingarten::cas
