#include "braidcoh/expression.hpp"

#include <cctype>
#include <string>

#include "braidcoh/errors.hpp"

namespace braidcoh {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Algebra& a) : text_(text), a_(a) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  AlgebraElement expr() {
    AlgebraElement acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  AlgebraElement term() {
    bool negate = false;
    while (true) {
      if (eat('-')) {
        negate = !negate;
      } else if (!eat('+')) {
        break;
      }
    }
    AlgebraElement acc = power();
    while (eat('*')) acc = a_.multiply(acc, power());
    return negate ? -acc : acc;
  }

  AlgebraElement power() {
    AlgebraElement base = primary();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative exponent");
    int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    AlgebraElement out = a_.unit();
    for (int i = 0; i < n; ++i) out = a_.multiply(out, base);
    return out;
  }

  AlgebraElement primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t save = pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip();
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        std::string num(text_.substr(start, save - start));
        std::string den(text_.substr(dstart, pos_ - dstart));
        return parse_scalar(num + "/" + den) * a_.unit();
      }
      pos_ = save;
      return parse_scalar(text_.substr(start, save - start)) * a_.unit();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      Word w = a_.presentation().parse_word(text_.substr(start, pos_ - start));
      return a_.normal_form(w);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Algebra& a_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expression(std::string_view text, const Algebra& algebra) {
  return Parser(text, algebra).parse();
}

}  // namespace braidcoh
