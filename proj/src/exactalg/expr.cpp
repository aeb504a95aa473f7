#include "msk/expr.hpp"

#include <cctype>

namespace msk {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarTable::Ptr table) : text_(text), table_(std::move(table)) {}

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  RatFun constant(const Scalar& s) const { return RatFun(Poly::constant(table_, s)); }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFun d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected non-negative integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) throw ParseError("exponent too large", start);
    const unsigned k = static_cast<unsigned>(std::stoul(digits));
    RatFun out = constant(1);
    for (unsigned i = 0; i < k; ++i) out *= base;
    return out;
  }

  RatFun primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Scalar(mpq_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return constant(Scalar::imaginary_unit());
      if (name == "conj") {
        expect('(');
        RatFun r = expr();
        expect(')');
        return r.conj();
      }
      return RatFun(Poly::variable(table_, resolve(name, start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::size_t resolve(const std::string& name, std::size_t at) const {
    if (auto idx = table_->find(name)) return *idx;
    // "w2" and "u2" abbreviate the first coordinate of a weight block.
    if ((name[0] == 'w' || name[0] == 'u') && name.find('_') == std::string::npos)
      if (auto idx = table_->find(name + "_1")) return *idx;
    throw ParseError("unknown variable '" + name + "'", at);
  }

  std::string_view text_;
  VarTable::Ptr table_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text, const VarTable::Ptr& table) {
  return Parser(text, table).parse();
}

Poly parse_poly(std::string_view text, const VarTable::Ptr& table) {
  RatFun r = parse_ratfun(text, table);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial, found a rational function", 0);
  return r.num().table() ? r.num() : Poly(table);
}

}  // namespace msk
