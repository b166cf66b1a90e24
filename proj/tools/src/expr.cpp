#include "sumsq/expr.hpp"

#include <cctype>
#include <limits>

namespace sumsq {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::set<std::string>& symbols) : s_(s), symbols_(symbols) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  const std::set<std::string>& symbols_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw sos::ParseError("cannot parse \"" + std::string(s_) + "\" at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static Expr node(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.kids = {std::move(a), std::move(b)};
    return e;
  }

  Expr sum() {
    Expr e = term();
    while (true) {
      if (accept('+')) e = node(Expr::Kind::Add, std::move(e), term());
      else if (accept('-')) e = node(Expr::Kind::Sub, std::move(e), term());
      else return e;
    }
  }
  Expr term() {
    Expr e = unary();
    while (true) {
      if (accept('*')) e = node(Expr::Kind::Mul, std::move(e), unary());
      else if (accept('/')) e = node(Expr::Kind::Div, std::move(e), unary());
      else return e;
    }
  }
  Expr unary() {
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.kids = {unary()};
      return e;
    }
    if (accept('+')) return unary();
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.exponent = exponent();
    e.kids = {std::move(base)};
    return e;
  }
  long exponent() {
    if (accept('(')) {
      long v = exponent();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    bool neg = accept('-');
    skip();
    sos::Integer n = digits();
    if (!n.fits_slong_p() || n > 1000000) fail("exponent too large");
    return neg ? -n.get_si() : n.get_si();
  }
  sos::Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return sos::Integer(std::string(s_.substr(start, pos_ - start)));
  }
  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Expr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    char c = s_[pos_];
    Expr e;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expr::Kind::Num;
      e.num = digits();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      e.kind = Expr::Kind::Sym;
      e.sym = std::string(s_.substr(start, pos_ - start));
      if (!symbols_.count(e.sym)) {
        pos_ = start;
        fail("unknown symbol '" + e.sym + "'");
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expr parse_expression(std::string_view text, const std::set<std::string>& symbols) {
  return Parser(text, symbols).parse();
}

}  // namespace sumsq
