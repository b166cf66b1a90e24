#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sos/error.hpp"
#include "sos/integer.hpp"

namespace sumsq {

/// Syntax tree of an arithmetic expression over integer literals and symbols.
/// Grammar: sum := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
/// unary := '-' unary | power; power := atom ('^' exponent)?; atom := integer |
/// symbol | '(' sum ')'. Whitespace is insignificant; `p/q` is ordinary division.
struct Expr {
  enum class Kind { Num, Sym, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Num;
  sos::Integer num;
  std::string sym;
  long exponent = 0;
  std::vector<Expr> kids;
};

/// Throws sos::ParseError naming the offending position.
Expr parse_expression(std::string_view text, const std::set<std::string>& symbols);

/// Folds the tree with `leaf` for numbers and symbols; V needs + - * / and unary -.
template <class V, class Leaf, class Pow>
V evaluate(const Expr& e, const Leaf& leaf, const Pow& pow) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Num:
    case K::Sym: return leaf(e);
    case K::Neg: return -evaluate<V>(e.kids[0], leaf, pow);
    case K::Pow: return pow(evaluate<V>(e.kids[0], leaf, pow), e.exponent);
    default: break;
  }
  V a = evaluate<V>(e.kids[0], leaf, pow);
  V b = evaluate<V>(e.kids[1], leaf, pow);
  switch (e.kind) {
    case K::Add: return a + b;
    case K::Sub: return a - b;
    case K::Mul: return a * b;
    default: return a / b;
  }
}

}  // namespace sumsq
