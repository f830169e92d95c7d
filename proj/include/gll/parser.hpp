#pragma once

// Polynomial expressions over a finite field.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'x' | 'y' | 't' | NAME | '(' expr ')'
//            | ('prod' | 'sum') '(' NAME 'in' 'k' ',' expr ')'
//
// Integer literals are read in the prime field; `t` is the class of X in
// GF(p)[X]/(modulus) and only exists for extension fields; NAME refers to a
// variable bound by an enclosing prod/sum, which ranges over every element
// of k in code order.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gll/gf.hpp"
#include "gll/poly.hpp"

namespace gll::cli {

struct ExprNode {
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Pow, Prod, Sum };

  Kind kind;
  std::size_t position = 0;       // offset in the source text
  std::uint64_t value = 0;        // Number literal, Pow exponent
  std::string name;               // Variable name, bound variable of Prod/Sum
  std::vector<std::unique_ptr<ExprNode>> children;
};

class PolyExpr {
 public:
  /// Throws SyntaxError (with position) on malformed input.
  static PolyExpr parse(std::string_view text);

  const std::string& source() const noexcept { return source_; }
  const ExprNode& root() const noexcept { return *root_; }

  /// Exact evaluation over the field. Throws UnknownVariable.
  poly::BiPoly evaluate(const gf::Field& field) const;
  /// Fully parenthesised rendering of the syntax tree.
  std::string print() const;

 private:
  std::string source_;
  std::shared_ptr<const ExprNode> root_;
};

poly::BiPoly parse_poly(std::string_view text, const gf::Field& field);

/// "p", "p^e" or the order "q" of a prime-power field.
gf::Field parse_field(std::string_view text);

}  // namespace gll::cli
