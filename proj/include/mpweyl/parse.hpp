#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mpweyl/algebra.hpp"
#include "mpweyl/scalars.hpp"

// Expression language shared by the command line tool and the text output:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' int]
//   atom   := int | param | gen | '(' expr ')' | '-' atom
// No implicit multiplication. Division and '^' on scalars only, except that
// torus generators may carry any integer exponent while x/y powers must stay
// nonnegative. Symbols: r1..rn, s1..sn (parameters), rho_i, sigma_i, x_i, y_i
// (algebra generators), e_i, f_i, w_i, wp_i (quantum group generators,
// indices 1..n-1).

namespace mpweyl {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class ExprKind {
  Integer,
  Parameter,
  Generator,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Neg,
};

enum class SymbolKind { ParamR, ParamS, Rho, Sigma, X, Y, E, F, W, Wp };

struct Expression {
  ExprKind kind = ExprKind::Integer;
  SourcePos pos;
  mpz_class value;               // Integer
  SymbolKind symbol{};           // Parameter / Generator
  int index = 0;                 // Parameter / Generator
  long exponent = 0;             // Pow
  std::vector<Expression> children;

  // Structural equality; source positions are ignored.
  bool operator==(const Expression& o) const;
  bool operator!=(const Expression& o) const { return !(*this == o); }
};

// The symbol text as written ("r1", "rho2", "wp1", ...).
std::string symbol_name(SymbolKind kind, int index);

// Throws SyntaxError (with line/column) on malformed input and UnknownSymbol
// when an identifier does not exist at rank n.
Expression parse_expression(const std::string& text, int n);

// Canonical rendering; format_expression(parse_expression(t, n)) reparses to
// an equal tree.
std::string format_expression(const Expression& e);

// True when the subtree mentions no generator symbol.
bool is_scalar_expression(const Expression& e);

// Evaluate a scalar subtree. Throws ExpressionError if a generator occurs.
Scalar scalar_value(const Expression& e, int n);

// Evaluate to a normalized algebra element; quantum group symbols go through
// their images. Throws ExpressionError for powers that would need the inverse
// of a non-invertible element.
AlgebraElement element_value(const Expression& e, int n);

}  // namespace mpweyl
