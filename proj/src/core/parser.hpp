#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "core/scalar.hpp"
#include "core/tensor_square.hpp"
#include "core/weyl.hpp"

namespace wcert::expr {

/// Syntax error with the 0-based offset of the offending character.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p)
      : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax: integer literals, sqrt(d), generators x_i / y_i, the
/// arithmetic operators, and explicit scalar inversion.  Precedence from
/// tight to loose: ^  *  unary-  binary +/-.
struct Expr {
  enum class Kind { Int, Sqrt, Gen, Neg, Add, Sub, Mul, Pow, Inv };
  Kind kind;
  long value = 0;        // Int: the literal; Sqrt: d; Pow: the exponent
  char gen_family = 0;   // Gen: 'x' or 'y'
  unsigned gen_index = 0;  // Gen: 1-based index
  ExprPtr a, b;

  bool operator==(const Expr& o) const;
};

/// Parses the expression language; throws ParseError with a position on any
/// lexical or syntax error.
ExprPtr parse(const std::string& text);

/// Canonical printing with minimal parentheses; parse(print(e)) == e.
std::string print(const ExprPtr& e);

/// Lowers an expression into a Weyl-algebra element.  Generators x1..x2n are
/// in scope; y-generators and sqrt are rejected.
weyl::WeylElement eval_weyl(const ExprPtr& e, const weyl::WeylContextPtr& ctx);

/// Lowers an expression into the tensor-square carrier: x_i and y_i are the
/// generators of the two factors.
weyl::WeylElement eval_tensor(const ExprPtr& e, const weyl::TensorSquareContext& ctx);

/// Evaluates a generator-free expression to an exact scalar of the given
/// field; sqrt(d) requires the matching quadratic field.
ring::Scalar eval_scalar(const ExprPtr& e, const ring::FieldDesc& field);

}  // namespace wcert::expr
