#pragma once

#include <memory>
#include <string>

#include "painleq/rational_function.hpp"

namespace painleq {

// Expression tree produced by the parser: constants, variables and the
// arithmetic operators of the input grammar. Powers carry integer exponents
// only.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    Rational value;       // Constant
    std::size_t var = 0;  // Variable index into the VarSet
    ExprPtr lhs, rhs;     // binary ops; Neg/Pow use lhs
    long exponent = 0;    // Pow

    static ExprPtr constant(Rational v);
    static ExprPtr variable(std::size_t index);
    static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr pow(ExprPtr a, long e);
};

// Parse `text` against the declared variables. Throws ParseError with a
// position on syntax errors and on undeclared identifiers.
ExprPtr parse(const std::string& text, const VarSetPtr& vars);

// Fold an expression tree into a canonical rational function.
// Throws DivisionByZero if a division by the zero polynomial occurs.
RationalFunction to_rational(const ExprPtr& ast, const VarSetPtr& vars);

// Convenience: parse + fold.
RationalFunction parse_rational(const std::string& text, const VarSetPtr& vars);

std::string ast_str(const ExprPtr& ast, const VarSetPtr& vars);

}  // namespace painleq
