#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ttw/weyl.hpp"

namespace ttw {

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Abstract syntax for the operator expression language. `Mul` is operator
// composition, noncommutative where Dt/Du meet t/u.
struct OperatorExpr {
    enum class Kind { Rational, Symbol, Add, Sub, Neg, Mul, Pow };
    Kind kind;
    Rat value;                 // Rational
    std::string symbol;        // Symbol: t u a b w Dt Du
    unsigned exponent = 0;     // Pow
    std::vector<std::unique_ptr<OperatorExpr>> children;
};

// Parses source text and evaluates the AST in the Weyl algebra, so e.g.
// "Dt*t" normalizes to t*Dt + 1. Throws SyntaxError with line/column.
DiffOp parse_operator(const std::string& src);

// Same grammar restricted to the commutative subring: Dt/Du are rejected.
ParamPoly parse_poly(const std::string& src);

std::unique_ptr<OperatorExpr> parse_expression(const std::string& src);
DiffOp eval_expression(const OperatorExpr& e);

// Canonical rendering: terms in (dt,du)-ascending order, coefficients in
// canonical polyring order. parse_operator(print_operator(A)) == A.
std::string print_operator(const DiffOp& op);

}  // namespace ttw
