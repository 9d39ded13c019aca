#pragma once

#include "charcond/cyclotomic.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charcond::expr {

/// Syntax error carrying the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t offset);

    size_t offset;
};

/**
 * Expression: abstract syntax for the root-of-unity calculator.  Leaves are
 * integer literals and root terms z(n,k) denoting zeta_n^k; interior nodes
 * are unary minus, the binary operators + - *, and exponentiation by a
 * non-negative integer.
 */
struct Expression {
    enum class Kind { Integer, Root, Negate, Add, Subtract, Multiply, Power };

    Kind kind = Kind::Integer;
    cyclo::BigInt literal = 0;             // Integer
    long long order = 1;                   // Root: n >= 1
    long long root_exponent = 0;           // Root: k
    unsigned long long power_exponent = 0; // Power
    std::unique_ptr<Expression> lhs, rhs;  // operand(s); rhs for binary nodes
};

/**
 * Recursive-descent parser for
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' uint)?
 *   atom   := int | 'z(' uint ',' int ')' | '(' expr ')' | '-' atom
 *
 * Whitespace between tokens is ignored.  Throws ParseError with the byte
 * offset of the failure; z(0,k) is rejected here, with the offset of the
 * whole root term, rather than at evaluation.
 */
Expression parse_expr(std::string_view text);

cyclo::CyclotomicInteger evaluate(const Expression& e);

/// The value rendered back in the parser's grammar, e.g. "1-2*z(8,3)";
/// re-parsing and evaluating yields the same value in any ambient modulus.
std::string to_expression(const cyclo::CyclotomicInteger& v);

}  // namespace charcond::expr
