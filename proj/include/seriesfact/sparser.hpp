#pragma once

#include <memory>
#include <string>

#include "seriesfact/rings.hpp"
#include "seriesfact/series.hpp"

namespace seriesfact {

class ExprAst;
using ExprPtr = std::shared_ptr<const ExprAst>;

/**
 * Abstract syntax tree of a series expression. Nodes are immutable and
 * shared. Every node knows its coefficient ring; mixed-ring trees cannot be
 * constructed. Unary minus is represented as difference(0, x).
 */
class ExprAst {
public:
    enum class Kind {
        constant,   // value()
        variable,   // z
        sum,        // lhs + rhs
        difference, // lhs - rhs
        product,    // lhs * rhs
        power,      // lhs ^ exponent
        inverse     // inv(lhs)
    };

    static ExprPtr make_constant(RingElem v);
    static ExprPtr make_variable(RingTag ring);
    static ExprPtr make_sum(ExprPtr a, ExprPtr b);
    static ExprPtr make_difference(ExprPtr a, ExprPtr b);
    static ExprPtr make_product(ExprPtr a, ExprPtr b);
    static ExprPtr make_power(ExprPtr base, unsigned long exponent);
    static ExprPtr make_inverse(ExprPtr a);

    Kind kind() const { return kind_; }
    RingTag ring() const { return ring_; }
    const RingElem& value() const;       // pre: constant
    const ExprPtr& lhs() const;          // pre: any non-leaf
    const ExprPtr& rhs() const;          // pre: sum/difference/product
    unsigned long exponent() const;      // pre: power

    // Round-trippable rendering with minimal parentheses.
    std::string str() const;

    // Builds the lazy series the expression denotes. inv() of a series whose
    // constant term is not a unit surfaces as NotInvertibleError.
    Series eval() const;

private:
    ExprAst(Kind kind, RingTag ring) : kind_(kind), ring_(ring) {}

    Kind kind_;
    RingTag ring_;
    std::optional<RingElem> value_;
    ExprPtr lhs_, rhs_;
    unsigned long exponent_ = 0;
};

/**
 * Parses a series expression over the given ring.
 *
 * Grammar (whitespace insignificant):
 *   expr   := term (('+' | '-') term)*
 *   term   := unary ('*' unary)*
 *   unary  := '-' unary | factor
 *   factor := atom ('^' NAT)?
 *   atom   := '(' expr ')' | 'inv' '(' expr ')' | CONST | 'z'
 *
 * CONST is ring-dependent: a decimal integer in every ring; over the
 * Gaussian integers additionally the maximally munched forms INT, INT '+'
 * INT? 'i', INT '-' INT? 'i', INT 'i', 'i' as one token (so '^' binds to the
 * whole literal); over Q[y] additionally a bracketed polynomial such as
 * [1+y], [1/2-3y^2], [y], [0].
 *
 * Throws ParseError (with byte position) on malformed input.
 */
ExprPtr parse_expression(const std::string& text, RingTag ring);

} // namespace seriesfact
