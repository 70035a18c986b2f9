#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "regulous/certify.hpp"
#include "regulous/ratfunc.hpp"

namespace regulous {

/// Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' unary)?
///   atom  := number | 'x' | 'y' | '(' expr ')'
/// Numbers are integers or decimals; exponents must evaluate to non-negative integers.
/// Throws ParseError (with position) and ZeroDenominator.
RatFunc parse_expression(std::string_view text);

/// Throws ParseError when the expression is not a polynomial.
Poly2 parse_polynomial(std::string_view text);

/// Parses "X(t), Y(t)" into two univariate polynomials in t.
std::pair<Poly1, Poly1> parse_arc(std::string_view text);

/// SOS witnesses read off the syntax when the input has the shape A / B with A and B written
/// as positive combinations (and products) of squares. Numerator and denominator are returned
/// unreduced, exactly as written.
std::optional<std::pair<SosRep, SosRep>> syntactic_sos(std::string_view text);

}  // namespace regulous
