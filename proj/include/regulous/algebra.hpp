#pragma once

#include <array>
#include <optional>
#include <vector>

#include "regulous/poly2.hpp"

namespace regulous {

/// Integer coefficients with gcd 1 and positive graded-lex leading coefficient.
Poly2 primitive_normalized(const Poly2& p);
/// Scaled so the graded-lex leading coefficient is 1.
Poly2 monic(const Poly2& p);

/// Quotient when d divides p exactly, nullopt otherwise. Throws ZeroPolynomial for d = 0.
std::optional<Poly2> try_divide(const Poly2& p, const Poly2& d);
/// Quotient of an exact division; throws PreconditionViolated when d does not divide p.
Poly2 divide_exact(const Poly2& p, const Poly2& d);

/// gcd over Q[x, y], primitive-normalized. gcd(p, 0) = normalized p; gcd(0, 0) = 0.
Poly2 gcd_poly(const Poly2& p, const Poly2& q);

/// Sylvester resultant eliminating `eliminate`; the result lives in the other variable.
/// Throws DegenerateInput if both inputs are constant in the eliminated variable.
Poly2 resultant(const Poly2& p, const Poly2& q, Axis eliminate);

/// Monic gcd (in the other variable) of the coefficients of p viewed as a polynomial in `main`.
Poly1 content_in(const Poly2& p, Axis main);

/// p / gcd(p, p_x, p_y), primitive-normalized.
Poly2 squarefree_part(const Poly2& p);
/// Entry k-1 is the product of the irreducible factors occurring with multiplicity exactly k.
std::vector<Poly2> squarefree_decomposition(const Poly2& p);

/// Deterministic rational four-square decomposition of a positive rational.
/// Components are non-negative and non-increasing. A square gives one component; two are
/// used whenever n*d factors by trial division below 2e5 (plus one prime cofactor).
/// Otherwise three or four, found by a prime-hunting descent.
std::array<Rat, 4> four_squares(const Rat& c);

}  // namespace regulous
