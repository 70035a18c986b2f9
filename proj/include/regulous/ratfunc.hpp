#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regulous/poly1.hpp"
#include "regulous/poly2.hpp"
#include "regulous/realroots.hpp"

namespace regulous {

/// Reduced rational function num/den on the plane.
/// num and den are coprime; den is a primitive integer polynomial with positive graded-lex
/// leading coefficient, so equal functions have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly2& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}    // NOLINT
  RatFunc(int c) : num_(c), den_(1) {}           // NOLINT

  /// Throws ZeroDenominator.
  static RatFunc reduce(const Poly2& p, const Poly2& q);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// nullopt where the reduced denominator vanishes.
  std::optional<Rat> value_at(const Point& a) const;

  /// `P / Q`, each side parenthesized when it would not reparse as a single factor.
  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  /// Throws DivisionByZeroFunction.
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  RatFunc pow(unsigned n) const;
  friend bool operator==(const RatFunc& f, const RatFunc& g) { return f.num_ == g.num_ && f.den_ == g.den_; }

 private:
  Poly2 num_;
  Poly2 den_;
};

RatFunc reduce_fraction(const Poly2& p, const Poly2& q);

enum class RfOp { add, sub, mul, div, pow };
/// For pow, g must be a non-negative integer constant.
RatFunc rf_ops(const RatFunc& f, const RatFunc& g, RfOp op);

struct PoleSet {
  std::vector<Point> points;
  /// Candidate boxes around irrational poles.
  std::vector<Box> boxes;
  /// False when the denominator has an infinite zero set or irrational poles.
  bool complete = true;
  bool finite = true;
  std::optional<InfiniteWitness> infinite_witness;
};

PoleSet poles(const RatFunc& f);

RatFunc derivative_rf(const RatFunc& f, Axis v);
/// d^(i+j) f / dx^i dy^j.
RatFunc partial_rf(const RatFunc& f, unsigned i, unsigned j);

/// f(a + t v) reduced as a univariate fraction; throws IdenticallyUndefined when the
/// denominator vanishes identically along the line.
Frac1 restrict_to_line(const RatFunc& f, const Point& a, const Point& v);

/// Derivative at t = 0 of f(a + t v). Throws NoDerivative when that restriction has a pole at 0.
Rat directional_derivative_at(const RatFunc& f, const Point& a, const Point& v);

/// ord_a num - ord_a den. Throws ZeroFunction.
int order_at_rf(const RatFunc& f, const Point& a);

struct ArcRestriction {
  Poly1 x_of_t;
  Poly1 y_of_t;
  Frac1 value;
};

/// Throws IdenticallyUndefined.
ArcRestriction restrict_to_arc(const RatFunc& f, const Poly1& x_of_t, const Poly1& y_of_t);

struct ExpansionResult {
  bool holds = false;
  /// Taylor polynomial in local coordinates at the point (x, y standing for x - a.x, y - a.y).
  std::optional<Poly2> T;
};

/// Looks for T of degree <= k with ord_a(num - den*T) >= ord_a(den) + k + 1.
/// Throws PreconditionViolated unless den is locally definite at a.
ExpansionResult expansion_criterion(const RatFunc& f, const Point& a, unsigned k);

/// Solves A c = b over Q by row reduction; free unknowns are set to zero. nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

}  // namespace regulous
