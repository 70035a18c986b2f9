#pragma once

#include <map>
#include <string>
#include <vector>

#include "regulous/poly1.hpp"
#include "regulous/rat.hpp"

namespace regulous {

enum class Axis { x, y };

struct Exponent {
  unsigned i = 0;  // power of x
  unsigned j = 0;  // power of y
  unsigned degree() const { return i + j; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Canonical term order: ascending total degree, then descending power of x.
/// This is the print order; the graded-lex *leading* term is the largest degree with the largest x power.
struct TermOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.i > b.i;
  }
};

/// Exact bivariate polynomial over the rationals. Zero coefficients are never stored.
class Poly2 {
 public:
  using TermMap = std::map<Exponent, Rat, TermOrder>;

  Poly2() = default;
  Poly2(const Rat& c);  // NOLINT(google-explicit-constructor): constants promote freely
  Poly2(int c) : Poly2(Rat(c)) {}  // NOLINT

  static Poly2 x();
  static Poly2 y();
  static Poly2 monomial(const Rat& c, unsigned i, unsigned j);
  static Poly2 from_terms(const std::vector<std::pair<Exponent, Rat>>& terms);
  /// Embeds a univariate polynomial in the chosen variable.
  static Poly2 from_poly1(const Poly1& p, Axis var);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Rat coeff(unsigned i, unsigned j) const;
  void add_term(const Exponent& e, const Rat& c);

  /// -1 for zero.
  int total_degree() const;
  int degree_in(Axis v) const;
  int min_degree_in(Axis v) const;
  /// Graded-lex leading term (x > y).
  std::pair<Exponent, Rat> leading_term() const;
  bool is_homogeneous() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rat& s);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rat& s) { return a *= s; }
  friend Poly2 operator*(const Rat& s, Poly2 a) { return a *= s; }
  friend Poly2 operator*(Poly2 a, int s) { return a *= Rat(s); }
  friend Poly2 operator*(int s, Poly2 a) { return a *= Rat(s); }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 pow(unsigned n) const;

  Rat evaluate(const Point& a) const;
  Rat evaluate(const Rat& x, const Rat& y) const;
  /// p(X, Y).
  Poly2 compose(const Poly2& X, const Poly2& Y) const;
  /// p(X(t), Y(t)).
  Poly1 compose(const Poly1& X, const Poly1& Y) const;
  /// Fix one variable at a rational value; the result is univariate in the other.
  Poly1 restrict(Axis fixed, const Rat& value) const;
  Poly2 partial(Axis v) const;
  Poly2 swap_xy() const;
  /// Multiplies every term by x^di y^dj.
  Poly2 shift(unsigned di, unsigned dj) const;

  /// Coefficients as a polynomial in `main` with coefficients univariate in the other variable.
  std::vector<Poly1> coefficients_in(Axis main) const;
  static Poly2 from_coefficients_in(Axis main, const std::vector<Poly1>& coeffs);

  /// Canonical text form, e.g. `2*x^2 + 2*y^2 + 2*x*y^2 - 2*y^3 + y^4`.
  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  TermMap terms_;
};

/// p(x + a.x, y + a.y).
Poly2 translate(const Poly2& p, const Point& a);
Poly2 partial_poly(const Poly2& p, Axis v);

/// Homogeneous decomposition at a center. Components are stored in local coordinates
/// (x, y standing for x - center.x, y - center.y), so that
/// translate(sum of components, -center) reassembles the polynomial.
struct HomogDecomp {
  Point center;
  std::vector<Poly2> components;  // index = degree
  unsigned order = 0;

  const Poly2& lowest() const { return components[order]; }
  Poly2 component(unsigned degree) const { return degree < components.size() ? components[degree] : Poly2{}; }
};

HomogDecomp homogeneous_components(const Poly2& p, const Point& a);
unsigned order_at(const Poly2& p, const Point& a);
/// Order at the origin without translation.
unsigned order_at_origin(const Poly2& p);
/// Homogeneous part of the given degree at the origin.
Poly2 homogeneous_part(const Poly2& p, unsigned degree);

}  // namespace regulous
