#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regulous/rat.hpp"

namespace regulous {

/// Dense univariate polynomial over the rationals, coefficients from degree 0 upward.
/// The coefficient vector is always trimmed: the zero polynomial has no coefficients.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rat> coefficients);
  Poly1(std::initializer_list<Rat> coefficients);

  static Poly1 constant(const Rat& c);
  static Poly1 monomial(const Rat& c, std::size_t degree);
  /// The identity polynomial t.
  static Poly1 variable();

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& leading() const;

  Rat evaluate(const Rat& t) const;
  Poly1 derivative() const;
  /// p(q(t)).
  Poly1 compose(const Poly1& q) const;
  /// Divided by its leading coefficient; zero stays zero.
  Poly1 monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Poly1 primitive() const;
  /// Sign of p(t) as t -> +inf / -inf.
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const Rat& s);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const Rat& s) { return a *= s; }
  friend Poly1 operator*(const Rat& s, Poly1 a) { return a *= s; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  Poly1 pow(unsigned n) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Euclidean division; throws ZeroPolynomial on a zero divisor.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
/// Quotient of an exact division; throws PreconditionViolated if the remainder is nonzero.
Poly1 divide_exact(const Poly1& a, const Poly1& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);
/// p / gcd(p, p'), monic.
Poly1 squarefree_part(const Poly1& p);
/// Yun's square-free factorization: p = lc * prod f_i^i; entry i-1 holds f_i (monic, possibly 1).
std::vector<Poly1> squarefree_decomposition(const Poly1& p);

/// Reduced univariate rational function num/den with monic denominator.
struct Frac1 {
  Poly1 num;
  Poly1 den = Poly1::constant(1);

  static Frac1 reduce(const Poly1& n, const Poly1& d);
  bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
  Rat constant_value() const { return num.coeff(0) / den.coeff(0); }
  std::string to_string(const std::string& var = "t") const;
  friend bool operator==(const Frac1& a, const Frac1& b) { return a.num == b.num && a.den == b.den; }
};

Frac1 derivative(const Frac1& f);
Frac1 operator+(const Frac1& a, const Frac1& b);
Frac1 operator*(const Frac1& a, const Frac1& b);

}  // namespace regulous
