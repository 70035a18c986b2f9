#include "regulous/poly1.hpp"

#include <cstdint>
#include <sstream>

#include "regulous/errors.hpp"

namespace regulous {

Poly1::Poly1(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly1::Poly1(std::initializer_list<Rat> coefficients) : c_(coefficients) { trim(); }

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::constant(const Rat& c) { return Poly1(std::vector<Rat>{c}); }

Poly1 Poly1::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly1(std::move(v));
}

Poly1 Poly1::variable() { return monomial(1, 1); }

const Rat& Poly1::leading() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat Poly1::evaluate(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return Poly1(std::move(d));
}

Poly1 Poly1::compose(const Poly1& q) const {
  Poly1 acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

Poly1 Poly1::monic() const {
  if (is_zero()) return {};
  Poly1 r = *this;
  Rat lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Poly1 Poly1::primitive() const {
  if (is_zero()) return {};
  Int den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Int g = 0;
  std::vector<Int> ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v / g);
  return Poly1(std::move(out));
}

int Poly1::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }

int Poly1::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  return (degree() % 2 == 0) ? s : -s;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly1 Poly1::pow(unsigned n) const {
  Poly1 result = constant(1);
  Poly1 base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Poly1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat mag = regulous::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) {
      os << regulous::to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Rat> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly1{}, a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rat& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Rat q = top / lb;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 divide_exact(const Poly1& a, const Poly1& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionViolated("inexact univariate division");
  return q;
}

namespace {

using IntPoly = std::vector<Int>;  // low degree first, no trailing zeros

IntPoly to_primitive_ints(const Poly1& p) {
  IntPoly out;
  const Poly1 q = p.primitive();
  for (const auto& c : q.coefficients()) out.push_back(c.get_num());
  return out;
}

void make_primitive(IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// lc(b)^k * a mod b over Z, trimmed.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Int top = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

using u64 = std::uint64_t;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % kPrime); }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e > 0; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::vector<u64> reduce_mod(const IntPoly& p) {
  std::vector<u64> out;
  for (const auto& c : p) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), kPrime));
  return out;
}

/// Degree of gcd(a, b) mod the prime.
int modular_gcd_degree(std::vector<u64> a, std::vector<u64> b) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const u64 q = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + kPrime - mulmod(q, b[j])) % kPrime;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// True only if gcd(a, b) = 1 is proven by one good prime (leading coefficients survive).
bool coprime_mod_prime(const IntPoly& a, const IntPoly& b) {
  const auto am = reduce_mod(a), bm = reduce_mod(b);
  if (am.back() == 0 || bm.back() == 0) return false;
  return modular_gcd_degree(am, bm) == 0;
}

}  // namespace

// Primitive pseudo-remainder sequence over Z: avoids the coefficient blow-up of Euclid over Q.
Poly1 gcd(const Poly1& a, const Poly1& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = to_primitive_ints(a), y = to_primitive_ints(b);
  if (x.size() < y.size()) std::swap(x, y);
  if (y.size() == 1 || coprime_mod_prime(x, y)) return Poly1::constant(1);
  while (!y.empty()) {
    if (y.size() == 1) return Poly1::constant(1);
    IntPoly r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> c;
  for (auto& v : x) c.emplace_back(v);
  return Poly1(std::move(c)).monic();
}

Poly1 squarefree_part(const Poly1& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Poly1::constant(1);
  return divide_exact(p, gcd(p, p.derivative())).monic();
}

std::vector<Poly1> squarefree_decomposition(const Poly1& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
  std::vector<Poly1> out;
  if (p.degree() == 0) return out;
  Poly1 a = p.monic();
  Poly1 b = a.derivative();
  Poly1 c = gcd(a, b);
  Poly1 w = divide_exact(a, c);
  Poly1 y = divide_exact(b, c);
  Poly1 z = y - w.derivative();
  while (w.degree() > 0) {
    Poly1 g = gcd(w, z);
    out.push_back(g);
    w = divide_exact(w, g);
    y = divide_exact(z, g);
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Frac1 Frac1::reduce(const Poly1& n, const Poly1& d) {
  if (d.is_zero()) throw ZeroDenominator("univariate fraction with zero denominator");
  if (n.is_zero()) return Frac1{Poly1{}, Poly1::constant(1)};
  Poly1 g = gcd(n, d);
  Poly1 num = divide_exact(n, g);
  Poly1 den = divide_exact(d, g);
  Rat lc = den.leading();
  return Frac1{num * (1 / lc), den * (1 / lc)};
}

std::string Frac1::to_string(const std::string& var) const {
  if (den.degree() == 0) return num.to_string(var);
  return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

Frac1 derivative(const Frac1& f) {
  return Frac1::reduce(f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den);
}

Frac1 operator+(const Frac1& a, const Frac1& b) {
  return Frac1::reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}

Frac1 operator*(const Frac1& a, const Frac1& b) { return Frac1::reduce(a.num * b.num, a.den * b.den); }

}  // namespace regulous
