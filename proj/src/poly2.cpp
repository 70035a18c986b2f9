#include "regulous/poly2.hpp"

#include <algorithm>
#include <sstream>

#include "regulous/errors.hpp"
#include "regulous/kernels.hpp"

namespace regulous {

Poly2::Poly2(const Rat& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

Poly2 Poly2::x() { return monomial(1, 1, 0); }
Poly2 Poly2::y() { return monomial(1, 0, 1); }

Poly2 Poly2::monomial(const Rat& c, unsigned i, unsigned j) {
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

Poly2 Poly2::from_terms(const std::vector<std::pair<Exponent, Rat>>& terms) {
  Poly2 p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Poly2 Poly2::from_poly1(const Poly1& p, Axis var) {
  Poly2 out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    auto e = static_cast<unsigned>(k);
    out.add_term(var == Axis::x ? Exponent{e, 0} : Exponent{0, e}, p.coefficients()[k]);
  }
  return out;
}

bool Poly2::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

Rat Poly2::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly2::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly2::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

int Poly2::degree_in(Axis v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(v == Axis::x ? e.i : e.j));
  return d;
}

int Poly2::min_degree_in(Axis v) const {
  if (terms_.empty()) return -1;
  unsigned d = ~0U;
  for (const auto& [e, c] : terms_) d = std::min(d, v == Axis::x ? e.i : e.j);
  return static_cast<int>(d);
}

std::pair<Exponent, Rat> Poly2::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  // Within the top degree block the first entry carries the largest power of x.
  const unsigned top = terms_.rbegin()->first.degree();
  auto it = terms_.lower_bound(Exponent{top, 0});
  return *it;
}

bool Poly2::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) { return kernels::multiply(a, b); }

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = kernels::multiply(*this, o);
  return *this;
}

Poly2& Poly2::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly2 Poly2::pow(unsigned n) const {
  Poly2 result(1);
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Rat Poly2::evaluate(const Point& a) const { return evaluate(a.x, a.y); }

Rat Poly2::evaluate(const Rat& x, const Rat& y) const {
  if (terms_.empty()) return 0;
  const unsigned dx = static_cast<unsigned>(degree_in(Axis::x));
  const unsigned dy = static_cast<unsigned>(degree_in(Axis::y));
  std::vector<Rat> xp(dx + 1), yp(dy + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (unsigned k = 1; k <= dx; ++k) xp[k] = xp[k - 1] * x;
  for (unsigned k = 1; k <= dy; ++k) yp[k] = yp[k - 1] * y;
  Rat acc = 0;
  for (const auto& [e, c] : terms_) acc += c * xp[e.i] * yp[e.j];
  return acc;
}

Poly2 Poly2::compose(const Poly2& X, const Poly2& Y) const {
  if (terms_.empty()) return {};
  const unsigned dx = static_cast<unsigned>(degree_in(Axis::x));
  const unsigned dy = static_cast<unsigned>(degree_in(Axis::y));
  std::vector<Poly2> xp(dx + 1), yp(dy + 1);
  xp[0] = Poly2(1);
  yp[0] = Poly2(1);
  for (unsigned k = 1; k <= dx; ++k) xp[k] = xp[k - 1] * X;
  for (unsigned k = 1; k <= dy; ++k) yp[k] = yp[k - 1] * Y;
  Poly2 acc;
  for (const auto& [e, c] : terms_) acc += (xp[e.i] * yp[e.j]) * c;
  return acc;
}

Poly1 Poly2::compose(const Poly1& X, const Poly1& Y) const {
  if (terms_.empty()) return {};
  const unsigned dx = static_cast<unsigned>(degree_in(Axis::x));
  const unsigned dy = static_cast<unsigned>(degree_in(Axis::y));
  std::vector<Poly1> xp(dx + 1), yp(dy + 1);
  xp[0] = Poly1::constant(1);
  yp[0] = Poly1::constant(1);
  for (unsigned k = 1; k <= dx; ++k) xp[k] = xp[k - 1] * X;
  for (unsigned k = 1; k <= dy; ++k) yp[k] = yp[k - 1] * Y;
  Poly1 acc;
  for (const auto& [e, c] : terms_) acc += (xp[e.i] * yp[e.j]) * c;
  return acc;
}

Poly1 Poly2::restrict(Axis fixed, const Rat& value) const {
  std::vector<Poly1> coeffs = coefficients_in(fixed == Axis::x ? Axis::y : Axis::x);
  std::vector<Rat> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) out[k] = coeffs[k].evaluate(value);
  return Poly1(std::move(out));
}

Poly2 Poly2::partial(Axis v) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (v == Axis::x && e.i > 0) out.add_term({e.i - 1, e.j}, c * e.i);
    if (v == Axis::y && e.j > 0) out.add_term({e.i, e.j - 1}, c * e.j);
  }
  return out;
}

Poly2 Poly2::swap_xy() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) out.add_term({e.j, e.i}, c);
  return out;
}

Poly2 Poly2::shift(unsigned di, unsigned dj) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.i + di, e.j + dj}, c);
  return out;
}

std::vector<Poly1> Poly2::coefficients_in(Axis main) const {
  const int d = degree_in(main);
  if (d < 0) return {};
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(d) + 1);
  const Axis other = main == Axis::x ? Axis::y : Axis::x;
  const int od = degree_in(other);
  for (auto& r : raw) r.resize(static_cast<std::size_t>(od) + 1);
  for (const auto& [e, c] : terms_) {
    unsigned m = main == Axis::x ? e.i : e.j;
    unsigned o = main == Axis::x ? e.j : e.i;
    raw[m][o] = c;
  }
  std::vector<Poly1> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

Poly2 Poly2::from_coefficients_in(Axis main, const std::vector<Poly1>& coeffs) {
  Poly2 out;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const auto& cs = coeffs[m].coefficients();
    for (std::size_t o = 0; o < cs.size(); ++o) {
      auto mm = static_cast<unsigned>(m);
      auto oo = static_cast<unsigned>(o);
      out.add_term(main == Axis::x ? Exponent{mm, oo} : Exponent{oo, mm}, cs[o]);
    }
  }
  return out;
}

std::string Poly2::to_string(const std::string& xv, const std::string& yv) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = regulous::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.degree() == 0) {
      os << regulous::to_string(mag);
      wrote = true;
    }
    auto var = [&](const std::string& name, unsigned p) {
      if (p == 0) return;
      if (wrote) os << "*";
      os << name;
      if (p > 1) os << "^" << p;
      wrote = true;
    };
    var(xv, e.i);
    var(yv, e.j);
  }
  return os.str();
}

Poly2 translate(const Poly2& p, const Point& a) {
  if (a.x == 0 && a.y == 0) return p;
  return p.compose(Poly2::x() + Poly2(a.x), Poly2::y() + Poly2(a.y));
}

Poly2 partial_poly(const Poly2& p, Axis v) { return p.partial(v); }

HomogDecomp homogeneous_components(const Poly2& p, const Point& a) {
  if (p.is_zero()) throw ZeroPolynomial("homogeneous decomposition of the zero polynomial");
  Poly2 local = translate(p, a);
  HomogDecomp h;
  h.center = a;
  h.components.resize(static_cast<std::size_t>(local.total_degree()) + 1);
  for (const auto& [e, c] : local.terms()) h.components[e.degree()].add_term(e, c);
  h.order = local.terms().begin()->first.degree();
  return h;
}

unsigned order_at_origin(const Poly2& p) {
  if (p.is_zero()) throw ZeroPolynomial("order of the zero polynomial");
  return p.terms().begin()->first.degree();
}

unsigned order_at(const Poly2& p, const Point& a) {
  if (p.is_zero()) throw ZeroPolynomial("order of the zero polynomial");
  if (p.evaluate(a) != 0) return 0;
  return order_at_origin(translate(p, a));
}

Poly2 homogeneous_part(const Poly2& p, unsigned degree) {
  Poly2 out;
  for (const auto& [e, c] : p.terms())
    if (e.degree() == degree) out.add_term(e, c);
  return out;
}

}  // namespace regulous
