#include "regulous/ratfunc.hpp"

#include <map>

#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"

namespace regulous {

RatFunc RatFunc::reduce(const Poly2& p, const Poly2& q) {
  if (q.is_zero()) throw ZeroDenominator("zero denominator");
  RatFunc f;
  if (p.is_zero()) return f;
  Poly2 g = gcd_poly(p, q);
  Poly2 n = p;
  Poly2 d = q;
  if (!g.is_constant()) {
    n = divide_exact(p, g);
    d = divide_exact(q, g);
  }
  Poly2 dn = primitive_normalized(d);
  // d = dn * s for a rational s; absorb 1/s into the numerator.
  const auto [e, c] = d.leading_term();
  const Rat s = c / dn.leading_term().second;
  f.num_ = n * (1 / s);
  f.den_ = dn;
  return f;
}

RatFunc reduce_fraction(const Poly2& p, const Poly2& q) { return RatFunc::reduce(p, q); }

std::optional<Rat> RatFunc::value_at(const Point& a) const {
  Rat d = den_.evaluate(a);
  if (d == 0) return std::nullopt;
  return num_.evaluate(a) / d;
}

namespace {

bool single_factor(const Poly2& p) {
  if (p.size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (e.degree() == 0) return c >= 0 && c.get_den() == 1;
  return c == 1 && (e.i == 0 || e.j == 0);
}

}  // namespace

std::string RatFunc::to_string(const std::string& xv, const std::string& yv) const {
  std::string n = num_.to_string(xv, yv);
  if (is_polynomial() && den_ == Poly2(1)) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(xv, yv);
  if (!single_factor(den_)) d = "(" + d + ")";
  return n + " / " + d;
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  if (f.den_ == g.den_) return RatFunc::reduce(f.num_ + g.num_, f.den_);
  return RatFunc::reduce(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero() || g.is_zero()) return RatFunc{};
  // Both inputs are reduced, so only the cross pairs can share factors.
  Poly2 fn = f.num_, fd = f.den_, gn = g.num_, gd = g.den_;
  if (!gd.is_constant()) {
    Poly2 c = gcd_poly(fn, gd);
    if (!c.is_constant()) {
      fn = divide_exact(fn, c);
      gd = divide_exact(gd, c);
    }
  }
  if (!fd.is_constant()) {
    Poly2 c = gcd_poly(gn, fd);
    if (!c.is_constant()) {
      gn = divide_exact(gn, c);
      fd = divide_exact(fd, c);
    }
  }
  RatFunc out;
  const Poly2 d = fd * gd;
  const Poly2 dn = primitive_normalized(d);
  const Rat s = d.leading_term().second / dn.leading_term().second;
  out.num_ = fn * gn * (1 / s);
  out.den_ = dn;
  return out;
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) throw DivisionByZeroFunction("division by the zero function");
  return RatFunc::reduce(f.num_ * g.den_, f.den_ * g.num_);
}

RatFunc RatFunc::pow(unsigned n) const {
  // num^n and den^n stay coprime.
  RatFunc f;
  f.num_ = num_.pow(n);
  f.den_ = den_.pow(n);
  if (n == 0) f.num_ = Poly2(1);
  return f;
}

RatFunc rf_ops(const RatFunc& f, const RatFunc& g, RfOp op) {
  switch (op) {
    case RfOp::add:
      return f + g;
    case RfOp::sub:
      return f - g;
    case RfOp::mul:
      return f * g;
    case RfOp::div:
      return f / g;
    case RfOp::pow: {
      if (!g.is_constant()) throw PreconditionViolated("exponent must be a constant");
      Rat e = g.num().coeff(0, 0) / g.den().coeff(0, 0);
      if (e < 0 || e.get_den() != 1 || !e.get_num().fits_uint_p())
        throw PreconditionViolated("exponent must be a non-negative integer");
      return f.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
  }
  return f;
}

PoleSet poles(const RatFunc& f) {
  PoleSet ps;
  if (f.den().is_constant()) return ps;
  ZeroSet2D z = zero_set_2d(f.den());
  if (!z.finite) {
    ps.finite = false;
    ps.complete = false;
    ps.infinite_witness = z.infinite_witness;
    return ps;
  }
  ps.points = z.points;
  ps.boxes = z.boxes;
  ps.complete = z.boxes.empty();
  return ps;
}

RatFunc derivative_rf(const RatFunc& f, Axis v) {
  const Poly2& p = f.num();
  const Poly2& q = f.den();
  if (q.is_constant()) return RatFunc::reduce(p.partial(v), q);
  const Poly2 qv = q.partial(v);
  if (qv.is_zero()) return RatFunc::reduce(p.partial(v), q);
  // With g = gcd(q, q_v): f_v = (p_v * q/g - p * q_v/g) / (q * q/g), a much smaller gcd than against q^2.
  const Poly2 g = gcd_poly(q, qv);
  const Poly2 qg = divide_exact(q, g);
  return RatFunc::reduce(p.partial(v) * qg - p * divide_exact(qv, g), q * qg);
}

RatFunc partial_rf(const RatFunc& f, unsigned i, unsigned j) {
  RatFunc g = f;
  for (unsigned k = 0; k < i; ++k) g = derivative_rf(g, Axis::x);
  for (unsigned k = 0; k < j; ++k) g = derivative_rf(g, Axis::y);
  return g;
}

Frac1 restrict_to_line(const RatFunc& f, const Point& a, const Point& v) {
  const Poly1 X{a.x, v.x};
  const Poly1 Y{a.y, v.y};
  return restrict_to_arc(f, X, Y).value;
}

Rat directional_derivative_at(const RatFunc& f, const Point& a, const Point& v) {
  Frac1 g;
  try {
    g = restrict_to_line(f, a, v);
  } catch (const IdenticallyUndefined&) {
    throw NoDerivative("f is undefined along the line through " + to_string(a));
  }
  if (g.den.evaluate(0) == 0)
    throw NoDerivative("restriction " + g.to_string() + " has a pole at t = 0");
  Frac1 dg = derivative(g);
  return dg.num.evaluate(0) / dg.den.evaluate(0);
}

int order_at_rf(const RatFunc& f, const Point& a) {
  if (f.is_zero()) throw ZeroFunction("order of the zero function");
  return static_cast<int>(order_at(f.num(), a)) - static_cast<int>(order_at(f.den(), a));
}

ArcRestriction restrict_to_arc(const RatFunc& f, const Poly1& x_of_t, const Poly1& y_of_t) {
  Poly1 d = f.den().compose(x_of_t, y_of_t);
  if (d.is_zero())
    throw IdenticallyUndefined("denominator vanishes identically along (" + x_of_t.to_string() + ", " +
                               y_of_t.to_string() + ")");
  Poly1 n = f.num().compose(x_of_t, y_of_t);
  return ArcRestriction{x_of_t, y_of_t, Frac1::reduce(n, d)};
}

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A.front().size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    const Rat inv = 1 / A[r][c];
    for (auto& v : A[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || A[k][c] == 0) continue;
      const Rat m = A[k][c];
      for (std::size_t j = c; j < cols; ++j) A[k][j] -= m * A[r][j];
      b[k] -= m * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows; ++k)
    if (b[k] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
  return x;
}

ExpansionResult expansion_criterion(const RatFunc& f, const Point& a, unsigned k) {
  const auto verdict = local_positive_definiteness(f.den(), a);
  if (!verdict.definite())
    throw PreconditionViolated("denominator is not locally definite at " + to_string(a));
  const Poly2 P = translate(f.num(), a);
  const Poly2 Q = translate(f.den(), a);
  const unsigned m = order_at_origin(Q);
  const unsigned top = m + k;

  std::vector<Exponent> unknowns;
  for (unsigned d = 0; d <= k; ++d)
    for (unsigned i = 0; i <= d; ++i) unknowns.push_back({d - i, i});
  std::vector<Exponent> equations;
  for (unsigned d = 0; d <= top; ++d)
    for (unsigned i = 0; i <= d; ++i) equations.push_back({d - i, i});

  std::vector<std::vector<Rat>> A(equations.size(), std::vector<Rat>(unknowns.size()));
  std::vector<Rat> b(equations.size());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    const Exponent& e = equations[r];
    b[r] = P.coeff(e.i, e.j);
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      const Exponent& u = unknowns[c];
      if (u.i <= e.i && u.j <= e.j) A[r][c] = Q.coeff(e.i - u.i, e.j - u.j);
    }
  }
  auto sol = solve_linear(std::move(A), std::move(b));
  ExpansionResult res;
  if (!sol) return res;
  Poly2 T;
  for (std::size_t c = 0; c < unknowns.size(); ++c) T.add_term(unknowns[c], (*sol)[c]);
  res.holds = true;
  res.T = T;
  return res;
}

}  // namespace regulous
