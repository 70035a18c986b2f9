#include <doctest.h>

#include "generators.hpp"
#include "regulous/algebra.hpp"
#include "regulous/corpus.hpp"
#include "regulous/errors.hpp"
#include "regulous/parse.hpp"

using namespace regulous;

namespace {

RatFunc F(const char* s) { return parse_expression(s); }

bool normalized(const RatFunc& f) {
  const Poly2& d = f.den();
  if (d.is_zero()) return false;
  if (!(primitive_normalized(d) == d)) return false;
  return gcd_poly(f.num(), d) == Poly2(1) || f.num().is_zero();
}

/// A random function whose denominator may vanish at `a`: a product of random factors
/// and of squared distances to a.
RatFunc around(gen::Engine& rng, const Point& a) {
  const Poly2 dx = Poly2::x() - a.x, dy = Poly2::y() - a.y;
  Poly2 den = Poly2(1) + gen::poly2(rng, 1) * gen::poly2(rng, 1);
  if (den.evaluate(a) == 0) den += Poly2(1);
  for (long k = gen::uniform(rng, 0, 2); k > 0; --k) den *= dx * dx + dy * dy;
  Poly2 num = gen::nonzero_poly2(rng, 4);
  for (long k = gen::uniform(rng, 0, 2); k > 0; --k) num *= gen::uniform(rng, 0, 1) ? dx : dy;
  return RatFunc::reduce(num, den);
}

}  // namespace

TEST_CASE("expressions parse to reduced functions") {
  CHECK(F("x^3/(x^2+y^2)").to_string() == "x^3 / (x^2 + y^2)");
  const RatFunc g = F("1 - x^5/(y^2+x^4)");
  CHECK(g == RatFunc::reduce(parse_polynomial("y^2+x^4-x^5"), parse_polynomial("y^2+x^4")));
  const RatFunc w = F("((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)");
  CHECK(w.num() == parse_polynomial("2*x^2 + 2*y^2 + 2*x*y^2 - 2*y^3 + y^4"));
  CHECK(w.den() == parse_polynomial("x^2 + y^2 + 2*x*y^2 + y^4"));
  CHECK(F(" x ^ 2 *y") == F("x^2*y"));
  CHECK(F("2^3^2") == RatFunc(512));
  CHECK(F("-x^2") == -F("x^2"));
  CHECK(F("0.25*x") == F("x/4"));
  CHECK(F("(x^2-y^2)/(x-y)") == F("x+y"));
  CHECK(F("1/(1/x)") == F("x"));
}

TEST_CASE("malformed expressions report a position") {
  try {
    (void)F("x^3/(x^2+)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(F("x^-1"), ParseError);
  CHECK_THROWS_AS(F("x^(1/2)"), ParseError);
  CHECK_THROWS_AS(F("z"), ParseError);
  CHECK_THROWS_AS(F("x/(y-y)"), ZeroDenominator);
  CHECK_THROWS_AS(F("x/0"), ZeroDenominator);
}

TEST_CASE("printing round-trips over the corpus and random functions") {
  for (const auto& e : corpus()) {
    const RatFunc f = F(e.expr.c_str());
    CHECK(parse_expression(f.to_string()) == f);
  }
  gen::Engine rng(31);
  for (int n = 0; n < 200; ++n) {
    const RatFunc f = around(rng, gen::point(rng));
    CHECK(parse_expression(f.to_string()) == f);
  }
}

TEST_CASE("field operations keep the normal form") {
  gen::Engine rng(32);
  for (int n = 0; n < 150; ++n) {
    const RatFunc f = around(rng, gen::point(rng)), g = around(rng, gen::point(rng));
    const Point pt = gen::point(rng);
    for (RfOp op : {RfOp::add, RfOp::sub, RfOp::mul, RfOp::div}) {
      if (op == RfOp::div && g.is_zero()) continue;
      const RatFunc h = rf_ops(f, g, op);
      CHECK(normalized(h));
      const auto fv = f.value_at(pt), gv = g.value_at(pt), hv = h.value_at(pt);
      if (fv && gv && hv) {
        if (op == RfOp::add) CHECK(*hv == *fv + *gv);
        if (op == RfOp::sub) CHECK(*hv == *fv - *gv);
        if (op == RfOp::mul) CHECK(*hv == *fv * *gv);
        if (op == RfOp::div && *gv != 0) CHECK(*hv == *fv / *gv);
      }
    }
    CHECK(normalized(rf_ops(f, RatFunc(2), RfOp::pow)));
    CHECK(rf_ops(f, RatFunc(2), RfOp::pow) == f * f);
  }
  CHECK_THROWS_AS(F("x") / RatFunc(), DivisionByZeroFunction);
  CHECK_THROWS_AS(RatFunc::reduce(Poly2::x(), Poly2{}), ZeroDenominator);
  CHECK(reduce_fraction(parse_polynomial("2*x*y"), parse_polynomial("-4*x")) == F("-y/2"));
}

TEST_CASE("symbolic partial derivative of the cubic example") {
  const RatFunc f = F("x^3/(x^2+y^2)");
  CHECK(derivative_rf(f, Axis::x) == F("(x^4+3*x^2*y^2)/(x^2+y^2)^2"));
  CHECK(derivative_rf(f, Axis::y) == F("-2*x^3*y/(x^2+y^2)^2"));
  CHECK(directional_derivative_at(f, origin(), Point{1, 0}) == 1);
  CHECK(directional_derivative_at(f, origin(), Point{0, 1}) == 0);
  CHECK(directional_derivative_at(f, origin(), Point{1, 1}) == Rat(1, 2));
  CHECK_THROWS_AS(directional_derivative_at(F("1/x"), origin(), Point{1, 0}), NoDerivative);
  CHECK(partial_rf(F("x^3*y^2"), 2, 1) == F("12*x*y"));
}

TEST_CASE("chain rule along arcs") {
  gen::Engine rng(33);
  for (int n = 0; n < 100; ++n) {
    const RatFunc f = gen::smooth_ratfunc(rng, 4);
    const Poly1 X = gen::poly1(rng, 2), Y = gen::poly1(rng, 2);
    const Frac1 lhs = derivative(restrict_to_arc(f, X, Y).value);
    const Frac1 fx = restrict_to_arc(derivative_rf(f, Axis::x), X, Y).value;
    const Frac1 fy = restrict_to_arc(derivative_rf(f, Axis::y), X, Y).value;
    const Frac1 rhs = fx * Frac1{X.derivative()} + fy * Frac1{Y.derivative()};
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(restrict_to_arc(F("1/x"), Poly1{}, Poly1{0, 1}), IdenticallyUndefined);
}

TEST_CASE("directional derivatives agree with symbolic partials off the poles") {
  gen::Engine rng(34);
  for (int n = 0; n < 100; ++n) {
    const RatFunc f = gen::smooth_ratfunc(rng, 4);
    const Point a = gen::point(rng);
    CHECK(directional_derivative_at(f, a, Point{1, 0}) == *derivative_rf(f, Axis::x).value_at(a));
    CHECK(directional_derivative_at(f, a, Point{0, 1}) == *derivative_rf(f, Axis::y).value_at(a));
  }
}

TEST_CASE("order drops by at most one under differentiation") {
  gen::Engine rng(35);
  int checked = 0;
  while (checked < 200) {
    const Point a = gen::point(rng);
    const RatFunc f = around(rng, a);
    const Axis v = gen::uniform(rng, 0, 1) ? Axis::x : Axis::y;
    const RatFunc df = derivative_rf(f, v);
    if (f.is_zero() || df.is_zero()) continue;
    CHECK(order_at_rf(df, a) >= order_at_rf(f, a) - 1);
    ++checked;
  }
  CHECK(order_at_rf(F("x^3/(x^2+y^2)"), origin()) == 1);
  CHECK(order_at_rf(F("1/(x^2+y^4)"), origin()) == -2);
  CHECK_THROWS_AS(order_at_rf(RatFunc(), origin()), ZeroFunction);
}

TEST_CASE("mixed partials commute on the domain") {
  gen::Engine rng(36);
  for (int n = 0; n < 60; ++n) {
    const RatFunc f = around(rng, gen::point(rng));
    CHECK(derivative_rf(derivative_rf(f, Axis::x), Axis::y) == derivative_rf(derivative_rf(f, Axis::y), Axis::x));
  }
}

TEST_CASE("poles of regulous corpus members are zeros of the numerator") {
  for (const auto& e : corpus()) {
    if (!e.regulous) continue;
    const RatFunc f = F(e.expr.c_str());
    const PoleSet ps = poles(f);
    CHECK(ps.complete);
    CHECK(ps.points == e.poles);
    for (const Point& a : ps.points) CHECK(f.num().evaluate(a) == 0);
  }
  const PoleSet line = poles(F("(x+y)/x"));
  CHECK_FALSE(line.finite);
  const PoleSet irr = poles(F("1/((x^2-2)^2+y^2)"));
  CHECK(irr.points.empty());
  CHECK(irr.boxes.size() == 2);
  CHECK_FALSE(irr.complete);
}

TEST_CASE("polynomial expansion criterion") {
  const auto r = expansion_criterion(F("x^4/(x^2+y^2)"), origin(), 1);
  CHECK(r.holds);
  REQUIRE(r.T);
  CHECK(r.T->is_zero());
  CHECK_FALSE(expansion_criterion(F("x^4/(x^2+y^2)"), origin(), 2).holds);
  CHECK(expansion_criterion(F("x^3/(x^2+y^2)"), origin(), 0).holds);
  CHECK_FALSE(expansion_criterion(F("x^3/(x^2+y^2)"), origin(), 1).holds);
  const auto s = expansion_criterion(F("1 + x + x^5/(x^2+y^2)"), origin(), 2);
  CHECK(s.holds);
  CHECK(*s.T == parse_polynomial("1 + x"));
  CHECK_THROWS_AS(expansion_criterion(F("x^3/(x^2+y^4)"), origin(), 1), PreconditionViolated);
}

TEST_CASE("linear solver") {
  auto c = solve_linear({{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(solve_linear({{1, 1}, {2, 2}}, {1, 3}).has_value());
  c = solve_linear({{1, 1}}, {4});
  REQUIRE(c);
  CHECK((*c)[0] + (*c)[1] == 4);
}
