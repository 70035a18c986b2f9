#include <doctest.h>

#include "generators.hpp"
#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"
#include "regulous/kernels.hpp"
#include "regulous/parse.hpp"

using namespace regulous;

namespace {
Poly2 P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("rationals print and parse") {
  CHECK(to_string(parse_rat("3/6")) == "1/2");
  CHECK(to_string(Rat(-4)) == "-4");
  CHECK(to_fraction_string(Rat(2)) == "2/1");
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(dyadic(5) == Rat(1, 32));
  CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
}

TEST_CASE("polynomial text form is canonical") {
  CHECK(P("(x+y^2)^2+y^2").to_string() == "x^2 + y^2 + 2*x*y^2 + y^4");
  CHECK(P("x - x").is_zero());
  CHECK(P("3/2*x^3*y - 1/2").to_string() == "-1/2 + 3/2*x^3*y");
  CHECK(P("2*x^2 - y").to_string("u", "v") == "-v + 2*u^2");
}

TEST_CASE("product agrees with pointwise evaluation") {
  gen::Engine rng(11);
  for (int n = 0; n < 200; ++n) {
    const Poly2 a = gen::poly2(rng, 4), b = gen::poly2(rng, 4);
    const Point pt = gen::point(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  gen::Engine rng(12);
  for (int n = 0; n < 30; ++n) {
    const Poly2 a = gen::poly2(rng, 12, 0.8), b = gen::poly2(rng, 12, 0.8);
    CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
  }
  const RatFunc f = parse_expression("x^3/(x^2+y^2)");
  const auto grid = kernels::uniform_grid(Rat(-1), Rat(1, 4), 9);
  CHECK(grid.size() == 81);
  CHECK(kernels::evaluate_grid_serial(f, grid) == kernels::evaluate_grid_parallel(f, grid));
  CHECK_FALSE(kernels::evaluate_grid_serial(f, grid)[40].has_value());  // the origin
}

TEST_CASE("partial derivatives and composition") {
  CHECK(P("x^3*y^2 + y").partial(Axis::x) == P("3*x^2*y^2"));
  CHECK(P("x^3*y^2 + y").partial(Axis::y) == P("2*x^3*y + 1"));
  CHECK(P("x^2 + y").compose(P("x*y"), P("y")) == P("x^2*y^2 + y"));
  CHECK(translate(P("x^2"), Point{1, 0}) == P("x^2 + 2*x + 1"));
}

TEST_CASE("homogeneous decomposition reassembles") {
  gen::Engine rng(13);
  for (int n = 0; n < 100; ++n) {
    const Poly2 p = gen::nonzero_poly2(rng, 5);
    const Point a = gen::point(rng);
    const HomogDecomp h = homogeneous_components(p, a);
    Poly2 sum;
    for (const auto& c : h.components) {
      CHECK((c.is_zero() || c.is_homogeneous()));
      sum += c;
    }
    CHECK(translate(sum, Point{-a.x, -a.y}) == p);
    CHECK(h.order == order_at(p, a));
  }
  CHECK(order_at(P("x^2 + y^4"), origin()) == 2);
  CHECK(order_at(P("(x-1)^3 + y^5"), Point{1, 0}) == 3);
  CHECK(order_at(P("x + 1"), origin()) == 0);
}

TEST_CASE("gcd recovers planted common factors") {
  gen::Engine rng(14);
  for (int n = 0; n < 60; ++n) {
    const Poly2 g = gen::nonzero_poly2(rng, 2);
    const Poly2 a = gen::nonzero_poly2(rng, 3), b = gen::nonzero_poly2(rng, 3);
    const Poly2 d = gcd_poly(g * a, g * b);
    CHECK(try_divide(d, g).has_value());
    CHECK(try_divide(g * a, d).has_value());
    CHECK(try_divide(g * b, d).has_value());
  }
  CHECK(gcd_poly(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(gcd_poly(P("x^2 + y^2"), P("x")) == Poly2(1));
  CHECK(gcd_poly(P("2*x*y"), Poly2{}) == P("x*y"));
}

TEST_CASE("gcd is exactly the planted factor when the cofactors are coprime") {
  gen::Engine rng(19);
  int exact = 0;
  for (int n = 0; n < 60; ++n) {
    Poly2 g = gen::nonzero_poly2(rng, 2);
    if (n % 3 == 0) g = g * g;
    Poly2 a = gen::nonzero_poly2(rng, 4), b = gen::nonzero_poly2(rng, 4);
    Rat big(gen::uniform(rng, 1, 1000000), gen::uniform(rng, 1, 1000));
    big.canonicalize();
    a *= big;
    if (a.is_constant() || b.is_constant() || g.is_constant()) continue;
    // A shared factor would make one of the two resultants vanish identically.
    const bool coprime = a.degree_in(Axis::y) > 0 && b.degree_in(Axis::y) > 0 && a.degree_in(Axis::x) > 0 &&
                         b.degree_in(Axis::x) > 0 && !resultant(a, b, Axis::y).is_zero() &&
                         !resultant(a, b, Axis::x).is_zero();
    if (!coprime) continue;
    CHECK(gcd_poly(g * a, g * b) == primitive_normalized(g));
    ++exact;
  }
  CHECK(exact > 20);
}

TEST_CASE("primitive normalization") {
  CHECK(primitive_normalized(P("-3/2*x^2 + 3*y")) == P("x^2 - 2*y"));
  CHECK(monic(P("2*x + 4")) == P("x + 2"));
  CHECK_THROWS_AS(divide_exact(P("x"), P("y")), PreconditionViolated);
}

TEST_CASE("resultant against substitution") {
  // res_y(p, y - c(x)) = +-p(x, c(x)).
  gen::Engine rng(15);
  for (int n = 0; n < 60; ++n) {
    Poly2 p = gen::poly2(rng, 4);
    if (p.degree_in(Axis::y) < 1) continue;
    const Poly2 c = Poly2::from_poly1(gen::poly1(rng, 2), Axis::x);
    const Poly2 r = resultant(p, Poly2::y() - c, Axis::y);
    const Poly2 sub = p.compose(Poly2::x(), c);
    CHECK((r == sub || r == -sub));
  }
  CHECK(resultant(P("y^2 - x"), P("y"), Axis::y) == P("-x"));
  CHECK(resultant(P("x^2 + y^2 - 1"), P("x - y"), Axis::x) == P("2*y^2 - 1"));
  CHECK_THROWS_AS(resultant(P("x"), P("x+1"), Axis::y), DegenerateInput);
}

TEST_CASE("square-free structure") {
  CHECK(squarefree_part(P("(x-y)^2*(x+1)")) == primitive_normalized(P("(x-y)*(x+1)")));
  const auto dec = squarefree_decomposition(P("(x-y)^2*(x+1)*y^3"));
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == P("x + 1"));
  CHECK(dec[1] == primitive_normalized(P("x - y")));
  CHECK(dec[2] == P("y"));
  CHECK(content_in(P("x*y^2 + x^2*y"), Axis::y) == Poly1{0, 1});
}

TEST_CASE("four squares") {
  gen::Engine rng(16);
  for (int n = 0; n < 1000; ++n) {
    Rat c(gen::uniform(rng, 1, 999999), gen::uniform(rng, 1, 999999));
    c.canonicalize();
    const auto s = four_squares(c);
    CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == c);
    CHECK((s[0] >= s[1] && s[1] >= s[2] && s[2] >= s[3] && s[3] >= 0));
  }
  CHECK(four_squares(Rat(4))[1] == 0);
  CHECK(four_squares(Rat(7))[3] != 0);
  CHECK(four_squares(parse_rat("1/2")) == std::array<Rat, 4>{parse_rat("1/2"), parse_rat("1/2"), Rat(0), Rat(0)});
  CHECK(four_squares(Rat(3))[2] != 0);
  CHECK(four_squares(Rat(3))[3] == 0);
  CHECK_THROWS_AS(four_squares(Rat(-1)), NonPositiveScalar);
}

TEST_CASE("univariate arithmetic") {
  const Poly1 t = Poly1::variable();
  const Poly1 p = (t - Poly1::constant(1)).pow(2) * (t + Poly1::constant(2));
  CHECK(gcd(p, p.derivative()) == t - Poly1::constant(1));
  CHECK(squarefree_part(p) == (t - Poly1::constant(1)) * (t + Poly1::constant(2)));
  const auto [q, r] = divmod(p, t);
  CHECK(q * t + r == p);
  CHECK(Frac1::reduce(t * t, t * t + t).to_string() == "(t) / (t + 1)");
}

TEST_CASE("orders and lowest forms are multiplicative") {
  gen::Engine rng(17);
  for (int n = 0; n < 150; ++n) {
    const Poly2 p = gen::nonzero_poly2(rng, 4), q = gen::nonzero_poly2(rng, 4);
    // Bias the centre towards zeros of p by sometimes translating p to vanish there.
    const Point a = gen::point(rng);
    const Poly2 pa = gen::uniform(rng, 0, 1) ? p - Poly2(p.evaluate(a)) : p;
    if (pa.is_zero()) continue;
    CHECK(order_at(pa * q, a) == order_at(pa, a) + order_at(q, a));
    CHECK(homogeneous_components(pa * q, a).lowest() ==
          homogeneous_components(pa, a).lowest() * homogeneous_components(q, a).lowest());
  }
}

TEST_CASE("resultant vanishes exactly on shared factors") {
  gen::Engine rng(18);
  for (int n = 0; n < 60; ++n) {
    const Poly2 a = gen::nonzero_poly2(rng, 2), b = gen::nonzero_poly2(rng, 2);
    const bool shared = gen::uniform(rng, 0, 1) == 1;
    Poly2 g = shared ? gen::nonzero_poly2(rng, 2) : Poly2(1);
    if (shared && g.degree_in(Axis::y) < 1) g += Poly2::y();
    const Poly2 p = g * a, q = g * b;
    if (p.degree_in(Axis::y) < 1 && q.degree_in(Axis::y) < 1) continue;
    const bool common = gcd_poly(p, q).degree_in(Axis::y) > 0;
    CHECK(resultant(p, q, Axis::y).is_zero() == common);
    if (shared) CHECK(common);
  }
}
