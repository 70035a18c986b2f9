#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "regulous/errors.hpp"
#include "regulous/parse.hpp"
#include "regulous/realroots.hpp"

using namespace regulous;

namespace {

Poly1 linear(const Rat& r) { return Poly1{-r, 1}; }

}  // namespace

TEST_CASE("Sturm counts match planted factorizations") {
  // p = c * prod (t - r_i)^{e_i} * (t^2 + s) with s > 0: the real roots are exactly the r_i.
  gen::Engine rng(21);
  for (int n = 0; n < 500; ++n) {
    std::set<Rat> roots;
    const long k = gen::uniform(rng, 0, 5);
    for (long i = 0; i < k; ++i) roots.insert(gen::small_rat(rng, 12, 5));
    Poly1 p = Poly1::constant(gen::nonzero_rat(rng));
    for (const Rat& r : roots) p *= linear(r).pow(static_cast<unsigned>(gen::uniform(rng, 1, 3)));
    if (gen::uniform(rng, 0, 1) == 1) p *= Poly1{Rat(gen::uniform(rng, 1, 7), 3), 0, 1};
    if (p.degree() == 0) continue;

    Rat a = gen::small_rat(rng, 12, 3), b = gen::small_rat(rng, 12, 3);
    if (b < a) std::swap(a, b);
    const auto in = [&](auto pred) {
      return static_cast<unsigned>(std::count_if(roots.begin(), roots.end(), pred));
    };
    CHECK(sturm_count(p, Interval::real_line()) == roots.size());
    CHECK(sturm_count(p, Interval::closed(a, b)) == in([&](const Rat& r) { return a <= r && r <= b; }));
    if (a < b) CHECK(sturm_count(p, Interval::open(a, b)) == in([&](const Rat& r) { return a < r && r < b; }));
    CHECK(sturm_count(p, Interval::above(a)) == in([&](const Rat& r) { return r > a; }));
    CHECK(sturm_count(p, Interval::point(a)) == in([&](const Rat& r) { return r == a; }));

    const RootIsolation iso = real_roots(p);
    CHECK(iso.irrational_boxes.empty());
    CHECK(std::vector<Rat>(roots.begin(), roots.end()) == iso.rational_roots);
  }
}

TEST_CASE("irrational roots are isolated and refined") {
  const Poly1 p{-2, 0, 1};
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK_FALSE(roots[0].exact);
  CHECK(roots[0].box == Interval::open(-2, -1));
  CHECK(roots[1].box == Interval::open(1, 2));
  const RealRoot fine = refine_root(p, roots[1], isolation_width());
  CHECK(fine.upper() - fine.lower() <= isolation_width());
  CHECK(fine.lower() * fine.lower() < 2);
  CHECK(fine.upper() * fine.upper() > 2);

  // Mixed: (t^2 - 2)(2t - 1)
  const RootIsolation mixed = real_roots(p * Poly1{-1, 2});
  CHECK(mixed.rational_roots == std::vector<Rat>{Rat(1, 2)});
  CHECK(mixed.irrational_boxes.size() == 2);
  CHECK_THROWS_AS(sturm_count(Poly1{}, Interval::real_line()), ZeroPolynomial);
}

TEST_CASE("isolating intervals are disjoint and narrow") {
  gen::Engine rng(22);
  for (int n = 0; n < 100; ++n) {
    const Poly1 p = gen::poly1(rng, 6);
    if (p.degree() < 1) continue;
    const auto roots = isolate_real_roots(p);
    CHECK(roots.size() == sturm_count(p, Interval::real_line()));
    const Rat lead = squarefree_part(p).primitive().leading();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (!roots[k].exact) {
        CHECK(roots[k].upper() - roots[k].lower() <= 1 / abs(lead));
        CHECK(sturm_count(p, roots[k].box) == 1);
      }
      if (k > 0) CHECK(roots[k - 1].upper() <= roots[k].lower());
    }
  }
}

TEST_CASE("definiteness of binary forms") {
  using S = DefinitenessVerdict::Status;
  CHECK(definiteness_of_form(parse_polynomial("x^2+y^2")).status == S::positive_definite);
  CHECK(definiteness_of_form(parse_polynomial("-x^4-x^2*y^2-y^4")).status == S::negative_definite);
  CHECK(definiteness_of_form(parse_polynomial("x*y")).status == S::indefinite);
  CHECK(definiteness_of_form(parse_polynomial("x^2")).status == S::degenerate);
  CHECK(definiteness_of_form(parse_polynomial("(x-y)^2*(x^2+y^2)")).status == S::degenerate);
  CHECK(definiteness_of_form(parse_polynomial("y^3")).status == S::indefinite);
  const auto v = definiteness_of_form(parse_polynomial("x^2"));
  REQUIRE(v.witness);
  CHECK(v.witness->kind == DefinitenessWitness::Kind::vertical_line);
  CHECK(v.witness->multiplicity == 2);
  CHECK_THROWS_AS(definiteness_of_form(parse_polynomial("x^2+y")), NotHomogeneous);

  CHECK(local_positive_definiteness(parse_polynomial("x^2+y^4"), origin()).status == S::degenerate);
  CHECK(local_positive_definiteness(parse_polynomial("(x-1)^2+y^2+x^3"), Point{1, 0}).status == S::positive_definite);
  CHECK(local_positive_definiteness(parse_polynomial("x^2+y^2+1"), origin()).status == S::positive_definite);
}

TEST_CASE("planar zero sets") {
  auto z = zero_set_2d(parse_polynomial("(x^2+y^2)*((x-1)^2+y^2)"));
  CHECK(z.finite);
  CHECK(z.points == std::vector<Point>{origin(), Point{1, 0}});

  z = zero_set_2d(parse_polynomial("x^2+y^4"));
  CHECK(z.points == std::vector<Point>{origin()});

  z = zero_set_2d(parse_polynomial("x^2+y^2+1"));
  CHECK((z.finite && z.points.empty() && z.boxes.empty()));

  z = zero_set_2d(parse_polynomial("x*y"));
  CHECK_FALSE(z.finite);
  CHECK(z.infinite_witness.has_value());

  z = zero_set_2d(parse_polynomial("x^2+y^2-1"));
  CHECK_FALSE(z.finite);

  // Isolated irrational zeros at (+-sqrt 2, 0).
  z = zero_set_2d(parse_polynomial("(x^2-2)^2+y^2"));
  CHECK(z.finite);
  CHECK(z.points.empty());
  REQUIRE(z.boxes.size() == 2);
  const Box& b = z.boxes[1];
  CHECK(b.certain);
  CHECK(*b.x.lo > 0);
  CHECK(*b.x.lo * *b.x.lo < 2);
  CHECK(*b.x.hi * *b.x.hi > 2);
  CHECK(b.y == Interval::point(0));
}

TEST_CASE("zero sets of random sums of squares") {
  // (x - a)^2 + (y - b)^2 times a positive polynomial has exactly one zero.
  gen::Engine rng(23);
  for (int n = 0; n < 40; ++n) {
    const Point a = gen::point(rng);
    const Poly2 q = parse_polynomial("x^2+y^2").compose(Poly2::x() - a.x, Poly2::y() - a.y) *
                    (Poly2(1) + Poly2::x() * Poly2::x());
    const ZeroSet2D z = zero_set_2d(q);
    CHECK(z.finite);
    CHECK(z.points == std::vector<Point>{a});
  }
}

TEST_CASE("definiteness of products of forms") {
  using S = DefinitenessVerdict::Status;
  const std::vector<Poly2> definite = {parse_polynomial("x^2+y^2"), parse_polynomial("x^2+x*y+y^2"),
                                       parse_polynomial("-2*x^2-y^2"), parse_polynomial("x^4+y^4"),
                                       parse_polynomial("3*x^2-2*x*y+y^2")};
  const std::vector<Poly2> other = {parse_polynomial("x*y"), parse_polynomial("x^2-y^2"), parse_polynomial("x"),
                                    parse_polynomial("(x-y)^2"), parse_polynomial("x^3+y^3")};
  gen::Engine rng(24);
  for (int n = 0; n < 200; ++n) {
    const bool d1 = gen::uniform(rng, 0, 1), d2 = gen::uniform(rng, 0, 1);
    const Poly2& h1 = d1 ? definite[gen::uniform(rng, 0, 4)] : other[gen::uniform(rng, 0, 4)];
    const Poly2& h2 = d2 ? definite[gen::uniform(rng, 0, 4)] : other[gen::uniform(rng, 0, 4)];
    const auto v = definiteness_of_form(h1 * h2);
    CHECK(v.definite() == (d1 && d2));
    if (v.status == S::positive_definite) CHECK((h1 * h2).total_degree() % 2 == 0);
  }
}

TEST_CASE("sums of squares with a planted common zero") {
  gen::Engine rng(25);
  for (int n = 0; n < 40; ++n) {
    const Point a = gen::point(rng);
    Poly2 q;
    const long k = gen::uniform(rng, 2, 3);
    for (long i = 0; i < k; ++i) {
      Poly2 g = gen::poly2(rng, 2);
      g -= Poly2(g.evaluate(a));
      q += g * g;
    }
    if (q.is_zero()) continue;
    const ZeroSet2D z = zero_set_2d(q);
    if (!z.finite) continue;
    CHECK(std::find(z.points.begin(), z.points.end(), a) != z.points.end());
    for (const Point& p : z.points) CHECK(q.evaluate(p) == 0);
  }
}
