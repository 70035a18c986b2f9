#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "regulous/corpus.hpp"
#include "regulous/errors.hpp"
#include "regulous/parse.hpp"
#include "regulous/resolve.hpp"
#include "regulous/serialize.hpp"

using namespace regulous;

namespace {

RatFunc F(const char* s) { return parse_expression(s); }

void for_each_chart(const ResolutionNode& n, const std::function<void(const Chart&)>& fn) {
  for (const auto& c : n.charts) fn(c);
  for (const auto& child : n.children) for_each_chart(child, fn);
}

std::vector<const CorpusEntry*> one_stage_members() {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus())
    if (e.regulous && e.stages <= 1) out.push_back(&e);
  return out;
}

}  // namespace

TEST_CASE("blow-up charts of the cubic over the circle") {
  const auto [c1, c2] = blowup_charts(F("x^3/(x^2+y^2)"), origin());
  CHECK(c1.local_fn == F("x/(1+y^2)"));
  CHECK(c2.local_fn == F("x^3*y/(1+x^2)"));
  CHECK(c1.branch() == Branch::first);
  CHECK(c2.branch() == Branch::second);
  CHECK(c1.cleared_num == 3);
  CHECK(c1.cleared_den == 2);
}

TEST_CASE("two stages for the cubic over the quartic") {
  const RatFunc h = F("x^3/(x^2+y^4)");
  const auto [c1, c2] = blowup_charts(h, origin());
  CHECK(c1.local_fn == F("x/(1+x^2*y^4)"));
  CHECK(c2.local_fn == F("x^3*y/(x^2+y^2)"));
  const auto [d1, d2] = blowup_charts(c2.local_fn, origin(), c2.composition);
  CHECK(d1.local_fn == F("x^2*y/(1+y^2)"));
  CHECK(d2.local_fn == F("x^3*y^2/(x^2+1)"));
  CHECK(d2.composition.size() == 2);

  const auto ex = exceptional_indeterminacies(c2);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].kind == ExceptionalPoint::Kind::indeterminate);
  CHECK(*ex[0].point == origin());
  CHECK(exceptional_indeterminacies(c1).empty());

  const ResolutionReport r = resolve(h);
  CHECK(r.regulous);
  CHECK(r.stages == 2);
  REQUIRE(r.tree.size() == 1);
  CHECK(r.tree[0].status == ResolutionNode::Status::blown_up);
}

TEST_CASE("push forward composes substitutions") {
  const std::vector<Substitution> comp{{origin(), Branch::second}, {Point{0, 0}, Branch::first}};
  // (r, s) -> (r, r s) -> (r * r s, r s)
  const Point p = push_forward(comp, Point{2, 3});
  CHECK(p == Point{12, 6});
  const std::vector<Substitution> shifted{{Point{1, 0}, Branch::first}};
  CHECK(push_forward(shifted, Point{2, 3}) == Point{3, 6});
}

TEST_CASE("corpus stages, poles and limits") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const ResolutionReport r = resolve(F(e.expr.c_str()));
    CHECK(r.regulous == e.regulous);
    CHECK(r.stages == e.stages);
    if (e.regulous) {
      CHECK(r.poles == e.poles);
      CHECK(r.pole_limits == e.limits);
      CHECK(r.witnesses.empty());
    } else {
      CHECK(r.refuted());
    }
  }
}

TEST_CASE("witnesses for non-regulous controls") {
  using K = ResolutionWitness::Kind;
  ResolutionReport r = resolve(F("x*y/(x^2+y^2)"));
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].kind == K::nonconstant_fiber);
  REQUIRE(r.witnesses[0].values.size() == 2);
  CHECK(r.witnesses[0].values[0] != r.witnesses[0].values[1]);

  r = resolve(F("1/(x^2+y^2)"));
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].kind == K::pole_hit);

  r = resolve(F("(x+y)/x"));
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].kind == K::infinite_pole_set);

  r = resolve(F("x^2/(x^2+y^4)"));
  CHECK_FALSE(r.regulous);
  CHECK(r.stages == 2);
}

TEST_CASE("irrational poles are reported as unsupported") {
  const ResolutionReport r = resolve(F("x^3/((x^2-2)^2+y^2)"));
  CHECK_FALSE(r.regulous);
  CHECK(r.unsupported);
  CHECK(r.undecided());
}

TEST_CASE("stage budget") {
  CHECK_THROWS_AS(resolve(F("1 - x^9/(y^2+x^6)"), ResolveOptions{2, false}), StageBudgetExceeded);
  CHECK(resolve(F("1 - x^9/(y^2+x^6)"), ResolveOptions{3, false}).stages == 3);
}

TEST_CASE("chart functions agree with the root function off the exceptional locus") {
  gen::Engine rng(41);
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const RatFunc f = F(e.expr.c_str());
    const ResolutionReport r = resolve(f);
    for (const auto& root : r.tree)
      for_each_chart(root, [&](const Chart& c) {
        int compared = 0;
        for (int n = 0; n < 50; ++n) {
          const Point p = gen::point(rng);
          const Point image = push_forward(c.composition, p);
          const auto local = c.local_fn.value_at(p);
          const auto global = f.value_at(image);
          if (local && global) {
            CHECK(*local == *global);
            ++compared;
          }
        }
        CHECK(compared > 25);
      });
  }
}

TEST_CASE("one stage exactly when the denominator is locally definite") {
  for (const auto& e : corpus()) {
    if (!e.regulous) continue;
    CAPTURE(e.name);
    const RatFunc f = F(e.expr.c_str());
    const bool one = one_blowup_criterion(f).holds;
    CHECK(one == e.one_blowup);
    CHECK((resolve(f).stages <= 1) == one);
  }
  CHECK_THROWS_AS(one_blowup_criterion(F("(x+y)/x")), NonIsolatedPole);
}

TEST_CASE("one-stage functions form a ring") {
  const auto members = one_stage_members();
  REQUIRE(members.size() >= 5);
  gen::Engine rng(42);
  for (int n = 0; n < 12; ++n) {
    const auto* a = members[gen::uniform(rng, 0, static_cast<long>(members.size()) - 1)];
    const auto* b = members[gen::uniform(rng, 0, static_cast<long>(members.size()) - 1)];
    CAPTURE(a->name);
    CAPTURE(b->name);
    const RatFunc f = F(a->expr.c_str()), g = F(b->expr.c_str());
    const ResolutionReport sum = resolve(f + g), prod = resolve(f * g);
    CHECK(sum.regulous);
    CHECK(prod.regulous);
    CHECK(sum.stages <= 1);
    CHECK(prod.stages <= 1);
  }
}

TEST_CASE("isolated zeros") {
  CHECK(is_isolated_zero(parse_polynomial("x^2+y^4"), origin()) == true);
  CHECK(is_isolated_zero(parse_polynomial("x^2"), origin()) == false);
  CHECK(is_isolated_zero(parse_polynomial("x^2-y^2"), origin()) == false);
  CHECK(is_isolated_zero(parse_polynomial("y^2-x^3"), origin()) == false);
  CHECK(is_isolated_zero(parse_polynomial("(x^2+y^2)*(x-1)"), origin()) == true);
  CHECK(is_isolated_zero(parse_polynomial("(y-x^2)^2+x^6"), origin()) == true);
}

TEST_CASE("continuity at poles") {
  using K = Continuity::Kind;
  Continuity c = continuity_at(F("x^3/(x^2+y^4)"), origin());
  CHECK(c.kind == K::limit);
  CHECK(c.value == 0);
  c = continuity_at(F("x*y/(x^2+y^2)"), origin());
  CHECK(c.kind == K::no_limit);
  CHECK(c.witness.has_value());
  c = continuity_at(F("x^2+1"), Point{1, 1});
  CHECK(c.kind == K::regular);
  CHECK(c.value == 2);
  CHECK_THROWS_AS(continuity_at(F("y/x"), origin()), NonIsolatedPole);
}

TEST_CASE("parallel resolution produces identical reports") {
  for (const auto& e : corpus()) {
    const RatFunc f = F(e.expr.c_str());
    CHECK(to_json(resolve(f, {32, false}), true) == to_json(resolve(f, {32, true}), true));
  }
}
