#include "regulous/corpus.hpp"

namespace regulous {

namespace {

const Point O{0, 0};

CorpusEntry regulous_entry(std::string name, std::string expr, unsigned stages, std::vector<Point> poles,
                           std::vector<Rat> limits, bool one_blowup, unsigned k_max, unsigned mvk) {
  CorpusEntry e;
  e.name = std::move(name);
  e.expr = std::move(expr);
  e.stages = stages;
  for (std::size_t k = 0; k < poles.size(); ++k) e.limits.emplace(poles[k], limits[k]);
  e.poles = std::move(poles);
  e.one_blowup = one_blowup;
  e.k_max = k_max;
  e.max_verified_k = mvk;
  return e;
}

CorpusEntry control(std::string name, std::string expr, unsigned stages, std::vector<Point> poles, bool one_blowup) {
  CorpusEntry e;
  e.name = std::move(name);
  e.expr = std::move(expr);
  e.regulous = false;
  e.stages = stages;
  e.poles = std::move(poles);
  e.one_blowup = one_blowup;
  return e;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      regulous_entry("cubic-over-circle", "x^3/(x^2+y^2)", 1, {O}, {0}, true, 2, 0),
      regulous_entry("two-poles", "x^3*(x-1)^3/((x^2+y^2)*((x-1)^2+y^2))", 1, {O, {1, 0}}, {0, 0}, true, 2, 0),
      regulous_entry("cubic-over-quartic", "x^3/(x^2+y^4)", 2, {O}, {0}, false, 2, 0),
      regulous_entry("arc-unbounded-derivative", "y*x^2/(x^2+y^4)", 2, {O}, {0}, false, 2, 0),
      regulous_entry("arc-limit-half", "y^2*x^2/(x^2+y^4)", 2, {O}, {0}, false, 2, 0),
      regulous_entry("topology-1-3", "1 - x^5/(y^2+x^2)", 1, {O}, {1}, true, 2, 2),
      regulous_entry("topology-2-5", "1 - x^9/(y^2+x^4)", 2, {O}, {1}, false, 2, 2),
      regulous_entry("topology-3-3", "1 - x^9/(y^2+x^6)", 3, {O}, {1}, false, 2, 0),
      regulous_entry("sixth-over-circle-squared", "x^6/(x^2+y^2)^2", 1, {O}, {0}, true, 2, 1),
      regulous_entry("worked-example", "((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)", 1, {O}, {2}, true, 2, 0),
      regulous_entry("quartic-over-circle", "x^4/(x^2+y^2)", 1, {O}, {0}, true, 2, 1),
      regulous_entry("polynomial", "x+y", 0, {}, {}, true, 2, 2),
      regulous_entry("fifth-over-quartic", "x^5/(x^4+y^2)", 2, {O}, {0}, false, 2, 0),
      regulous_entry("nonzero-limit", "3 - x^4*y/(x^4+y^4)", 1, {O}, {3}, true, 2, 0),
      regulous_entry("quintic-over-quartic", "x^4*y/(x^4+y^2)", 2, {O}, {0}, false, 2, 0),
      regulous_entry("mixed-poles", "x^3/(x^2+y^2) + (x-1)^3/((x-1)^2+y^4)", 2, {O, {1, 0}}, {-1, 1}, false, 2, 0),
      control("direction-dependent", "x*y/(x^2+y^2)", 1, {O}, true),
      control("inverse-circle", "1/(x^2+y^2)", 1, {O}, true),
      control("pole-line", "(x+y)/x", 0, {}, false),
      control("inverse-quartic", "1/(x^2+y^4)", 1, {O}, false),
      control("square-over-quartic", "x^2/(x^2+y^4)", 2, {O}, false),
  };
  return entries;
}

const std::vector<CertifyFixture>& certify_fixtures() {
  static const std::vector<CertifyFixture> fixtures = {
      {"worked-example", "((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)", 8, 1, ""},
      {"flat", "x^6/(x^2+y^2)^2", 1, 0, ""},
      {"two-bad-points", "((x^2-x+y^2)^2 + y^2 + (x*y*(x-1))^2)/((x^2-x+y^2)^2+y^2)", 5, 2, ""},
      {"sign-changing", "x^3*(x-1)^3/((x^2+y^2)*((x-1)^2+y^2))", std::nullopt, 0, "NegativeValueDetected"},
  };
  return fixtures;
}

}  // namespace regulous
