#include "regulous/resolve.hpp"

#include <exception>

#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"

namespace regulous {

std::string to_string(ResolutionWitness::Kind k) {
  switch (k) {
    case ResolutionWitness::Kind::pole_hit:
      return "pole_hit";
    case ResolutionWitness::Kind::nonconstant_fiber:
      return "nonconstant_fiber";
    case ResolutionWitness::Kind::unsupported_coordinates:
      return "unsupported_coordinates";
    case ResolutionWitness::Kind::infinite_pole_set:
      return "infinite_pole_set";
  }
  return "?";
}

std::string to_string(ResolutionNode::Status s) {
  switch (s) {
    case ResolutionNode::Status::resolved_regular:
      return "resolved_regular";
    case ResolutionNode::Status::pole_hit:
      return "pole_hit";
    case ResolutionNode::Status::blown_up:
      return "blown_up";
    case ResolutionNode::Status::unsupported_coordinates:
      return "unsupported_coordinates";
  }
  return "?";
}

std::string to_string(Continuity::Kind k) {
  switch (k) {
    case Continuity::Kind::regular:
      return "regular";
    case Continuity::Kind::limit:
      return "limit";
    case Continuity::Kind::no_limit:
      return "no_limit";
    case Continuity::Kind::unsupported:
      return "unsupported";
  }
  return "?";
}

bool ResolutionReport::refuted() const {
  for (const auto& w : witnesses)
    if (w.kind != ResolutionWitness::Kind::unsupported_coordinates) return true;
  return false;
}

Point push_forward(const std::vector<Substitution>& composition, const Point& chart_point) {
  Point p = chart_point;
  for (auto it = composition.rbegin(); it != composition.rend(); ++it) {
    if (it->branch == Branch::first) {
      p = Point{it->center.x + p.x, it->center.y + p.x * p.y};
    } else {
      p = Point{it->center.x + p.x * p.y, it->center.y + p.y};
    }
  }
  return p;
}

namespace {

/// Divides every term by the k-th power of the given variable.
Poly2 unshift(const Poly2& p, Axis v, unsigned k) {
  if (k == 0) return p;
  Poly2 out;
  for (const auto& [e, c] : p.terms()) out.add_term(v == Axis::x ? Exponent{e.i - k, e.j} : Exponent{e.i, e.j - k}, c);
  return out;
}

unsigned min_power(const Poly2& p, Axis v) { return p.is_zero() ? 0U : static_cast<unsigned>(p.min_degree_in(v)); }

/// Pull-back of p along the branch centered at a, with the exceptional power cleared.
std::pair<Poly2, unsigned> strict_transform(const Poly2& p, const Point& a, Branch b) {
  const Poly2 u = Poly2::x();
  const Poly2 v = Poly2::y();
  Poly2 pulled = b == Branch::first ? p.compose(Poly2(a.x) + u, Poly2(a.y) + u * v)
                                    : p.compose(Poly2(a.x) + u * v, Poly2(a.y) + v);
  const Axis ex = b == Branch::first ? Axis::x : Axis::y;
  const unsigned k = min_power(pulled, ex);
  return {unshift(pulled, ex, k), k};
}

Chart make_chart(const RatFunc& g, const Point& a, Branch b, const std::vector<Substitution>& parent) {
  Chart c;
  c.composition = parent;
  c.composition.push_back(Substitution{a, b});
  auto [N, n] = strict_transform(g.num(), a, b);
  auto [D, m] = strict_transform(g.den(), a, b);
  const Axis ex = b == Branch::first ? Axis::x : Axis::y;
  if (n >= m) {
    N = N.shift(ex == Axis::x ? n - m : 0, ex == Axis::y ? n - m : 0);
  } else {
    D = D.shift(ex == Axis::x ? m - n : 0, ex == Axis::y ? m - n : 0);
  }
  c.local_fn = RatFunc::reduce(N, D);
  c.cleared_num = n;
  c.cleared_den = m;
  return c;
}

}  // namespace

std::pair<Chart, Chart> blowup_charts(const RatFunc& g, const Point& a, const std::vector<Substitution>& parent) {
  return {make_chart(g, a, Branch::first, parent), make_chart(g, a, Branch::second, parent)};
}

std::vector<ExceptionalPoint> exceptional_indeterminacies(const Chart& c) {
  using Kind = ExceptionalPoint::Kind;
  std::vector<ExceptionalPoint> out;
  const Poly2& N = c.local_fn.num();
  const Poly2& D = c.local_fn.den();
  if (c.branch() == Branch::second) {
    if (D.evaluate(0, 0) != 0) return out;
    out.push_back({N.evaluate(0, 0) == 0 ? Kind::indeterminate : Kind::pole_hit, origin(), std::nullopt});
    return out;
  }
  const Poly1 n1 = N.restrict(Axis::x, 0);
  const Poly1 d1 = D.restrict(Axis::x, 0);
  if (d1.is_zero()) {
    // The whole exceptional line is polar.
    out.push_back({Kind::pole_hit, origin(), std::nullopt});
    return out;
  }
  const Poly1 common = gcd(n1, d1);
  for (const RealRoot& r : isolate_real_roots(d1)) {
    if (r.exact) {
      out.push_back({n1.evaluate(r.value) == 0 ? Kind::indeterminate : Kind::pole_hit, Point{0, r.value}, std::nullopt});
    } else if (common.degree() > 0 && sturm_count(common, r.box) > 0) {
      out.push_back({Kind::unsupported, std::nullopt, r.box});
    } else {
      out.push_back({Kind::pole_hit, std::nullopt, r.box});
    }
  }
  return out;
}

namespace {

/// Depth-first resolution over one pole, tracking the common fiber value.
class Walker {
 public:
  Walker(const Point& pole, unsigned max_stages) : pole_(pole), max_stages_(max_stages) {}

  ResolutionNode blow(const RatFunc& g, const Point& a, unsigned depth, const std::vector<Substitution>& chart) {
    if (depth >= max_stages_)
      throw StageBudgetExceeded("more than " + std::to_string(max_stages_) + " blow-up stages at " + to_string(pole_));
    ResolutionNode node;
    node.point = a;
    node.depth = depth;
    node.chart = chart;
    node.status = ResolutionNode::Status::blown_up;
    max_depth_ = std::max(max_depth_, depth);
    auto [c1, c2] = blowup_charts(g, a, chart);

    check_line_fiber(c1);
    for (const auto& ep : exceptional_indeterminacies(c1)) handle(ep, c1, depth, node);

    auto at_origin = exceptional_indeterminacies(c2);
    if (at_origin.empty()) {
      agree(*c2.local_fn.value_at(origin()), c2, origin());
    } else {
      handle(at_origin.front(), c2, depth, node);
    }
    node.charts = {std::move(c1), std::move(c2)};
    return node;
  }

  unsigned stages() const { return max_depth_ + 1; }
  const std::optional<Rat>& fiber() const { return fiber_; }
  std::vector<ResolutionWitness>& witnesses() { return witnesses_; }
  bool unsupported() const { return unsupported_; }

 private:
  void check_line_fiber(const Chart& c) {
    const Poly1 n1 = c.local_fn.num().restrict(Axis::x, 0);
    const Poly1 d1 = c.local_fn.den().restrict(Axis::x, 0);
    if (d1.is_zero()) return;  // reported as a pole hit
    const Frac1 F = Frac1::reduce(n1, d1);
    // Sample points on the line away from roots of d1.
    std::vector<Rat> samples;
    for (int k = 0; samples.size() < 2 && k < 4 * (d1.degree() + 2); ++k) {
      Rat v = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k + 1) / 2);
      if (d1.evaluate(v) != 0) samples.push_back(v);
    }
    if (F.is_constant()) {
      agree(F.constant_value(), c, Point{0, samples.front()});
      return;
    }
    // Non-constant: find two samples with distinct values.
    Rat v0 = samples.front();
    Rat val0 = n1.evaluate(v0) / d1.evaluate(v0);
    for (int k = 1; k < 8 * (F.num.degree() + F.den.degree() + 2); ++k) {
      Rat v = v0 + k;
      if (d1.evaluate(v) == 0) continue;
      Rat val = n1.evaluate(v) / d1.evaluate(v);
      if (val != val0) {
        ResolutionWitness w;
        w.kind = ResolutionWitness::Kind::nonconstant_fiber;
        w.pole = pole_;
        w.chart = c.composition;
        w.points = {Point{0, v0}, Point{0, v}};
        w.values = {val0, val};
        w.detail = "exceptional fiber value " + F.to_string("v") + " is not constant";
        witnesses_.push_back(std::move(w));
        return;
      }
    }
  }

  void agree(const Rat& value, const Chart& c, const Point& at) {
    if (!fiber_) {
      fiber_ = value;
      fiber_chart_ = c.composition;
      fiber_point_ = at;
      return;
    }
    if (*fiber_ == value) return;
    ResolutionWitness w;
    w.kind = ResolutionWitness::Kind::nonconstant_fiber;
    w.pole = pole_;
    w.chart = c.composition;
    w.points = {push_forward(fiber_chart_, fiber_point_), push_forward(c.composition, at)};
    w.values = {*fiber_, value};
    w.detail = "exceptional fibers carry the values " + to_string(*fiber_) + " and " + to_string(value);
    witnesses_.push_back(std::move(w));
  }

  void handle(const ExceptionalPoint& ep, const Chart& c, unsigned depth, ResolutionNode& node) {
    using Kind = ExceptionalPoint::Kind;
    if (ep.kind == Kind::indeterminate) {
      node.children.push_back(blow(c.local_fn, *ep.point, depth + 1, c.composition));
      return;
    }
    ResolutionNode child;
    child.depth = depth + 1;
    child.chart = c.composition;
    child.box = ep.box;
    if (ep.point) child.point = *ep.point;
    ResolutionWitness w;
    w.pole = pole_;
    w.chart = c.composition;
    w.box = ep.box;
    if (ep.point) w.points = {*ep.point};
    if (ep.kind == Kind::pole_hit) {
      child.status = ResolutionNode::Status::pole_hit;
      w.kind = ResolutionWitness::Kind::pole_hit;
      w.detail = "the lifted function has a pole on the exceptional line";
    } else {
      child.status = ResolutionNode::Status::unsupported_coordinates;
      w.kind = ResolutionWitness::Kind::unsupported_coordinates;
      w.detail = "indeterminacy at an irrational point of the exceptional line";
      unsupported_ = true;
    }
    node.children.push_back(std::move(child));
    witnesses_.push_back(std::move(w));
  }

  Point pole_;
  unsigned max_stages_;
  unsigned max_depth_ = 0;
  std::optional<Rat> fiber_;
  std::vector<Substitution> fiber_chart_;
  Point fiber_point_;
  std::vector<ResolutionWitness> witnesses_;
  bool unsupported_ = false;
};

}  // namespace

LocalResolution resolve_at(const RatFunc& f, const Point& a, unsigned max_stages) {
  LocalResolution lr;
  if (f.den().evaluate(a) != 0) {
    lr.root.point = a;
    lr.root.status = ResolutionNode::Status::resolved_regular;
    lr.limit = *f.value_at(a);
    return lr;
  }
  Walker w(a, max_stages);
  lr.root = w.blow(f, a, 0, {});
  lr.stages = w.stages();
  lr.witnesses = std::move(w.witnesses());
  lr.unsupported = w.unsupported();
  if (lr.witnesses.empty()) lr.limit = w.fiber();
  return lr;
}

ResolutionReport resolve(const RatFunc& f, const ResolveOptions& opts) {
  ResolutionReport rep;
  PoleSet ps = poles(f);
  if (!ps.finite) {
    ResolutionWitness w;
    w.kind = ResolutionWitness::Kind::infinite_pole_set;
    if (ps.infinite_witness) {
      const auto& iw = *ps.infinite_witness;
      w.box = iw.root.box;
      w.detail = std::string("the denominator vanishes on a curve; at ") + (iw.sample_axis == Axis::x ? "x" : "y") +
                 " = " + to_string(iw.sample) + " it has a zero in " + iw.root.box.to_string();
    }
    rep.witnesses.push_back(std::move(w));
    return rep;
  }
  for (const Box& b : ps.boxes) {
    ResolutionWitness w;
    w.kind = ResolutionWitness::Kind::unsupported_coordinates;
    w.box = b.x;
    w.detail = "irrational pole in the box " + b.x.to_string() + " x " + b.y.to_string();
    rep.witnesses.push_back(std::move(w));
    rep.unsupported = true;
  }
  rep.poles = ps.points;

  const std::size_t n = ps.points.size();
  std::vector<LocalResolution> local(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (opts.parallel && n > 1)
  for (long k = 0; k < static_cast<long>(n); ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      local[i] = resolve_at(f, ps.points[i], opts.max_stages);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < n; ++i) {
    auto& lr = local[i];
    rep.stages = std::max(rep.stages, lr.stages);
    if (lr.limit) rep.pole_limits.emplace(ps.points[i], *lr.limit);
    if (lr.unsupported) rep.unsupported = true;
    for (auto& w : lr.witnesses) rep.witnesses.push_back(std::move(w));
    rep.tree.push_back(std::move(lr.root));
  }
  rep.regulous = rep.witnesses.empty() && !rep.unsupported;
  if (!rep.regulous) rep.pole_limits.clear();
  return rep;
}

std::optional<bool> is_isolated_zero(const Poly2& p_in, const Point& a, unsigned max_depth) {
  if (p_in.evaluate(a) != 0) return true;
  // Same zero set, but repeated factors would reproduce themselves under blow-up forever.
  const Poly2 p = squarefree_part(p_in);
  if (max_depth == 0) throw StageBudgetExceeded("isolation test did not terminate at " + to_string(a));
  const HomogDecomp H = homogeneous_components(p, a);
  if (H.order == 1) return false;
  const DefinitenessVerdict v = definiteness_of_form(H.lowest());
  if (v.definite()) return true;
  if (v.status == DefinitenessVerdict::Status::indefinite) return false;

  const Poly2 P = translate(p, a);
  bool undecided = false;
  const auto [P1, n1] = strict_transform(P, origin(), Branch::first);
  for (const RealRoot& r : isolate_real_roots(P1.restrict(Axis::x, 0))) {
    if (!r.exact) {
      undecided = true;
      continue;
    }
    auto sub = is_isolated_zero(P1, Point{0, r.value}, max_depth - 1);
    if (sub && !*sub) return false;
    if (!sub) undecided = true;
  }
  const auto [P2, n2] = strict_transform(P, origin(), Branch::second);
  auto sub = is_isolated_zero(P2, origin(), max_depth - 1);
  if (sub && !*sub) return false;
  if (!sub) undecided = true;
  if (undecided) return std::nullopt;
  return true;
}

Continuity continuity_at(const RatFunc& g, const Point& a, bool known_isolated) {
  Continuity c;
  const Rat d = g.den().evaluate(a);
  if (d != 0) {
    c.kind = Continuity::Kind::regular;
    c.value = g.num().evaluate(a) / d;
    return c;
  }
  if (!known_isolated && !zero_set_2d(g.den()).finite) {
    auto iso = is_isolated_zero(g.den(), a);
    if (!iso) {
      c.kind = Continuity::Kind::unsupported;
      return c;
    }
    if (!*iso) throw NonIsolatedPole(to_string(a) + " lies on a curve of poles");
  }
  LocalResolution lr = resolve_at(g, a);
  for (auto& w : lr.witnesses) {
    if (w.kind == ResolutionWitness::Kind::unsupported_coordinates) continue;
    c.kind = Continuity::Kind::no_limit;
    c.witness = std::move(w);
    return c;
  }
  if (lr.unsupported) {
    c.kind = Continuity::Kind::unsupported;
    c.witness = lr.witnesses.front();
    c.box = c.witness->box;
    return c;
  }
  c.kind = Continuity::Kind::limit;
  c.value = *lr.limit;
  return c;
}

OneBlowupVerdict one_blowup_criterion(const RatFunc& f) {
  OneBlowupVerdict v;
  PoleSet ps = poles(f);
  if (!ps.finite) throw NonIsolatedPole("the pole set is infinite");
  if (!ps.complete) throw Unsupported("irrational poles");
  for (const Point& a : ps.points) {
    auto verdict = local_positive_definiteness(f.den(), a);
    if (!verdict.definite()) v.holds = false;
    v.per_pole.emplace(a, std::move(verdict));
  }
  return v;
}

}  // namespace regulous
