#include "regulous/classify.hpp"

#include <limits>

#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"

namespace regulous {

namespace {

/// All partials of order j + 1 from those of order j; entry i is d^j / dx^i dy^(j-i).
std::vector<RatFunc> next_level(const std::vector<RatFunc>& level) {
  std::vector<RatFunc> out;
  out.reserve(level.size() + 1);
  out.push_back(derivative_rf(level.front(), Axis::y));
  for (const auto& g : level) out.push_back(derivative_rf(g, Axis::x));
  return out;
}

}  // namespace

ClassificationReport regularity_class(const RatFunc& f, unsigned k_max, const ResolveOptions& opts) {
  ClassificationReport rep;
  rep.k_max = k_max;
  ResolutionReport res = resolve(f, opts);
  rep.stages = res.stages;
  rep.regulous = res.regulous;
  rep.unsupported = res.undecided();
  rep.witnesses = res.witnesses;
  for (const auto& w : res.witnesses)
    if (w.kind == ResolutionWitness::Kind::infinite_pole_set) rep.is_rational_with_finite_poles = false;
  if (!rep.regulous) return rep;

  for (const Point& a : res.poles) {
    PoleClassification pc;
    pc.point = a;
    pc.limit = res.pole_limits.at(a);
    pc.definiteness = local_positive_definiteness(f.den(), a);
    rep.per_pole.push_back(std::move(pc));
  }

  unsigned verified = 0;
  bool failed = false;
  std::vector<RatFunc> level{f};
  for (unsigned j = 1; j <= k_max && !failed && !rep.unsupported; ++j) {
    if (rep.per_pole.empty()) break;  // regular everywhere
    level = next_level(level);
    for (unsigned i = 0; i < level.size() && !failed && !rep.unsupported; ++i) {
      for (auto& pc : rep.per_pole) {
        Continuity c = continuity_at(level[i], pc.point, true);
        if (c.kind == Continuity::Kind::no_limit) {
          pc.first_failing_order = j;
          pc.failing_partial = std::make_pair(i, j - i);
          pc.failure = std::move(c);
          failed = true;
          break;
        }
        if (c.kind == Continuity::Kind::unsupported) {
          rep.unsupported = true;
          break;
        }
      }
    }
    if (!failed && !rep.unsupported) verified = j;
  }
  if (rep.per_pole.empty()) verified = k_max;
  if (!rep.unsupported) {
    rep.max_verified_k = verified;
    rep.budget_exhausted = !failed;
  }
  return rep;
}

namespace {

/// Smallest order of num at zeros of f inside dom(f); nullopt when num has no such zeros.
std::optional<unsigned> min_order_on_domain_zeros(const RatFunc& f) {
  if (f.num().is_constant()) return std::nullopt;
  std::optional<unsigned> best;
  auto consider = [&best](unsigned o) {
    if (!best || o < *best) best = o;
  };
  const auto factors = squarefree_decomposition(f.num());
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    const Poly2& s = factors[idx];
    if (s.is_constant()) continue;
    const auto e = static_cast<unsigned>(idx + 1);
    ZeroSet2D z = zero_set_2d(s);
    if (!z.finite) {
      // Smooth points of a curve component are dense in it and avoid the finitely many poles.
      consider(e);
      continue;
    }
    if (!z.boxes.empty()) throw Unsupported("irrational zero of the numerator factor " + s.to_string());
    for (const Point& p : z.points) {
      if (f.den().evaluate(p) == 0) continue;
      consider(order_at(f.num(), p));
    }
  }
  return best;
}

}  // namespace

bool verify_k_flat(const RatFunc& f, unsigned m, unsigned k) {
  // f^0 = 1 has no zeros; a nonzero constant has none either and the zero function is flat.
  if (m == 0 || f.is_constant()) return true;
  if (auto ord = min_order_on_domain_zeros(f); ord && static_cast<unsigned long>(m) * *ord < k + 1UL) return false;

  PoleSet ps = poles(f);
  if (!ps.finite) throw NonIsolatedPole("the pole set is infinite");
  if (!ps.complete) throw Unsupported("irrational poles");
  const RatFunc g = f.pow(m);
  for (const Point& a : ps.points) {
    Continuity c = continuity_at(f, a, true);
    if (c.kind == Continuity::Kind::unsupported) throw Unsupported("continuity undecided at " + to_string(a));
    if (c.kind != Continuity::Kind::limit) return false;
    if (c.value != 0) continue;  // not a zero of f
    std::vector<RatFunc> level{g};
    for (unsigned j = 0; j <= k; ++j) {
      if (j > 0) level = next_level(level);
      for (const auto& h : level) {
        Continuity ch = continuity_at(h, a, true);
        if (ch.kind == Continuity::Kind::unsupported) throw Unsupported("continuity undecided at " + to_string(a));
        if (ch.kind != Continuity::Kind::limit && ch.kind != Continuity::Kind::regular) return false;
        if (ch.value != 0) return false;
      }
    }
  }
  return true;
}

unsigned flat_power(const RatFunc& f, unsigned k, unsigned budget) {
  ResolutionReport res = resolve(f);
  if (!res.regulous) throw PreconditionViolated("flat_power needs a regulous function");
  if (k >= 1 && !res.poles.empty() && one_blowup_criterion(f).holds) return 2 * k;
  for (unsigned m = 1; m <= budget; ++m)
    if (verify_k_flat(f, m, k)) return m;
  throw BudgetExhausted("no flattening power up to " + std::to_string(budget));
}

}  // namespace regulous
