#include "regulous/certify.hpp"

#include <algorithm>

#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"
#include "regulous/kernels.hpp"

namespace regulous {

namespace {

Point negate(const Point& a) { return Point{-a.x, -a.y}; }

/// Value of f at b as a continuous function.
Rat value_of(const RatFunc& f, const Point& b) {
  Continuity c = continuity_at(f, b);
  if (c.kind == Continuity::Kind::regular || c.kind == Continuity::Kind::limit) return c.value;
  if (c.kind == Continuity::Kind::unsupported) throw Unsupported("continuity undecided at " + to_string(b));
  throw PreconditionViolated("f has no limit at " + to_string(b));
}

/// c with a = c * b exactly, when one exists.
std::optional<Rat> proportionality(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) return std::nullopt;
  const auto [e, c] = b.leading_term();
  const Rat r = a.coeff(e.i, e.j) / c;
  if (a == b * r) return r;
  return std::nullopt;
}

/// Degree-k homogeneous components at a of each polynomial, in global coordinates.
std::vector<Poly2> components_at(const std::vector<Poly2>& ps, const Point& a, unsigned k) {
  std::vector<Poly2> out;
  for (const auto& p : ps) out.push_back(translate(homogeneous_components(p, a).component(k), negate(a)));
  return out;
}

}  // namespace

std::vector<Point> bad_set(const RatFunc& f, const Poly2& q, const Poly2& d) {
  ZeroSet2D z = zero_set_2d(q);
  if (!z.finite) throw Unsupported("the zero set of " + q.to_string() + " is not finite");
  if (!z.boxes.empty()) throw Unsupported("irrational zeros of " + q.to_string());
  std::vector<Point> out;
  for (const Point& b : z.points) {
    if (d.evaluate(b) == 0) continue;
    if (value_of(f, b) != 0) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PipelineState bad_point_step(const PipelineState& s, const Point& a, StepTrace* trace) {
  if (std::find(s.bad.begin(), s.bad.end(), a) == s.bad.end())
    throw PreconditionViolated(to_string(a) + " is not a bad point");
  if (s.d.evaluate(a) == 0) throw PreconditionViolated("d vanishes at " + to_string(a));

  const HomogDecomp Hq = homogeneous_components(s.q, a);
  const unsigned m = Hq.order;
  if (m % 2 != 0) throw NotOneBlowup("odd order " + std::to_string(m) + " of q at " + to_string(a));
  const DefinitenessVerdict dv = definiteness_of_form(Hq.lowest());
  if (dv.status != DefinitenessVerdict::Status::positive_definite)
    throw NotOneBlowup("q is not locally positive definite at " + to_string(a) + " (lowest form " +
                       Hq.lowest().to_string() + " is " + to_string(dv.status) + ")");
  const Poly2 q_a = translate(Hq.lowest(), negate(a));
  const Rat& beta = s.q_rep.scalar;
  const std::vector<Poly2> t = components_at(s.q_rep.terms, a, m / 2);
  if (SosRep{beta, t}.expand() != q_a)
    throw PreconditionViolated("the q-witness lowest components do not sum to the lowest form of q");

  const HomogDecomp Hp = homogeneous_components(s.p, a);
  if (Hp.order != m)
    throw PreconditionViolated("orders of p and q differ at " + to_string(a) + " (" + std::to_string(Hp.order) +
                               " vs " + std::to_string(m) + ")");
  const Poly2 p_a = translate(Hp.lowest(), negate(a));
  const auto fa = proportionality(p_a, q_a);
  if (!fa) throw PreconditionViolated("lowest forms of p and q are not proportional at " + to_string(a));
  if (*fa < 0) throw NegativeValueDetected("f(" + to_string(a) + ") = " + to_string(*fa) + " < 0");
  if (*fa == 0) throw PreconditionViolated("f vanishes at " + to_string(a));
  const Rat& alpha = s.p_rep.scalar;
  const std::vector<Poly2> tp = components_at(s.p_rep.terms, a, m / 2);
  if (SosRep{alpha, tp}.expand() != p_a)
    throw PreconditionViolated("the p-witness lowest components do not sum to the lowest form of p");

  PipelineState n;
  n.f = s.f;
  n.q_rep = SosRep{beta * beta, product_of_sos(s.q_rep.terms, t)};
  n.p_rep = SosRep{alpha * alpha / *fa, product_of_sos(s.p_rep.terms, tp)};
  n.q = s.q * q_a;
  n.p = s.p * q_a;
  n.d = s.d * q_a;
  n.eliminated = s.eliminated;
  n.eliminated.push_back(a);

  if (n.q_rep.expand() != n.q) throw PreconditionViolated("new q-terms fail the sum-of-squares identity");
  if (n.p_rep.expand() != n.p) throw PreconditionViolated("new p-terms fail the sum-of-squares identity");
  n.bad = bad_set(n.f, n.q, n.d);
  std::vector<Point> expected;
  for (const auto& b : s.bad)
    if (!(b == a)) expected.push_back(b);
  if (n.bad != expected) throw PreconditionViolated("bad set did not shrink by exactly " + to_string(a));

  if (trace) {
    trace->point = a;
    trace->value = *fa;
    trace->order = m;
    trace->q_lowest = q_a;
    trace->p_lowest = p_a;
    trace->q_components = t;
    trace->p_components = tp;
    trace->s_terms = n.q_rep.terms;
    trace->r_terms = n.p_rep.terms;
    trace->alpha = n.p_rep.scalar;
    trace->beta = n.q_rep.scalar;
    trace->d = n.d;
  }
  return n;
}

namespace {

void check_witnesses(const RatFunc& f, const SosRep& p_rep, const SosRep& q_rep) {
  if (p_rep.scalar <= 0 || q_rep.scalar <= 0) throw WitnessInvalid("witness scalars must be positive");
  const Poly2 q = q_rep.expand();
  if (q.is_zero()) throw WitnessInvalid("the q-witness expands to zero");
  if (!(RatFunc::reduce(p_rep.expand(), q) == f))
    throw WitnessInvalid("witnesses do not represent " + f.to_string());
}

/// f = (alpha/beta) * sum (R_i S_j / sum S^2)^2 with the scalar absorbed into the R-side.
RatSosCertificate assemble(const PipelineState& s, std::vector<StepTrace> traces) {
  RatSosCertificate cert;
  cert.target = s.f;
  const Rat ratio = s.p_rep.scalar / s.q_rep.scalar;
  const Poly2 sigma = SosRep{1, s.q_rep.terms}.expand();
  const std::vector<Poly2> R = scalar_absorb(SosRep{ratio, s.p_rep.terms});
  for (const auto& r : R)
    for (const auto& sj : s.q_rep.terms) {
      Poly2 num = r * sj;
      if (!num.is_zero()) cert.terms.push_back(RatFunc::reduce(num, sigma));
    }
  cert.provenance.eliminated_points = s.eliminated;
  cert.provenance.step_traces = std::move(traces);
  cert.provenance.alpha = s.p_rep.scalar;
  cert.provenance.beta = s.q_rep.scalar;
  for (const Rat& c : four_squares(ratio))
    if (c != 0) cert.provenance.absorbed.push_back(c);
  cert.provenance.denominator = sigma;
  return cert;
}

PipelineState initial_state(const RatFunc& f, const SosRep& p_rep, const SosRep& q_rep) {
  PipelineState s;
  s.f = f;
  s.p = p_rep.expand();
  s.q = q_rep.expand();
  s.p_rep = p_rep;
  s.q_rep = q_rep;
  return s;
}

void require_verified(const RatSosCertificate& cert) {
  VerificationReport v = verify_certificate(cert);
  if (!v.identity_ok) throw PreconditionViolated("assembled certificate fails the identity check");
  if (!v.membership_ok) throw NotOneBlowup("assembled certificate has a term outside the one-blow-up class");
}

}  // namespace

RatSosCertificate flat_case_certificate(const RatFunc& f, const SosRep& p_rep, const SosRep& q_rep) {
  check_witnesses(f, p_rep, q_rep);
  PipelineState s = initial_state(f, p_rep, q_rep);
  s.bad = bad_set(f, s.q, s.d);
  if (!s.bad.empty()) throw FlatnessViolated("bad point " + to_string(s.bad.front()) + " present");
  return assemble(s, {});
}

void nonnegativity_guard(const RatFunc& f) {
  const auto grid = kernels::uniform_grid(Rat(-2), Rat(1, 10), 41);
  const auto values = kernels::evaluate_grid_parallel(f, grid);
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (values[k] && *values[k] < 0)
      throw NegativeValueDetected("f" + to_string(grid[k]) + " = " + to_string(*values[k]) + " < 0");
}

RatSosCertificate certify_nonnegative(const RatFunc& f, const SosRep& p_rep, const SosRep& q_rep) {
  nonnegativity_guard(f);
  check_witnesses(f, p_rep, q_rep);

  PipelineState s = initial_state(f, p_rep, q_rep);
  ZeroSet2D z = zero_set_2d(s.q);
  if (!z.finite) throw NotOneBlowup("the zero set of the denominator witness is not finite");
  if (!z.boxes.empty()) throw Unsupported("irrational zeros of the denominator witness");
  for (const Point& a : z.points) {
    auto v = local_positive_definiteness(s.q, a);
    if (v.status != DefinitenessVerdict::Status::positive_definite)
      throw NotOneBlowup("q is not locally positive definite at " + to_string(a) + " (lowest form " +
                         v.form.to_string() + " is " + to_string(v.status) + ")");
  }
  s.bad = bad_set(f, s.q, s.d);
  std::vector<StepTrace> traces;
  while (!s.bad.empty()) {
    const Point a = s.bad.front();
    StepTrace tr;
    s = bad_point_step(s, a, &tr);
    traces.push_back(std::move(tr));
  }
  RatSosCertificate cert = assemble(s, std::move(traces));
  require_verified(cert);
  return cert;
}

VerificationReport verify_certificate(const RatSosCertificate& cert) {
  VerificationReport rep;
  // Compare over a common denominator; reduce only when the identity fails.
  Poly2 L(1);
  for (const auto& t : cert.terms) {
    if (t.den() == L) continue;
    L = L * divide_exact(t.den(), gcd_poly(L, t.den()));
  }
  Poly2 lhs;
  for (const auto& t : cert.terms) {
    const Poly2 scaled = t.num() * divide_exact(L, t.den());
    lhs += scaled * scaled;
  }
  const Poly2 residual = lhs * cert.target.den() - cert.target.num() * (L * L);
  rep.identity_ok = residual.is_zero();
  if (!rep.identity_ok) rep.difference = RatFunc::reduce(residual, L * L * cert.target.den());

  rep.terms.resize(cert.terms.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(cert.terms.size()); ++k) {
    const auto i = static_cast<std::size_t>(k);
    TermCheck& tc = rep.terms[i];
    tc.index = i;
    const RatFunc& t = cert.terms[i];
    try {
      PoleSet ps = poles(t);
      if (!ps.finite || !ps.complete) {
        tc.ok = false;
        tc.finite_poles = ps.finite;
        tc.detail = ps.finite ? "irrational poles" : "the denominator vanishes on a curve";
        continue;
      }
      tc.poles = ps.points;
      for (const Point& a : ps.points) {
        auto dv = local_positive_definiteness(t.den(), a);
        if (!dv.definite() && tc.ok) {
          tc.ok = false;
          tc.detail = "lowest form " + dv.form.to_string() + " at " + to_string(a) + " is " + to_string(dv.status);
        }
        tc.definiteness.push_back(std::move(dv));
        Continuity c = continuity_at(t, a, true);
        if (c.kind != Continuity::Kind::limit && tc.ok) {
          tc.ok = false;
          tc.detail = "no continuous extension at " + to_string(a);
        }
        tc.continuity.push_back(std::move(c));
      }
    } catch (const Error& e) {
      tc.ok = false;
      tc.detail = e.what();
    }
  }
  rep.membership_ok = std::all_of(rep.terms.begin(), rep.terms.end(), [](const TermCheck& t) { return t.ok; });
  return rep;
}

}  // namespace regulous
