#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regulous/ratfunc.hpp"
#include "regulous/resolve.hpp"

namespace regulous {

/// scalar * sum of terms^2.
struct SosRep {
  Rat scalar = 1;
  std::vector<Poly2> terms;

  Poly2 expand() const;
};

/// sum w_k g_k^2 (w_k > 0) as an SosRep: one common scalar when the weight ratios are
/// rational squares, otherwise each weight expanded into four squares.
SosRep sos_from_weighted(const std::vector<std::pair<Rat, Poly2>>& parts);

/// [sum X_i Y_i] ++ [X_i Y_j - X_j Y_i : i < j], zero terms dropped.
/// The sum of squares of the output equals (sum X_i^2)(sum Y_j^2).
std::vector<Poly2> product_of_sos(const std::vector<Poly2>& X, const std::vector<Poly2>& Y);

/// Terms L with sum L^2 = rep.scalar * sum rep.terms^2, each term scaled by the
/// components of a four-square decomposition of the scalar.
std::vector<Poly2> scalar_absorb(const SosRep& rep);

/// Best-effort exact SOS decomposition (monomial squares, then a Gram matrix on the half
/// Newton polytope). Every returned witness has been re-verified by expansion.
std::optional<SosRep> find_sos_witness(const Poly2& p);

/// Zeros b of q outside Z(d) with f(b) != 0, sorted. Throws Unsupported for irrational zeros.
std::vector<Point> bad_set(const RatFunc& f, const Poly2& q, const Poly2& d);

struct PipelineState {
  RatFunc f;
  Poly2 p;
  Poly2 q;
  Poly2 d = Poly2(1);
  SosRep p_rep;
  SosRep q_rep;
  std::vector<Point> eliminated;
  std::vector<Point> bad;
};

struct StepTrace {
  Point point;
  Rat value;  // f at the point
  unsigned order = 0;
  /// Lowest homogeneous forms at the point, in global coordinates.
  Poly2 q_lowest;
  Poly2 p_lowest;
  std::vector<Poly2> q_components;
  std::vector<Poly2> p_components;
  std::vector<Poly2> s_terms;
  std::vector<Poly2> r_terms;
  Rat alpha;
  Rat beta;
  Poly2 d;
};

/// Eliminates one bad point. Throws PreconditionViolated naming the failed hypothesis,
/// NotOneBlowup, or NegativeValueDetected.
PipelineState bad_point_step(const PipelineState& state, const Point& a, StepTrace* trace = nullptr);

struct Provenance {
  std::vector<Point> eliminated_points;
  std::vector<StepTrace> step_traces;
  Rat alpha = 1;
  Rat beta = 1;
  /// Four-square decomposition used to absorb alpha / beta.
  std::vector<Rat> absorbed;
  /// Common denominator of the terms before reduction.
  Poly2 denominator;
};

struct RatSosCertificate {
  RatFunc target;
  std::vector<RatFunc> terms;
  Provenance provenance;
};

/// Direct assembly when no bad points remain. Throws FlatnessViolated otherwise.
RatSosCertificate flat_case_certificate(const RatFunc& f, const SosRep& p_rep, const SosRep& q_rep);

/// Exact sampling of f on a 41 x 41 grid over [-2, 2]^2; throws NegativeValueDetected.
void nonnegativity_guard(const RatFunc& f);

/// The full pipeline. Throws WitnessInvalid, NotOneBlowup, NegativeValueDetected, Unsupported.
RatSosCertificate certify_nonnegative(const RatFunc& f, const SosRep& p_rep, const SosRep& q_rep);

struct TermCheck {
  std::size_t index = 0;
  bool ok = true;
  bool finite_poles = true;
  std::vector<Point> poles;
  std::vector<DefinitenessVerdict> definiteness;
  std::vector<Continuity> continuity;
  std::string detail;
};

struct VerificationReport {
  bool identity_ok = false;
  /// sum terms^2 - target, reduced; zero when the identity holds.
  RatFunc difference;
  bool membership_ok = false;
  std::vector<TermCheck> terms;

  bool ok() const { return identity_ok && membership_ok; }
};

VerificationReport verify_certificate(const RatSosCertificate& cert);

}  // namespace regulous
