#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regulous/ratfunc.hpp"
#include "regulous/realroots.hpp"

namespace regulous {

/// (u, v) -> (u, uv) is `first`; (u, v) -> (uv, v) is `second`.
enum class Branch { first, second };

struct Substitution {
  Point center;  // in the parent chart
  Branch branch = Branch::first;
};

/// An affine chart of an iterated blow-up.
struct Chart {
  /// Root first.
  std::vector<Substitution> composition;
  RatFunc local_fn;
  /// Powers of the exceptional coordinate cleared from the numerator and denominator.
  unsigned cleared_num = 0;
  unsigned cleared_den = 0;

  Branch branch() const { return composition.back().branch; }
};

/// Image in root coordinates of a chart point.
Point push_forward(const std::vector<Substitution>& composition, const Point& chart_point);

/// Blow-up of g at a (g given in some chart, a in the same coordinates); `parent` is that chart's composition.
std::pair<Chart, Chart> blowup_charts(const RatFunc& g, const Point& a, const std::vector<Substitution>& parent = {});

struct ExceptionalPoint {
  enum class Kind { indeterminate, pole_hit, unsupported };
  Kind kind = Kind::indeterminate;
  /// Exact chart point when rational.
  std::optional<Point> point;
  /// Isolating box for the coordinate along the exceptional line when irrational.
  std::optional<Interval> box;
};

/// Indeterminacies and poles on a chart's exceptional line. For the second chart only
/// its origin is examined; the rest of that line is seen by the first chart.
std::vector<ExceptionalPoint> exceptional_indeterminacies(const Chart& c);

struct ResolutionWitness {
  enum class Kind { pole_hit, nonconstant_fiber, unsupported_coordinates, infinite_pole_set };
  Kind kind = Kind::pole_hit;
  Point pole;
  /// Composition of the chart in which the witness lives (empty for root-level witnesses).
  std::vector<Substitution> chart;
  /// Chart points; for nonconstant_fiber these carry the two distinct values.
  std::vector<Point> points;
  std::vector<Rat> values;
  std::optional<Interval> box;
  std::string detail;
};

std::string to_string(ResolutionWitness::Kind k);

struct ResolutionNode {
  enum class Status { resolved_regular, pole_hit, blown_up, unsupported_coordinates };
  Point point;  // in the parent chart's coordinates
  unsigned depth = 0;
  Status status = Status::blown_up;
  /// Composition of the chart in which `point` lives (empty at the root).
  std::vector<Substitution> chart;
  /// The two blow-up charts when blown_up.
  std::vector<Chart> charts;
  std::vector<ResolutionNode> children;
  std::optional<Interval> box;
};

std::string to_string(ResolutionNode::Status s);

struct ResolveOptions {
  unsigned max_stages = 32;
  /// Resolve distinct poles concurrently; the merge order is fixed, so output does not change.
  bool parallel = false;
};

struct ResolutionReport {
  unsigned stages = 0;
  bool regulous = false;
  /// Some pole or infinitely near point could not be handled with rational coordinates.
  bool unsupported = false;
  std::vector<Point> poles;
  std::map<Point, Rat> pole_limits;
  std::vector<ResolutionWitness> witnesses;
  std::vector<ResolutionNode> tree;  // one root per pole

  /// True when some witness other than unsupported_coordinates settles non-regulousness.
  bool refuted() const;
  /// Neither proven regulous nor refuted.
  bool undecided() const { return !regulous && !refuted(); }
};

/// Throws StageBudgetExceeded.
ResolutionReport resolve(const RatFunc& f, const ResolveOptions& opts = {});

/// Resolution localized at one point of Z(den).
struct LocalResolution {
  ResolutionNode root;
  unsigned stages = 0;
  std::optional<Rat> limit;
  std::vector<ResolutionWitness> witnesses;
  bool unsupported = false;
};

LocalResolution resolve_at(const RatFunc& f, const Point& a, unsigned max_stages = 32);

/// Whether a is an isolated point of Z(p). nullopt when an irrational direction blocks the decision.
std::optional<bool> is_isolated_zero(const Poly2& p, const Point& a, unsigned max_depth = 32);

struct Continuity {
  enum class Kind { regular, limit, no_limit, unsupported };
  Kind kind = Kind::regular;
  Rat value;  // regular / limit
  std::optional<ResolutionWitness> witness;
  std::optional<Interval> box;
};

std::string to_string(Continuity::Kind k);

/// Throws NonIsolatedPole when a lies on a curve of Z(den). Pass known_isolated when the caller
/// has already established that a is isolated in Z(den).
Continuity continuity_at(const RatFunc& g, const Point& a, bool known_isolated = false);

struct OneBlowupVerdict {
  bool holds = true;
  std::map<Point, DefinitenessVerdict> per_pole;
};

/// den locally definite at every pole. Throws Unsupported for irrational poles and
/// NonIsolatedPole for an infinite pole set.
OneBlowupVerdict one_blowup_criterion(const RatFunc& f);

}  // namespace regulous
