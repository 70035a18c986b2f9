#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regulous/poly1.hpp"
#include "regulous/poly2.hpp"

namespace regulous {

/// Interval with rational (or infinite, when nullopt) endpoints.
struct Interval {
  enum class Kind { open, closed, point };

  std::optional<Rat> lo;
  std::optional<Rat> hi;
  Kind kind = Kind::open;

  static Interval open(const Rat& a, const Rat& b) { return {a, b, Kind::open}; }
  static Interval closed(const Rat& a, const Rat& b) { return {a, b, Kind::closed}; }
  static Interval point(const Rat& a) { return {a, a, Kind::point}; }
  static Interval real_line() { return {std::nullopt, std::nullopt, Kind::open}; }
  static Interval above(const Rat& a) { return {a, std::nullopt, Kind::open}; }
  static Interval below(const Rat& b) { return {std::nullopt, b, Kind::open}; }

  bool contains(const Rat& v) const;
  std::string to_string() const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sturm sequence of the square-free part, each member scaled to a primitive integer polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly1& p);
  int variations_at(const Rat& t) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  /// Distinct real roots in I.
  unsigned count(const Interval& I) const;
  const Poly1& squarefree() const { return seq_.front(); }

 private:
  std::vector<Poly1> seq_;
};

/// Number of distinct real roots of p in I. Throws ZeroPolynomial.
unsigned sturm_count(const Poly1& p, const Interval& I);

/// A real root: exact when rational, otherwise an open isolating interval.
struct RealRoot {
  bool exact = false;
  Rat value;     // when exact
  Interval box;  // point interval when exact
  Rat lower() const { return exact ? value : *box.lo; }
  Rat upper() const { return exact ? value : *box.hi; }
};

/// All distinct real roots in increasing order. Isolating intervals have width at most
/// 1/|a_n| (a_n the leading coefficient of the primitive square-free part) and are pairwise disjoint.
std::vector<RealRoot> isolate_real_roots(const Poly1& p);

struct RootIsolation {
  std::vector<Rat> rational_roots;
  std::vector<Interval> irrational_boxes;
};
RootIsolation real_roots(const Poly1& p);

/// Shrinks an isolating open interval of a simple root of the square-free polynomial `sqf`
/// by bisection until its width is at most `width`. May return an exact root if one is hit.
RealRoot refine_root(const Poly1& sqf, RealRoot root, const Rat& width);

/// Box-refinement width used for irrational coordinates: 2^-32.
Rat isolation_width();

struct DefinitenessWitness {
  enum class Kind { vertical_line, root };
  Kind kind = Kind::root;
  /// Root of h(1, t) (point interval when rational). Unused for vertical_line.
  Interval root;
  /// Linear factor vanishing on the witnessing line: x, or y - r*x for rational r; zero otherwise.
  Poly2 line_factor;
  unsigned multiplicity = 1;
};

struct DefinitenessVerdict {
  enum class Status { positive_definite, negative_definite, indefinite, degenerate };
  Status status = Status::positive_definite;
  std::optional<DefinitenessWitness> witness;
  /// The form that was tested (lowest homogeneous component for the local variant, in local coordinates).
  Poly2 form;

  bool definite() const { return status == Status::positive_definite || status == Status::negative_definite; }
};

std::string to_string(DefinitenessVerdict::Status s);

/// Throws NotHomogeneous / ZeroPolynomial.
DefinitenessVerdict definiteness_of_form(const Poly2& h);
/// Definiteness of the lowest homogeneous component at a; order-0 points report the sign of p(a).
DefinitenessVerdict local_positive_definiteness(const Poly2& p, const Point& a);

struct Box {
  Interval x;
  Interval y;
  /// True when the box is certified to contain exactly one zero; false for candidate boxes
  /// (both coordinates irrational) that exact interval evaluation could not exclude.
  bool certain = false;
};

struct InfiniteWitness {
  /// The coordinate that was fixed at `sample`; `root` isolates a root in the other coordinate.
  Axis sample_axis = Axis::x;
  Rat sample;
  RealRoot root;
};

struct ZeroSet2D {
  bool finite = true;
  std::vector<Point> points;
  std::vector<Box> boxes;
  std::optional<InfiniteWitness> infinite_witness;

  /// Finite with every zero rational.
  bool all_rational() const { return finite && boxes.empty(); }
};

/// Decides finiteness of the real zero set of q and, when finite, locates every zero.
ZeroSet2D zero_set_2d(const Poly2& q);

}  // namespace regulous
