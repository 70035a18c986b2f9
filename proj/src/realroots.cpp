#include "regulous/realroots.hpp"

#include <algorithm>

#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"

namespace regulous {

bool Interval::contains(const Rat& v) const {
  switch (kind) {
    case Kind::point:
      return v == *lo;
    case Kind::closed:
      return (!lo || *lo <= v) && (!hi || v <= *hi);
    case Kind::open:
      return (!lo || *lo < v) && (!hi || v < *hi);
  }
  return false;
}

std::string Interval::to_string() const {
  if (kind == Kind::point) return "[" + regulous::to_string(*lo) + "]";
  std::string l = lo ? regulous::to_string(*lo) : "-inf";
  std::string h = hi ? regulous::to_string(*hi) : "+inf";
  return (kind == Kind::closed ? "[" : "(") + l + ", " + h + (kind == Kind::closed ? "]" : ")");
}

namespace {

/// Divides by the positive content so that coefficients become coprime integers; sign is kept.
Poly1 positive_primitive(const Poly1& p) {
  if (p.is_zero()) return p;
  Poly1 prim = p.primitive();
  return sign(prim.leading()) == sign(p.leading()) ? prim : -prim;
}

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmSequence::SturmSequence(const Poly1& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
  seq_.push_back(squarefree_part(p).primitive());
  if (seq_.front().degree() == 0) return;
  seq_.push_back(positive_primitive(seq_.front().derivative()));
  while (seq_.back().degree() > 0) {
    Poly1 r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    if (r.is_zero()) break;
    seq_.push_back(positive_primitive(-r));
  }
}

int SturmSequence::variations_at(const Rat& t) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(sign(p.evaluate(t)));
  return count_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.sign_at_pos_inf());
  return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.sign_at_neg_inf());
  return count_variations(s);
}

unsigned SturmSequence::count(const Interval& I) const {
  const Poly1& s = squarefree();
  if (I.kind == Interval::Kind::point) return s.evaluate(*I.lo) == 0 ? 1U : 0U;
  if (I.lo && I.hi && *I.lo > *I.hi) return 0;
  const int v_lo = I.lo ? variations_at(*I.lo) : variations_at_neg_inf();
  const int v_hi = I.hi ? variations_at(*I.hi) : variations_at_pos_inf();
  int n = v_lo - v_hi;  // roots in (lo, hi]
  if (I.kind == Interval::Kind::open && I.hi && s.evaluate(*I.hi) == 0) --n;
  if (I.kind == Interval::Kind::closed && I.lo && s.evaluate(*I.lo) == 0) ++n;
  return static_cast<unsigned>(std::max(n, 0));
}

unsigned sturm_count(const Poly1& p, const Interval& I) { return SturmSequence(p).count(I); }

Rat isolation_width() { return dyadic(32); }

namespace {

RealRoot refine_with(const SturmSequence& sturm, RealRoot root, const Rat& width) {
  if (root.exact) return root;
  const Poly1& s = sturm.squarefree();
  Rat lo = *root.box.lo;
  Rat hi = *root.box.hi;
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    if (s.evaluate(mid) == 0) return RealRoot{true, mid, Interval::point(mid)};
    if (sturm.variations_at(lo) - sturm.variations_at(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  root.box = Interval::open(lo, hi);
  return root;
}

/// Searches the isolating interval for the unique rational candidate k/an, an the
/// leading coefficient of the primitive square-free part.
RealRoot settle_rational(const SturmSequence& sturm, RealRoot root) {
  const Poly1& s = sturm.squarefree();
  const Int an = abs(s.leading().get_num());
  root = refine_with(sturm, root, Rat(Int(1), an));
  if (root.exact) return root;
  Rat lo_scaled = *root.box.lo * an;
  Rat hi_scaled = *root.box.hi * an;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
  for (k += 1; Rat(k) < hi_scaled; k += 1) {
    Rat cand(k, an);
    cand.canonicalize();
    if (s.evaluate(cand) == 0) return RealRoot{true, cand, Interval::point(cand)};
  }
  return root;
}

void bisect(const SturmSequence& sturm, const Rat& a, const Rat& b, std::vector<RealRoot>& out) {
  const int n = sturm.variations_at(a) - sturm.variations_at(b);
  if (n <= 0) return;
  if (n == 1) {
    if (sturm.squarefree().evaluate(b) == 0) {
      out.push_back(RealRoot{true, b, Interval::point(b)});
    } else {
      out.push_back(settle_rational(sturm, RealRoot{false, 0, Interval::open(a, b)}));
    }
    return;
  }
  Rat mid = (a + b) / 2;
  bisect(sturm, a, mid, out);
  bisect(sturm, mid, b, out);
}

Rat root_bound(const Poly1& s) {
  Rat m = 0;
  const Rat& lc = s.leading();
  for (int k = 0; k < s.degree(); ++k) m = std::max(m, regulous::abs(s.coeff(static_cast<std::size_t>(k)) / lc));
  Rat bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const Poly1& p) {
  if (p.is_zero()) throw ZeroPolynomial("real roots of the zero polynomial");
  SturmSequence sturm(p);
  std::vector<RealRoot> out;
  if (sturm.squarefree().degree() <= 0) return out;
  const Rat b = root_bound(sturm.squarefree());
  bisect(sturm, -b, b, out);
  return out;
}

RootIsolation real_roots(const Poly1& p) {
  RootIsolation r;
  for (const auto& root : isolate_real_roots(p)) {
    if (root.exact) {
      r.rational_roots.push_back(root.value);
    } else {
      r.irrational_boxes.push_back(root.box);
    }
  }
  return r;
}

RealRoot refine_root(const Poly1& sqf, RealRoot root, const Rat& width) {
  return refine_with(SturmSequence(sqf), std::move(root), width);
}

std::string to_string(DefinitenessVerdict::Status s) {
  switch (s) {
    case DefinitenessVerdict::Status::positive_definite:
      return "positive_definite";
    case DefinitenessVerdict::Status::negative_definite:
      return "negative_definite";
    case DefinitenessVerdict::Status::indefinite:
      return "indefinite";
    case DefinitenessVerdict::Status::degenerate:
      return "degenerate";
  }
  return "?";
}

DefinitenessVerdict definiteness_of_form(const Poly2& h) {
  if (h.is_zero()) throw ZeroPolynomial("definiteness of the zero form");
  if (!h.is_homogeneous()) throw NotHomogeneous("not a homogeneous form: " + h.to_string());
  DefinitenessVerdict v;
  v.form = h;
  const auto n = static_cast<unsigned>(h.total_degree());
  // h(1, t) = sum_j c_{n-j, j} t^j.
  std::vector<Rat> g(n + 1);
  for (const auto& [e, c] : h.terms()) g[e.j] = c;
  Poly1 dehom(std::move(g));
  const unsigned vertical_mult = n - static_cast<unsigned>(dehom.degree());

  std::optional<DefinitenessWitness> odd, even;
  if (vertical_mult > 0) {
    DefinitenessWitness w{DefinitenessWitness::Kind::vertical_line, Interval{}, Poly2::x(), vertical_mult};
    (vertical_mult % 2 == 1 ? odd : even) = w;
  }
  const auto factors = squarefree_decomposition(dehom);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() <= 0) continue;
    const auto mult = static_cast<unsigned>(k + 1);
    auto roots = isolate_real_roots(factors[k]);
    if (roots.empty()) continue;
    const RealRoot& r = roots.front();
    DefinitenessWitness w;
    w.kind = DefinitenessWitness::Kind::root;
    w.root = r.box;
    w.multiplicity = mult;
    if (r.exact) w.line_factor = Poly2::y() - Poly2::x() * r.value;
    auto& slot = (mult % 2 == 1) ? odd : even;
    if (!slot) slot = w;
  }
  if (odd) {
    v.status = DefinitenessVerdict::Status::indefinite;
    v.witness = odd;
  } else if (even) {
    v.status = DefinitenessVerdict::Status::degenerate;
    v.witness = even;
  } else {
    v.status = sign(dehom.coeff(0)) > 0 ? DefinitenessVerdict::Status::positive_definite
                                        : DefinitenessVerdict::Status::negative_definite;
  }
  return v;
}

DefinitenessVerdict local_positive_definiteness(const Poly2& p, const Point& a) {
  if (p.is_zero()) throw ZeroPolynomial("local definiteness of the zero polynomial");
  Rat value = p.evaluate(a);
  if (value != 0) {
    DefinitenessVerdict v;
    v.form = Poly2(value);
    v.status = value > 0 ? DefinitenessVerdict::Status::positive_definite
                         : DefinitenessVerdict::Status::negative_definite;
    return v;
  }
  return definiteness_of_form(homogeneous_components(p, a).lowest());
}

namespace {

/// One rational strictly inside each gap of the sorted root list (size = roots + 1).
std::vector<Rat> gap_samples(const Poly1& sqf, std::vector<RealRoot>& roots) {
  std::vector<Rat> out;
  if (roots.empty()) return {Rat(0)};
  Rat first = roots.front().lower();
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), first.get_num_mpz_t(), first.get_den_mpz_t());
  out.emplace_back(f - 1);
  for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
    RealRoot& a = roots[k];
    RealRoot& b = roots[k + 1];
    while (true) {
      Rat au = a.upper();
      Rat bl = b.lower();
      if (au < bl) {
        out.push_back((au + bl) / 2);
        break;
      }
      if (au == bl && sqf.evaluate(au) != 0) {
        out.push_back(au);
        break;
      }
      // The shared endpoint is a root: shrink whichever side is an interval.
      if (!a.exact) a = refine_root(sqf, a, (a.upper() - a.lower()) / 2);
      if (!b.exact) b = refine_root(sqf, b, (b.upper() - b.lower()) / 2);
    }
  }
  Rat last = roots.back().upper();
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), last.get_num_mpz_t(), last.get_den_mpz_t());
  out.emplace_back(c + 1);
  return out;
}

struct RatRange {
  Rat lo, hi;
};

RatRange power_range(const Rat& a, const Rat& b, unsigned k) {
  Rat pa = regulous::pow(a, k);
  Rat pb = regulous::pow(b, k);
  if (k % 2 == 0 && a < 0 && b > 0) return {Rat(0), std::max(pa, pb)};
  return {std::min(pa, pb), std::max(pa, pb)};
}

RatRange mul(const RatRange& u, const RatRange& v) {
  Rat c[4] = {u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

bool box_may_vanish(const Poly2& p, const Interval& X, const Interval& Y) {
  Rat lo = 0, hi = 0;
  for (const auto& [e, c] : p.terms()) {
    RatRange r = mul(power_range(*X.lo, *X.hi, e.i), power_range(*Y.lo, *Y.hi, e.j));
    if (c > 0) {
      lo += c * r.lo;
      hi += c * r.hi;
    } else {
      lo += c * r.hi;
      hi += c * r.lo;
    }
  }
  return lo <= 0 && hi >= 0;
}

Poly1 lc_in(const Poly2& p, Axis main) { return p.coefficients_in(main).back(); }

ZeroSet2D infinite_via(Axis sample_axis, const Rat& sample, const RealRoot& root) {
  ZeroSet2D z;
  z.finite = false;
  z.infinite_witness = InfiniteWitness{sample_axis, sample, root};
  return z;
}

}  // namespace

ZeroSet2D zero_set_2d(const Poly2& q) {
  if (q.is_zero()) throw ZeroPolynomial("zero set of the zero polynomial");
  ZeroSet2D z;
  if (q.is_constant()) return z;
  Poly2 s = squarefree_part(q);

  // Line components x = c and y = c come from the contents.
  const Poly1 cx = content_in(s, Axis::y);
  if (cx.degree() > 0) {
    auto roots = isolate_real_roots(cx);
    if (!roots.empty()) return infinite_via(Axis::y, 0, roots.front());
    s = divide_exact(s, Poly2::from_poly1(cx, Axis::x));
  }
  const Poly1 cy = content_in(s, Axis::x);
  if (cy.degree() > 0) {
    auto roots = isolate_real_roots(cy);
    if (!roots.empty()) return infinite_via(Axis::x, 0, roots.front());
    s = divide_exact(s, Poly2::from_poly1(cy, Axis::y));
  }
  if (s.is_constant()) return z;

  // Critical x-values: leading coefficient in y and discriminant locus.
  const Poly2 disc_x = resultant(s, s.partial(Axis::y), Axis::y);
  Poly1 crit_x = disc_x.restrict(Axis::y, 0) * lc_in(s, Axis::y);
  const Poly1 crit_x_sqf = squarefree_part(crit_x);
  std::vector<RealRoot> xs = isolate_real_roots(crit_x_sqf);

  for (const Rat& x0 : gap_samples(crit_x_sqf, xs)) {
    Poly1 fiber = s.restrict(Axis::x, x0);
    auto roots = isolate_real_roots(fiber);
    if (!roots.empty()) return infinite_via(Axis::x, x0, roots.front());
  }

  // Finite: zeros are singular points, so their y-coordinates are roots of the x-discriminant.
  const Poly2 disc_y = resultant(s, s.partial(Axis::x), Axis::x);
  Poly1 crit_y = disc_y.restrict(Axis::x, 0) * lc_in(s, Axis::x);
  const Poly1 crit_y_sqf = squarefree_part(crit_y);
  std::vector<RealRoot> ys;
  bool ys_ready = false;

  const Rat width = isolation_width();
  for (const RealRoot& xr : xs) {
    if (xr.exact) {
      const Poly1 fiber = s.restrict(Axis::x, xr.value);
      const Poly1 fiber_sqf = squarefree_part(fiber);
      for (RealRoot yr : isolate_real_roots(fiber)) {
        if (yr.exact) {
          z.points.emplace_back(xr.value, yr.value);
        } else {
          yr = refine_root(fiber_sqf, yr, width);
          if (yr.exact) {
            z.points.emplace_back(xr.value, yr.value);
          } else {
            z.boxes.push_back(Box{Interval::point(xr.value), yr.box, true});
          }
        }
      }
      continue;
    }
    if (!ys_ready) {
      ys = isolate_real_roots(crit_y_sqf);
      for (auto& yr : ys) yr = refine_root(crit_y_sqf, yr, width);
      ys_ready = true;
    }
    RealRoot xb = refine_root(crit_x_sqf, xr, width);
    for (const RealRoot& yr : ys) {
      if (yr.exact) {
        const Poly1 row = s.restrict(Axis::y, yr.value);
        if (sturm_count(row, xb.box) >= 1) z.boxes.push_back(Box{xb.box, Interval::point(yr.value), true});
      } else if (box_may_vanish(s, xb.box, yr.box)) {
        z.boxes.push_back(Box{xb.box, yr.box, false});
      }
    }
  }
  std::sort(z.points.begin(), z.points.end());
  return z;
}

}  // namespace regulous
