#include "regulous/algebra.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "regulous/errors.hpp"

namespace regulous {

Poly2 primitive_normalized(const Poly2& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Int g = 0;
  for (const auto& [e, c] : p.terms()) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rat scale(den_lcm, g);
  scale.canonicalize();
  if (p.leading_term().second < 0) scale = -scale;
  return p * scale;
}

Poly2 monic(const Poly2& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading_term().second);
}

std::optional<Poly2> try_divide(const Poly2& p, const Poly2& d) {
  if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  Poly2 quotient;
  Poly2 rest = p;
  const auto [ed, cd] = d.leading_term();
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading_term();
    if (e.i < ed.i || e.j < ed.j) return std::nullopt;
    Poly2 t = Poly2::monomial(c / cd, e.i - ed.i, e.j - ed.j);
    quotient += t;
    rest -= t * d;
  }
  return quotient;
}

Poly2 divide_exact(const Poly2& p, const Poly2& d) {
  auto q = try_divide(p, d);
  if (!q) throw PreconditionViolated("inexact polynomial division: (" + p.to_string() + ") / (" + d.to_string() + ")");
  return *q;
}

Poly1 content_in(const Poly2& p, Axis main) {
  Poly1 g;
  for (const auto& c : p.coefficients_in(main)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

namespace {

Axis other(Axis a) { return a == Axis::x ? Axis::y : Axis::x; }

/// Divides p (viewed in `main`) by its content, which lives in the other variable.
Poly2 primitive_part_in(const Poly2& p, Axis main, const Poly1& content) {
  auto cs = p.coefficients_in(main);
  for (auto& c : cs)
    if (!c.is_zero()) c = divide_exact(c, content);
  return primitive_normalized(Poly2::from_coefficients_in(main, cs));
}

Poly2 leading_coeff_in(const Poly2& p, Axis main) {
  auto cs = p.coefficients_in(main);
  return Poly2::from_poly1(cs.back(), other(main));
}

Poly2 pseudo_remainder(Poly2 a, const Poly2& b, Axis main) {
  const int db = b.degree_in(main);
  const Poly2 lc = leading_coeff_in(b, main);
  while (!a.is_zero() && a.degree_in(main) >= db) {
    const int da = a.degree_in(main);
    Poly2 top = leading_coeff_in(a, main);
    auto shift = static_cast<unsigned>(da - db);
    Poly2 sub = (top * b).shift(main == Axis::x ? shift : 0, main == Axis::y ? shift : 0);
    a = lc * a - sub;
  }
  return a;
}

/// For polynomials primitive in y: a specialization x = x0 that keeps both leading
/// coefficients and has coprime images proves gcd(a, b) = 1.
bool coprime_by_evaluation(const Poly2& a, const Poly2& b) {
  if (a.degree_in(Axis::y) == 0 || b.degree_in(Axis::y) == 0) return true;
  const Poly1 la = a.coefficients_in(Axis::y).back();
  const Poly1 lb = b.coefficients_in(Axis::y).back();
  int tried = 0;
  for (int k = 0; k < 16 && tried < 3; ++k) {
    const Rat x0 = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k + 1) / 2);
    if (la.evaluate(x0) == 0 || lb.evaluate(x0) == 0) continue;
    ++tried;
    if (gcd(a.restrict(Axis::x, x0), b.restrict(Axis::x, x0)).degree() == 0) return true;
  }
  return false;
}

// Heuristic gcd (Char, Geddes, Gonnet): evaluate at a large integer, take the integer gcd,
// read the answer back off its xi-adic digits and keep it only if it divides both inputs.

using IVec = std::vector<Int>;  // dense, low degree first

void trim(IVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int max_norm(const IVec& v) {
  Int m = 0;
  for (const auto& c : v)
    if (abs(c) > m) m = abs(c);
  return m;
}

Int content(const IVec& v) {
  Int g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Int eval(const IVec& v, const Int& xi) {
  Int r = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) r = r * xi + *it;
  return r;
}

/// Symmetric xi-adic digits of g.
IVec digits(Int g, const Int& xi) {
  IVec out;
  const Int half = xi / 2;
  while (g != 0) {
    Int d;
    mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    out.push_back(d);
    g = (g - d) / xi;
  }
  return out;
}

bool divides(const IVec& d, IVec a) {
  if (d.empty()) return a.empty();
  const std::size_t n = d.size() - 1;
  while (!a.empty() && a.size() - 1 >= n) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), d.back().get_mpz_t())) return false;
    const Int q = a.back() / d.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) a[shift + j] -= q * d[j];
    trim(a);
  }
  return a.empty();
}

constexpr int kHeuristicTries = 6;

Int next_xi(const Int& xi) { return xi * 73794 / 27011; }

/// gcd over Z[t] including the integer content. nullopt when the heuristic gives up.
std::optional<IVec> heu_gcd_1(const IVec& a, const IVec& b) {
  const Int ca = content(a), cb = content(b);
  Int c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IVec pa = a, pb = b;
  for (auto& v : pa) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ca.get_mpz_t());
  for (auto& v : pb) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cb.get_mpz_t());
  if (pa.size() == 1 || pb.size() == 1) return IVec{c};
  Int xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < kHeuristicTries; ++attempt, xi = next_xi(xi)) {
    Int g;
    const Int ea = eval(pa, xi), eb = eval(pb, xi);
    mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    IVec G = digits(g, xi);
    if (G.empty()) continue;
    const Int cg = content(G);
    for (auto& v : G) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cg.get_mpz_t());
    if (G.back() < 0)
      for (auto& v : G) v = -v;
    if (divides(G, pa) && divides(G, pb)) {
      for (auto& v : G) v *= c;
      return G;
    }
  }
  return std::nullopt;
}

using Grid = std::vector<IVec>;  // grid[i][j] = coefficient of x^i y^j

Grid to_grid(const Poly2& p) {
  Grid g(static_cast<std::size_t>(p.degree_in(Axis::x)) + 1);
  for (const auto& [e, c] : p.terms()) {
    IVec& row = g[e.i];
    if (row.size() <= e.j) row.resize(e.j + 1, Int(0));
    row[e.j] = c.get_num();
  }
  return g;
}

Poly2 from_grid(const Grid& g) {
  Poly2 p;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j)
      if (g[i][j] != 0) p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, Rat(g[i][j]));
  return p;
}

/// Both inputs primitive with integer coefficients.
std::optional<Poly2> heu_gcd_2(const Poly2& p, const Poly2& q) {
  const Grid a = to_grid(p), b = to_grid(q);
  auto norm = [](const Grid& g) {
    Int m = 0;
    for (const auto& row : g) m = std::max(m, max_norm(row));
    return m;
  };
  Int xi = 2 * std::min(norm(a), norm(b)) + 29;
  for (int attempt = 0; attempt < kHeuristicTries; ++attempt, xi = next_xi(xi)) {
    IVec ea, eb;  // images at y = xi, polynomials in x
    for (const auto& row : a) ea.push_back(eval(row, xi));
    for (const auto& row : b) eb.push_back(eval(row, xi));
    trim(ea);
    trim(eb);
    if (ea.empty() || eb.empty()) continue;
    auto g = heu_gcd_1(ea, eb);
    if (!g) return std::nullopt;
    Grid G;
    for (const auto& c : *g) G.push_back(digits(c, xi));
    const Poly2 cand = primitive_normalized(from_grid(G));
    if (cand.is_zero()) continue;
    if (try_divide(p, cand) && try_divide(q, cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace

Poly2 gcd_poly(const Poly2& p, const Poly2& q) {
  if (p.is_zero()) return primitive_normalized(q);
  if (q.is_zero()) return primitive_normalized(p);
  const Axis main = Axis::y;
  if (p.degree_in(main) == 0 && q.degree_in(main) == 0) {
    Poly1 g = gcd(p.coefficients_in(main)[0], q.coefficients_in(main)[0]);
    return primitive_normalized(Poly2::from_poly1(g, other(main)));
  }
  const Poly1 cp = content_in(p, main);
  const Poly1 cq = content_in(q, main);
  const Poly1 c = gcd(cp, cq);
  Poly2 a = primitive_part_in(p, main, cp);
  Poly2 b = primitive_part_in(q, main, cq);
  if (coprime_by_evaluation(a, b)) return primitive_normalized(Poly2::from_poly1(c, other(main)));
  if (auto h = heu_gcd_2(a, b)) return primitive_normalized(Poly2::from_poly1(c, other(main)) * *h);
  if (a.degree_in(main) < b.degree_in(main)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(main) == 0) {
      a = Poly2(1);
      break;
    }
    Poly2 r = pseudo_remainder(a, b, main);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly2{};
    } else {
      b = primitive_part_in(r, main, content_in(r, main));
    }
  }
  return primitive_normalized(Poly2::from_poly1(c, other(main)) * a);
}

namespace {

/// Fraction-free (Bareiss) determinant over Q[t].
Poly1 bareiss_determinant(std::vector<std::vector<Poly1>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly1::constant(1);
  int sign = 1;
  Poly1 prev = Poly1::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly1{};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly1 v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(v, prev);
      }
      m[i][k] = Poly1{};
    }
    prev = m[k][k];
  }
  Poly1 det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Poly2 resultant(const Poly2& p, const Poly2& q, Axis eliminate) {
  if (p.is_zero() || q.is_zero()) return Poly2{};
  const auto pc = p.coefficients_in(eliminate);
  const auto qc = q.coefficients_in(eliminate);
  const std::size_t m = pc.size() - 1;
  const std::size_t n = qc.size() - 1;
  const Axis rest = other(eliminate);
  if (m == 0 && n == 0) throw DegenerateInput("both polynomials are constant in the eliminated variable");
  if (n == 0) return Poly2::from_poly1(qc[0].pow(static_cast<unsigned>(m)), rest);
  if (m == 0) return Poly2::from_poly1(pc[0].pow(static_cast<unsigned>(n)), rest);
  const std::size_t size = m + n;
  std::vector<std::vector<Poly1>> syl(size, std::vector<Poly1>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) syl[r][r + k] = pc[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = qc[n - k];
  return Poly2::from_poly1(bareiss_determinant(std::move(syl)), rest);
}

Poly2 squarefree_part(const Poly2& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  if (p.is_constant()) return Poly2(1);
  Poly2 g = gcd_poly(gcd_poly(p, p.partial(Axis::x)), p.partial(Axis::y));
  return primitive_normalized(divide_exact(p, g));
}

std::vector<Poly2> squarefree_decomposition(const Poly2& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
  // chain[k] keeps each irreducible factor with multiplicity max(e - k, 0).
  std::vector<Poly2> chain{primitive_normalized(p)};
  while (!chain.back().is_constant()) {
    const Poly2& c = chain.back();
    chain.push_back(gcd_poly(gcd_poly(c, c.partial(Axis::x)), c.partial(Axis::y)));
  }
  // at_least[k] = product of factors with multiplicity >= k+1.
  std::vector<Poly2> at_least;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) at_least.push_back(divide_exact(chain[k], chain[k + 1]));
  std::vector<Poly2> out;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    Poly2 next = k + 1 < at_least.size() ? at_least[k + 1] : Poly2(1);
    out.push_back(primitive_normalized(divide_exact(at_least[k], next)));
  }
  return out;
}

}  // namespace regulous
