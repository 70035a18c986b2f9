#include <algorithm>

#include "regulous/algebra.hpp"
#include "regulous/certify.hpp"

namespace regulous {

Poly2 SosRep::expand() const {
  Poly2 s;
  for (const auto& t : terms) s += t * t;
  return s * scalar;
}

std::vector<Poly2> product_of_sos(const std::vector<Poly2>& X, const std::vector<Poly2>& Y) {
  const std::size_t n = std::max(X.size(), Y.size());
  auto at = [](const std::vector<Poly2>& v, std::size_t i) { return i < v.size() ? v[i] : Poly2{}; };
  std::vector<Poly2> out;
  Poly2 first;
  for (std::size_t i = 0; i < n; ++i) first += at(X, i) * at(Y, i);
  if (!first.is_zero()) out.push_back(first);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly2 t = at(X, i) * at(Y, j) - at(X, j) * at(Y, i);
      if (!t.is_zero()) out.push_back(std::move(t));
    }
  return out;
}

std::vector<Poly2> scalar_absorb(const SosRep& rep) {
  const auto parts = four_squares(rep.scalar);
  std::vector<Poly2> out;
  for (const Rat& c : parts) {
    if (c == 0) continue;
    for (const auto& t : rep.terms)
      if (!t.is_zero()) out.push_back(t * c);
  }
  return out;
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  Rat s(n, d);
  s.canonicalize();
  return s;
}

}  // namespace

SosRep sos_from_weighted(const std::vector<std::pair<Rat, Poly2>>& parts) {
  SosRep rep;
  if (parts.empty()) return rep;
  const Rat w0 = parts.front().first;
  std::vector<Poly2> scaled;
  bool common = true;
  for (const auto& [w, g] : parts) {
    auto r = rational_sqrt(w / w0);
    if (!r) {
      common = false;
      break;
    }
    scaled.push_back(g * *r);
  }
  if (common) {
    if (auto r0 = rational_sqrt(w0)) {
      for (auto& g : scaled) g *= *r0;
      rep.terms = std::move(scaled);
    } else {
      rep.scalar = w0;
      rep.terms = std::move(scaled);
    }
    return rep;
  }
  for (const auto& [w, g] : parts)
    for (const Rat& c : four_squares(w))
      if (c != 0) rep.terms.push_back(g * c);
  return rep;
}

namespace {

struct IPoint {
  long i, j;
  friend bool operator<(const IPoint& a, const IPoint& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
  friend bool operator==(const IPoint& a, const IPoint& b) { return a.i == b.i && a.j == b.j; }
};

long cross(const IPoint& o, const IPoint& a, const IPoint& b) {
  return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

std::vector<IPoint> convex_hull(std::vector<IPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<IPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool in_hull(const std::vector<IPoint>& h, const IPoint& p) {
  if (h.size() == 1) return h.front() == p;
  if (h.size() == 2) {
    if (cross(h[0], h[1], p) != 0) return false;
    return std::min(h[0].i, h[1].i) <= p.i && p.i <= std::max(h[0].i, h[1].i) && std::min(h[0].j, h[1].j) <= p.j &&
           p.j <= std::max(h[0].j, h[1].j);
  }
  for (std::size_t k = 0; k < h.size(); ++k)
    if (cross(h[k], h[(k + 1) % h.size()], p) < 0) return false;
  return true;
}

std::optional<SosRep> monomial_squares(const Poly2& p) {
  std::vector<std::pair<Rat, Poly2>> parts;
  for (const auto& [e, c] : p.terms()) {
    if (c < 0 || e.i % 2 || e.j % 2) return std::nullopt;
    parts.emplace_back(c, Poly2::monomial(1, e.i / 2, e.j / 2));
  }
  return sos_from_weighted(parts);
}

std::optional<SosRep> gram_witness(const Poly2& p) {
  std::vector<IPoint> support;
  long max_i = 0, max_j = 0;
  for (const auto& [e, c] : p.terms()) {
    support.push_back({static_cast<long>(e.i), static_cast<long>(e.j)});
    max_i = std::max(max_i, static_cast<long>(e.i));
    max_j = std::max(max_j, static_cast<long>(e.j));
  }
  const auto hull = convex_hull(support);
  // Half basis in canonical term order.
  Poly2 basis_poly;
  for (long i = 0; 2 * i <= max_i; ++i)
    for (long j = 0; 2 * j <= max_j; ++j)
      if (in_hull(hull, {2 * i, 2 * j})) basis_poly.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, 1);
  std::vector<Exponent> basis;
  for (const auto& [e, c] : basis_poly.terms()) basis.push_back(e);
  const std::size_t n = basis.size();
  if (n == 0) return std::nullopt;

  // Distribute each coefficient: onto the diagonal when it is a square exponent, else evenly
  // over the off-diagonal pairs.
  std::vector<std::vector<Rat>> G(n, std::vector<Rat>(n, Rat(0)));
  for (const auto& [e, c] : p.terms()) {
    std::optional<std::size_t> diag;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        if (basis[a].i + basis[b].i != e.i || basis[a].j + basis[b].j != e.j) continue;
        if (a == b) {
          diag = a;
        } else {
          pairs.emplace_back(a, b);
        }
      }
    if (diag) {
      G[*diag][*diag] = c;
    } else if (!pairs.empty()) {
      const Rat share = c / (2 * static_cast<long>(pairs.size()));
      for (auto [a, b] : pairs) G[a][b] = G[b][a] = share;
    } else {
      return std::nullopt;
    }
  }

  // Exact LDL^T without pivoting.
  std::vector<std::pair<Rat, Poly2>> parts;
  for (std::size_t k = 0; k < n; ++k) {
    const Rat dk = G[k][k];
    if (dk < 0) return std::nullopt;
    if (dk == 0) {
      for (std::size_t i = k + 1; i < n; ++i)
        if (G[i][k] != 0) return std::nullopt;
      continue;
    }
    Poly2 g = Poly2::monomial(1, basis[k].i, basis[k].j);
    std::vector<Rat> l(n);
    for (std::size_t i = k + 1; i < n; ++i) {
      l[i] = G[i][k] / dk;
      if (l[i] != 0) g += Poly2::monomial(l[i], basis[i].i, basis[i].j);
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) G[i][j] -= l[i] * dk * l[j];
    parts.emplace_back(dk, std::move(g));
  }
  return sos_from_weighted(parts);
}

}  // namespace

std::optional<SosRep> find_sos_witness(const Poly2& p) {
  if (p.is_zero()) return SosRep{};
  std::optional<SosRep> rep = monomial_squares(p);
  if (!rep) rep = gram_witness(p);
  if (rep && rep->expand() == p) return rep;
  return std::nullopt;
}

}  // namespace regulous
