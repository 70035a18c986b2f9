#include <algorithm>
#include <optional>
#include <vector>

#include "regulous/algebra.hpp"
#include "regulous/errors.hpp"

namespace regulous {

namespace {

using Pair = std::pair<Int, Int>;

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

/// Not of the form 4^a (8b + 7).
bool is_sum_of_three_squares(Int n) {
  if (n == 0) return true;
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

/// p = a^2 + b^2 for a prime p = 2 or p = 1 mod 4 (Hermite-Serret via a square root of -1).
Pair prime_two_squares(const Int& p) {
  if (p == 2) return {1, 1};
  Int c = 2;
  while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) ++c;
  Int r;
  const Int e = (p - 1) / 4;
  mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  Int a = p, b = r;
  while (b * b > p) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return {b, isqrt(p - b * b)};
}

Pair gaussian_mul(const Pair& u, const Pair& v) {
  return {u.first * v.first - u.second * v.second, u.first * v.second + u.second * v.first};
}

constexpr unsigned long kTrialBound = 200000;

/// Two-square representation when the factorization of n can be completed by trial division
/// (the cofactor left over is 1 or prime). nullopt when n is not a sum of two squares or undecided.
std::optional<Pair> two_squares(Int n) {
  if (n == 0) return Pair{0, 0};
  Pair acc{1, 0};
  auto absorb_prime = [&](const Int& p, unsigned k) -> bool {
    if (p % 4 == 3) {
      if (k % 2 != 0) return false;
      Int s;
      mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), k / 2);
      acc = {acc.first * s, acc.second * s};
      return true;
    }
    const Pair g = prime_two_squares(p);
    for (unsigned i = 0; i < k; ++i) acc = gaussian_mul(acc, g);
    return true;
  };
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * Int(p) > n) break;
    unsigned k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++k;
    }
    if (k > 0 && !absorb_prime(Int(p), k)) return std::nullopt;
  }
  if (n > 1) {
    if (!is_prime(n)) return std::nullopt;
    if (!absorb_prime(n, 1)) return std::nullopt;
  }
  return Pair{abs(acc.first), abs(acc.second)};
}

/// m = a^2 + b^2 cheaply: m a prime 1 mod 4, twice such a prime, or a small case.
std::optional<Pair> cheap_two_squares(const Int& m) {
  if (m == 0) return Pair{0, 0};
  if (is_square(m)) return Pair{isqrt(m), 0};
  if (m == 2) return Pair{1, 1};
  if (m % 4 == 1 && is_prime(m)) return prime_two_squares(m);
  if (m % 8 == 2 && is_prime(m / 2)) {
    const Pair g = prime_two_squares(m / 2);
    return Pair{g.first + g.second, abs(g.first - g.second)};
  }
  return std::nullopt;
}

std::vector<Int> three_squares(const Int& n) {
  // Pull out powers of 4, solve the odd-ish part, scale back.
  Int m = n, scale = 1;
  while (m != 0 && m % 4 == 0) {
    m /= 4;
    scale *= 2;
  }
  for (Int x = isqrt(m); x >= 0; --x) {
    if (auto two = cheap_two_squares(m - x * x)) return {x * scale, two->first * scale, two->second * scale};
  }
  // Small exceptional cases: fall back to the full two-square test.
  for (Int x = isqrt(m); x >= 0; --x) {
    if (auto two = two_squares(m - x * x)) return {x * scale, two->first * scale, two->second * scale};
  }
  throw PreconditionViolated("no three-square decomposition found");  // unreachable by Legendre
}

std::vector<Int> four_squares_int(const Int& n) {
  for (Int x = isqrt(n); x >= 0; --x) {
    const Int rest = n - x * x;
    if (is_sum_of_three_squares(rest)) {
      std::vector<Int> parts = three_squares(rest);
      parts.push_back(x);
      return parts;
    }
  }
  throw PreconditionViolated("no four-square decomposition found");  // unreachable by Lagrange
}

}  // namespace

std::array<Rat, 4> four_squares(const Rat& c) {
  if (c <= 0) throw NonPositiveScalar("four_squares requires a positive rational, got " + to_string(c));
  // c = n/d = (n*d)/d^2, so decompose the integer n*d and divide by d.
  const Int d = c.get_den();
  const Int n = c.get_num() * d;
  std::vector<Int> parts;
  if (is_square(n)) {
    parts = {isqrt(n)};
  } else if (auto two = two_squares(n)) {
    parts = {two->first, two->second};
  } else if (is_sum_of_three_squares(n)) {
    parts = three_squares(n);
  } else {
    parts = four_squares_int(n);
  }
  std::sort(parts.begin(), parts.end(), [](const Int& a, const Int& b) { return a > b; });
  std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    out[k] = Rat(parts[k], d);
    out[k].canonicalize();
  }
  return out;
}

}  // namespace regulous
