#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace regulous {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "n", "-n" or "n/d" into a canonical rational.
Rat parse_rat(std::string_view text);

/// Always "num/den", even for integers. Used by the structured file formats.
std::string to_fraction_string(const Rat& r);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& r);

int sign(const Rat& r);
Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);

/// 2^-k as an exact rational.
Rat dyadic(unsigned k);

struct Point {
  Rat x;
  Rat y;

  Point() = default;
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline Point origin() { return Point{0, 0}; }

std::string to_string(const Point& p);

}  // namespace regulous
