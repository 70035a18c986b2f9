#include "regulous/rat.hpp"

#include "regulous/errors.hpp"

namespace regulous {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw FormatError("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw FormatError("zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rat& r) { return r.get_str(); }

int sign(const Rat& r) { return sgn(r); }

Rat abs(const Rat& r) { return ::abs(r); }

Rat pow(const Rat& base, unsigned exponent) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat dyadic(unsigned k) {
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rat(Int(1), den);
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace regulous
