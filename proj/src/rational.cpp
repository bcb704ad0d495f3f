#include "matroidwb/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace matroidwb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+')) {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  return Rational(x);
}

Rational rationalize(double x, long max_denominator) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  if (max_denominator < 1) max_denominator = 1;
  const bool negative = x < 0;
  double v = std::fabs(x);
  // Convergents h/k of the continued fraction of v.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(v));
  mpz_class k_prev = 0, k = 1;
  double frac = v - std::floor(v);
  Rational best(h, k);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const double a_d = std::floor(inv);
    if (a_d > 1e12) break;
    const long a = static_cast<long>(a_d);
    frac = inv - a_d;
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      // Best semiconvergent within the bound.
      const mpz_class t = (mpz_class(max_denominator) - k_prev) / k;
      if (t > 0) {
        Rational semi(t * h + h_prev, t * k + k_prev);
        semi.canonicalize();
        const Rational target = exact_rational(v);
        if (abs(semi - target) < abs(best - target)) best = semi;
      }
      break;
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = Rational(h, k);
    best.canonicalize();
  }
  return negative ? Rational(-best) : best;
}

}  // namespace matroidwb
