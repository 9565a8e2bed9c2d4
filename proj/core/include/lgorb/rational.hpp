#ifndef LGORB_RATIONAL_HPP
#define LGORB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace lgorb {

/// Arbitrary-precision rational. GMP keeps the invariants we need:
/// gcd(|num|, den) = 1 and den > 0 after canonicalize().
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace lgorb

#endif
