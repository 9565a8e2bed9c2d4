#ifndef LGORB_CYCLO_HPP
#define LGORB_CYCLO_HPP

#include <array>
#include <string>

#include "lgorb/rational.hpp"

namespace lgorb {

/// Element of the cyclotomic field Q(zeta_12), stored as
/// c0 + c1*w + c2*w^2 + c3*w^3 where w is a fixed primitive 12th root of
/// unity with minimal polynomial w^4 - w^2 + 1. All the constants used by
/// the built-in cases embed here: zeta_3 = w^4, i = w^3, zeta_6 = w^2,
/// sqrt(3)*i = 2*w^2 - 1.
class Cyclo {
public:
  Cyclo() : c_{} {}
  Cyclo(const Rational& c0) : c_{} { c_[0] = c0; }
  Cyclo(long n) : c_{} { c_[0] = Rational(n); }
  explicit Cyclo(std::array<Rational, 4> c) : c_(std::move(c)) {}

  /// w^k for any integer k (k reduced mod 12).
  static Cyclo zeta(int k);
  /// e^{2*pi*i*power/order}; order must divide 12.
  static Cyclo root_of_unity(int order, int power);
  static Cyclo i() { return zeta(3); }
  static Cyclo sqrt3_i();  // 2*w^2 - 1

  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational part; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo inverse() const;  // throws DivisionByZeroError on zero
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }
  Cyclo pow(long e) const;

  bool operator==(const Cyclo& o) const { return c_ == o.c_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  /// Total order (coefficientwise), used for deterministic printing only.
  bool operator<(const Cyclo& o) const;

  /// "1/2 + 3*w^2" style; "0" for zero.
  std::string to_string() const;
  /// True when to_string() needs parentheses inside a product.
  bool needs_parens() const;

private:
  std::array<Rational, 4> c_;
};

}  // namespace lgorb

#endif
