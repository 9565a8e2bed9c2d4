#ifndef LGORB_QSERIES_HPP
#define LGORB_QSERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "lgorb/rational.hpp"

namespace lgorb {

/// Truncated formal power series in q over Q: coefficients for exponents
/// 0..N, everything above N discarded.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int truncation_order);

  int truncation_order() const { return order_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int exponent) const;
  void add_coeff(int exponent, const Rational& c);  // ignores exponents > N
  bool is_zero() const { return coeffs_.empty(); }

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& c) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  /// Monomial c*q^e as a series.
  static TruncatedSeries monomial(int order, int exponent, const Rational& c);

  std::string to_string() const;

private:
  int order_;
  std::map<int, Rational> coeffs_;
};

/// q * d/dq: coefficient of q^n multiplied by n.
TruncatedSeries q_d_dq(const TruncatedSeries& a);

/// d/dq (loses one order of precision at the top; exponents shift down).
TruncatedSeries d_dq(const TruncatedSeries& a);

enum class ThetaSeries { kPhi, kPsi, kC333, kA244, kB244 };

std::optional<ThetaSeries> theta_series_by_name(const std::string& name);

/// The coefficient series of the three mirror superpotentials, truncated
/// at order N. Summation bounds follow from the quadratic exponents.
TruncatedSeries theta_series(ThetaSeries which, int order);

enum class SeriesCase { kZ3, kZ4 };

struct SeriesIdentityReport {
  bool holds = false;
  int order = 0;                       // order up to which it was checked
  std::optional<int> first_mismatch;   // exponent of first differing coeff
  Rational lhs_coeff, rhs_coeff;       // at the mismatch
};

/// Checks the denominator-cleared power-series identity for the given case
/// up to order N. Failure is reported, not thrown.
SeriesIdentityReport verify_series_identity(SeriesCase which, int order);

/// Same check with caller-supplied series (used to exercise the mismatch
/// reporting path with mutated inputs).
SeriesIdentityReport verify_series_identity_z3(const TruncatedSeries& phi,
                                               const TruncatedSeries& psi,
                                               const TruncatedSeries& c333);
SeriesIdentityReport verify_series_identity_z4(const TruncatedSeries& a,
                                               const TruncatedSeries& b);

}  // namespace lgorb

#endif
