#include "lgorb/qseries.hpp"

#include <sstream>

#include "lgorb/error.hpp"

namespace lgorb {

TruncatedSeries::TruncatedSeries(int truncation_order)
    : order_(truncation_order) {
  if (order_ < 1) throw Error("truncation order must be positive");
}

Rational TruncatedSeries::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_coeff(int exponent, const Rational& c) {
  if (exponent < 0) throw Error("negative exponent in power series");
  if (exponent > order_ || c == 0) return;
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    coeffs_[exponent] = c;
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation_order() != b.truncation_order())
    throw Error("mismatched truncation orders: " +
                std::to_string(a.truncation_order()) + " vs " +
                std::to_string(b.truncation_order()));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_orders(*this, o);
  TruncatedSeries r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_orders(*this, o);
  TruncatedSeries r(order_);
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      if (ea + eb > order_) break;  // eb ascending
      r.add_coeff(ea + eb, ca * cb);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  TruncatedSeries r(order_);
  if (c == 0) return r;
  for (const auto& [e, a] : coeffs_) r.coeffs_[e] = a * c;
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  check_orders(*this, o);
  return coeffs_ == o.coeffs_;
}

TruncatedSeries TruncatedSeries::monomial(int order, int exponent,
                                          const Rational& c) {
  TruncatedSeries r(order);
  r.add_coeff(exponent, c);
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out << lgorb::to_string(a);
    } else {
      if (a != 1) out << lgorb::to_string(a) << "*";
      out << "q";
      if (e > 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  out << " + O(q^" << order_ + 1 << ")";
  return out.str();
}

TruncatedSeries q_d_dq(const TruncatedSeries& a) {
  TruncatedSeries r(a.truncation_order());
  for (const auto& [e, c] : a.coeffs()) r.add_coeff(e, c * e);
  return r;
}

TruncatedSeries d_dq(const TruncatedSeries& a) {
  TruncatedSeries r(a.truncation_order());
  for (const auto& [e, c] : a.coeffs())
    if (e > 0) r.add_coeff(e - 1, c * e);
  return r;
}

std::optional<ThetaSeries> theta_series_by_name(const std::string& name) {
  if (name == "phi") return ThetaSeries::kPhi;
  if (name == "psi") return ThetaSeries::kPsi;
  if (name == "c333") return ThetaSeries::kC333;
  if (name == "a244") return ThetaSeries::kA244;
  if (name == "b244") return ThetaSeries::kB244;
  return std::nullopt;
}

namespace {

// Sums term(k) over all integers k with exponent(k) <= N, walking outward
// from 0 in both directions. Exponents are quadratic in k, so each
// direction terminates.
template <typename Exp, typename Coef>
void sum_over_z(TruncatedSeries& s, Exp exponent, Coef coefficient) {
  const int n = s.truncation_order();
  for (int k = 0;; ++k) {
    long e = exponent(k);
    if (e > n) break;
    s.add_coeff(static_cast<int>(e), coefficient(k));
  }
  for (int k = -1;; --k) {
    long e = exponent(k);
    if (e > n) break;
    s.add_coeff(static_cast<int>(e), coefficient(k));
  }
}

Rational sign_pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

TruncatedSeries theta_series(ThetaSeries which, int order) {
  TruncatedSeries s(order);
  const long n = order;
  switch (which) {
    case ThetaSeries::kPhi:
      sum_over_z(
          s, [](long k) { return (6 * k + 3) * (6 * k + 3); },
          [](long k) -> Rational {
            return sign_pow(k + 1) * Rational(2 * k + 1, 2);
          });
      break;
    case ThetaSeries::kPsi:
      sum_over_z(
          s, [](long k) { return (6 * k + 1) * (6 * k + 1); },
          [](long k) -> Rational {
            return sign_pow(k + 1) * Rational(6 * k + 1);
          });
      break;
    case ThetaSeries::kC333:
      sum_over_z(
          s, [](long k) { return (6 * k + 1) * (6 * k + 1); },
          [](long k) { return sign_pow(k); });
      break;
    case ThetaSeries::kA244:
      for (long r = 0; 16 * (2 * r + 1) * (2 * r + 1) - 4 <= n; ++r)
        s.add_coeff(static_cast<int>(16 * (2 * r + 1) * (2 * r + 1) - 4),
                    Rational(2 * r + 1));
      for (long r = 0; 16 * (2 * r + 1) * (2 * r + 3) - 4 <= n; ++r)
        for (long t = r + 1; 16 * (2 * r + 1) * (2 * t + 1) - 4 <= n; ++t)
          s.add_coeff(static_cast<int>(16 * (2 * r + 1) * (2 * t + 1) - 4),
                      Rational(2 * r + 2 * t + 2));
      break;
    case ThetaSeries::kB244:
      for (long r = 1; 16 * (2 * r - 1) * 2 - 4 <= n; ++r)
        for (long t = 1; 16 * (2 * r - 1) * 2 * t - 4 <= n; ++t)
          s.add_coeff(static_cast<int>(16 * (2 * r - 1) * 2 * t - 4),
                      Rational(-(4 * r + 4 * t - 2)));
      for (long r = 1; 64 * r - 4 <= n; ++r)
        for (long t = 1; 64 * r * t - 4 <= n; ++t)
          s.add_coeff(static_cast<int>(64 * r * t - 4), Rational(2 * r + 2 * t));
      break;
  }
  return s;
}

namespace {

SeriesIdentityReport compare_series(const TruncatedSeries& lhs,
                                    const TruncatedSeries& rhs) {
  SeriesIdentityReport rep;
  rep.order = lhs.truncation_order();
  TruncatedSeries diff = lhs - rhs;
  if (diff.is_zero()) {
    rep.holds = true;
    return rep;
  }
  int e = diff.coeffs().begin()->first;
  rep.holds = false;
  rep.first_mismatch = e;
  rep.lhs_coeff = lhs.coeff(e);
  rep.rhs_coeff = rhs.coeff(e);
  return rep;
}

}  // namespace

SeriesIdentityReport verify_series_identity_z3(const TruncatedSeries& phi,
                                               const TruncatedSeries& psi,
                                               const TruncatedSeries& c333) {
  // Denominator-cleared form of
  //   (c^2/24) q (psi/phi * phi' - psi') = -9 phi^3 + psi^3/3,
  // multiplied through by phi. q*d/dq keeps full precision.
  TruncatedSeries lhs =
      (c333 * c333) * (psi * q_d_dq(phi) - phi * q_d_dq(psi)) * Rational(1, 24);
  TruncatedSeries rhs =
      (phi * phi * phi * Rational(-9) + psi * psi * psi * Rational(1, 3)) * phi;
  return compare_series(lhs, rhs);
}

SeriesIdentityReport verify_series_identity_z4(const TruncatedSeries& a,
                                               const TruncatedSeries& b) {
  const int n = a.truncation_order();
  auto mono = [&](int e, const Rational& c) {
    return TruncatedSeries::monomial(n, e, c);
  };
  TruncatedSeries da = d_dq(a), db = d_dq(b);
  // (q^3/32)(4q^5 a + a'(q^6 - 4bq^10) + 4q^10 a b')
  //   = (q^8/2 - 4q^12 b + 8q^16 b^2 - 32 q^16 a^2) a.
  TruncatedSeries lhs =
      (mono(5, 4) * a + da * (mono(6, 1) - b * mono(10, 4)) +
       mono(10, 4) * a * db) *
      mono(3, Rational(1, 32));
  TruncatedSeries rhs = (mono(8, Rational(1, 2)) - b * mono(12, 4) +
                         b * b * mono(16, 8) - a * a * mono(16, 32)) *
                        a;
  return compare_series(lhs, rhs);
}

SeriesIdentityReport verify_series_identity(SeriesCase which, int order) {
  switch (which) {
    case SeriesCase::kZ3:
      return verify_series_identity_z3(theta_series(ThetaSeries::kPhi, order),
                                       theta_series(ThetaSeries::kPsi, order),
                                       theta_series(ThetaSeries::kC333, order));
    case SeriesCase::kZ4:
      return verify_series_identity_z4(theta_series(ThetaSeries::kA244, order),
                                       theta_series(ThetaSeries::kB244, order));
  }
  throw Error("unknown series case");
}

}  // namespace lgorb
