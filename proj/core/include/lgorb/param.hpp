#ifndef LGORB_PARAM_HPP
#define LGORB_PARAM_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lgorb/cyclo.hpp"

namespace lgorb {

/// Ordered list of formal parameter names, e.g. {phi, psi, cL} or
/// {q, a, b, cL}. Shared by every ParamPoly built over it.
class ParamRing {
public:
  explicit ParamRing(std::vector<std::string> names) : names_(std::move(names)) {}
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

private:
  std::vector<std::string> names_;
};

using ParamRingPtr = std::shared_ptr<const ParamRing>;

/// Graded-lex, largest first (so map iteration starts at the leading term).
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse polynomial in the formal parameters over Q(zeta_12).
class ParamPoly {
public:
  using TermMap = std::map<std::vector<int>, Cyclo, GrlexGreater>;

  explicit ParamPoly(ParamRingPtr ring) : ring_(std::move(ring)) {}
  static ParamPoly constant(ParamRingPtr ring, const Cyclo& c);
  static ParamPoly param(ParamRingPtr ring, int index, int exponent = 1);

  const ParamRingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero Cyclo if absent).
  Cyclo constant_value() const;

  void set_coeff(const std::vector<int>& mono, const Cyclo& c);
  Cyclo coeff(const std::vector<int>& mono) const;

  const std::vector<int>& leading_monomial() const;  // requires nonzero
  const Cyclo& leading_coeff() const;                // requires nonzero

  int degree_in(int param) const;
  int total_degree() const;
  bool depends_on(int param) const { return degree_in(param) > 0; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator*(const Cyclo& c) const;
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  ParamPoly pow(int e) const;

  bool operator==(const ParamPoly& o) const;
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  /// Quotient of an exact division; throws NonExactDivisionError otherwise.
  ParamPoly exact_div(const ParamPoly& d) const;

  std::string to_string() const;

private:
  ParamRingPtr ring_;
  TermMap terms_;
};

/// Monic (leading coefficient 1) gcd under graded-lex; gcd(0,0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Element of the fraction field of ParamPoly. Canonical form: gcd-reduced
/// with monic denominator. Equality is tested by cross-multiplication, so
/// it does not rely on normalization.
class FieldScalar {
public:
  explicit FieldScalar(ParamPoly num);
  FieldScalar(ParamPoly num, ParamPoly den);  // throws on zero denominator
  static FieldScalar zero(ParamRingPtr ring);
  static FieldScalar one(ParamRingPtr ring);
  static FieldScalar constant(ParamRingPtr ring, const Cyclo& c);
  static FieldScalar param(ParamRingPtr ring, int index, int exponent = 1);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  const ParamRingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Cyclo value; only meaningful when is_constant().
  Cyclo constant_value() const;
  bool depends_on(int param) const {
    return num_.depends_on(param) || den_.depends_on(param);
  }

  FieldScalar operator-() const;
  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }
  FieldScalar inverse() const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }
  /// Total order on canonical forms; deterministic printing/tie-breaks only.
  bool operator<(const FieldScalar& o) const;

  std::string to_string() const;
  bool needs_parens() const;

private:
  ParamPoly num_, den_;
  void normalize();
};

}  // namespace lgorb

#endif
