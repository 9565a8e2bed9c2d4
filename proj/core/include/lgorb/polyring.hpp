#ifndef LGORB_POLYRING_HPP
#define LGORB_POLYRING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lgorb/param.hpp"

namespace lgorb {

/// Ring descriptor for k[x_1..x_n, x_1'..x_n'] over FieldScalar.
/// Slots 0..n-1 are the unprimed variables, n..2n-1 their primed copies.
class PolyRing {
public:
  PolyRing(std::vector<std::string> names, ParamRingPtr params)
      : names_(std::move(names)), params_(std::move(params)) {}
  int nvars() const { return static_cast<int>(names_.size()); }
  int nslots() const { return 2 * nvars(); }
  int primed(int i) const { return nvars() + i; }
  bool is_primed(int slot) const { return slot >= nvars(); }
  int base_var(int slot) const { return slot % nvars(); }
  std::string slot_name(int slot) const {
    return is_primed(slot) ? names_[base_var(slot)] + "'" : names_[slot];
  }
  const std::vector<std::string>& names() const { return names_; }
  const ParamRingPtr& params() const { return params_; }
  /// Slot index for a (possibly primed) variable name; -1 if unknown.
  int slot_of(const std::string& name) const;

private:
  std::vector<std::string> names_;
  ParamRingPtr params_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Exponent vector over the 2n slots.
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial over FieldScalar.
class Polynomial {
public:
  using TermMap = std::map<Monomial, FieldScalar, GrlexGreater>;

  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  static Polynomial constant(PolyRingPtr ring, const FieldScalar& c);
  static Polynomial constant(PolyRingPtr ring, const Cyclo& c);
  static Polynomial var(PolyRingPtr ring, int slot, int exponent = 1);

  const PolyRingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldScalar constant_term() const;
  FieldScalar coeff(const Monomial& mono) const;
  void set_coeff(const Monomial& mono, const FieldScalar& c);
  void add_term(const Monomial& mono, const FieldScalar& c);

  const Monomial& leading_monomial() const;   // requires nonzero
  const FieldScalar& leading_coeff() const;   // requires nonzero

  int degree_in(int slot) const;
  int total_degree() const;
  bool uses_only_unprimed() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldScalar& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int slot) const;

  /// Simultaneous substitution; slots absent from the assignment are fixed.
  Polynomial substitute(const std::map<int, Polynomial>& assignment) const;
  /// x_slot -> c * x_slot.
  Polynomial scale_var(int slot, const Cyclo& c) const;

  /// Exact quotient; throws NonExactDivisionError (with remainder) otherwise.
  Polynomial exact_div(const Polynomial& d) const;

  /// Weighted degree of the leading part is not needed; this is the maximum
  /// weighted degree over terms (unprimed slots only).
  int weighted_degree(const std::vector<int>& weights) const;

  std::string to_string() const;

private:
  PolyRingPtr ring_;
  TermMap terms_;
};

/// Determinant of the n x n matrix of second partials in the unprimed
/// variables, by cofactor expansion.
Polynomial hessian_det(const Polynomial& w, int n);

/// Determinant of a square matrix of polynomials (cofactor expansion).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

}  // namespace lgorb

#endif
