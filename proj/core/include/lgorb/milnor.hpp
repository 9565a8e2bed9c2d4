#ifndef LGORB_MILNOR_HPP
#define LGORB_MILNOR_HPP

#include <vector>

#include "lgorb/polyring.hpp"

namespace lgorb {

/// Jacobian (Milnor) ring R/(dW) of an isolated singularity, over the
/// parameter fraction field. Monomial order is graded-lex on the active
/// variable slots. Immutable after build.
class JacobianRing {
public:
  /// Completes the partials of W (taken in the active slots) to a reduced
  /// Groebner basis and enumerates the standard monomials. Throws
  /// NonIsolatedSingularityError when the standard monomials do not stop
  /// below max_degree (default: LG_ORBIFOLD_MAX_DEGREE env var, else 60).
  /// weights are per active slot; pass {} if residues are not needed.
  static JacobianRing build(const Polynomial& w, std::vector<int> active_slots,
                            std::vector<int> weights = {}, int max_degree = 0);
  /// All unprimed slots active.
  static JacobianRing build(const Polynomial& w);

  const PolyRingPtr& ring() const { return ring_; }
  const Polynomial& w() const { return w_; }
  const std::vector<int>& active_slots() const { return active_; }
  const std::vector<Polynomial>& groebner_basis() const { return gb_; }
  const std::vector<Monomial>& basis_monomials() const { return basis_; }
  int milnor_number() const { return static_cast<int>(basis_.size()); }

  /// Remainder of multivariate division by the Groebner basis; unique and
  /// idempotent for the fixed order.
  Polynomial normal_form(const Polynomial& p) const;

  /// normal_form(det Hess W) in the active variables.
  Polynomial hessian_class() const;

  /// Residue normalized so that residue(det Hess W) equals the Milnor
  /// number. Requires weights and a quasi-homogeneous W whose quotient has
  /// a one-dimensional top weighted-degree piece; throws
  /// UnsupportedSingularityError otherwise.
  FieldScalar residue(const Polynomial& f) const;

  /// (-1)^{n(n-1)/2} * residue(rescale^2 * f * g), n = active variable count.
  FieldScalar pairing_res(const Polynomial& f, const Polynomial& g,
                          const FieldScalar& rescale) const;

private:
  JacobianRing() = default;

  PolyRingPtr ring_;
  Polynomial w_ = Polynomial(nullptr);
  std::vector<int> active_;
  std::vector<int> weights_;
  std::vector<Polynomial> gb_;
  std::vector<Monomial> basis_;
  Monomial socle_;        // empty when weights were not supplied
  bool have_socle_ = false;

  void find_socle();
};

}  // namespace lgorb

#endif
