#ifndef LGORB_TWIST_HPP
#define LGORB_TWIST_HPP

#include <vector>

#include "lgorb/clifford.hpp"
#include "lgorb/milnor.hpp"
#include "lgorb/polyring.hpp"
#include "lgorb/symmetry.hpp"

namespace lgorb {

/// A potential together with a diagonal symmetry group. W must use only
/// unprimed variables and be invariant under the group (checked here);
/// isolatedness of the singularity surfaces later as a finite Milnor number.
class LGOrbifold {
public:
  LGOrbifold(Polynomial w, DiagonalGroup group);

  const Polynomial& w() const { return w_; }
  const DiagonalGroup& group() const { return group_; }
  const PolyRingPtr& ring() const { return w_.ring(); }
  int nvars() const { return ring()->nvars(); }

  /// Bitmask of I_h, the indices moved by h.
  uint32_t moved_mask(GroupElement h) const;

private:
  Polynomial w_;
  DiagonalGroup group_;
};

/// Sparse sum of sector contributions c_h * xi_h; coefficients live in the
/// fixed variables of their sector.
class TwistedElement {
public:
  TwistedElement() = default;

  const std::vector<std::pair<GroupElement, Polynomial>>& parts() const {
    return parts_;
  }
  bool is_zero() const { return parts_.empty(); }

  void add_part(GroupElement sector, const Polynomial& coeff);
  /// Coefficient of xi_sector; zero polynomial if absent.
  Polynomial coefficient(GroupElement sector, const PolyRingPtr& ring) const;

  std::string to_string() const;

private:
  std::vector<std::pair<GroupElement, Polynomial>> parts_;  // ascending k
};

/// W with the first j variables primed, variables j+1..i untouched and the
/// rest acted on by h (indices 1-based, 0 <= j <= i <= n).
Polynomial wbar(const LGOrbifold& o, GroupElement h, int j, int i);

/// As wbar, but the first j variables are zeroed when h moves them instead
/// of being primed.
Polynomial wtilde(const LGOrbifold& o, GroupElement h, int j, int i);

/// Difference-quotient coefficients (1-based indices, j <= i for g and
/// j < i for f). Zero on the branches where the defining indices are not
/// moved by h.
Polynomial g_coeff(const LGOrbifold& o, GroupElement h, int j, int i);
Polynomial f_coeff(const LGOrbifold& o, GroupElement h, int j, int i);

/// The S-linear map eta_h on the Clifford module.
CliffordElement eta_apply(const LGOrbifold& o, GroupElement h,
                          const CliffordElement& e);

/// 1 + eta + eta^2/2! + ... (finite: eta lowers theta-degree).
CliffordElement exp_eta(const LGOrbifold& o, GroupElement h,
                        const CliffordElement& e);

/// Structure constant sigma_{h,h'} as a polynomial in the unprimed
/// variables, before any Jacobian-ring reduction.
Polynomial sigma(const LGOrbifold& o, GroupElement h, GroupElement hprime);

/// xi_h * xi_h': sector hh' with sigma reduced in Jac(W^{hh'}).
TwistedElement xi_product(const LGOrbifold& o, GroupElement h,
                          GroupElement hprime);

/// Jacobian ring of the restriction of W to the h-fixed locus, with the
/// moved variables set to zero. weights, if given, are per full variable
/// and are restricted to the fixed slots here.
JacobianRing sector_jacobian(const LGOrbifold& o, GroupElement h,
                             const std::vector<int>& weights = {});

}  // namespace lgorb

#endif
