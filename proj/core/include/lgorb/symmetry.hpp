#ifndef LGORB_SYMMETRY_HPP
#define LGORB_SYMMETRY_HPP

#include <vector>

#include "lgorb/polyring.hpp"

namespace lgorb {

/// Which variable block an action applies to.
enum class VarBlock { kUnprimed, kPrimed, kBoth };

/// Cyclic group of order m acting diagonally: the generator sends
/// x_i -> zeta_m^{w_i} * x_i. Group elements are powers of the generator.
class DiagonalGroup {
public:
  DiagonalGroup(int order, std::vector<int> weights);

  int order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  int nvars() const { return static_cast<int>(weights_.size()); }

  /// Eigenvalue of generator^k on x_i.
  Cyclo eigenvalue(int k, int i) const;

private:
  int order_;
  std::vector<int> weights_;
};

/// Element = generator^k with 0 <= k < order.
struct GroupElement {
  int k;
};

inline GroupElement product(const DiagonalGroup& g, GroupElement a,
                            GroupElement b) {
  return {(a.k + b.k) % g.order()};
}
inline GroupElement inverse(const DiagonalGroup& g, GroupElement a) {
  return {(g.order() - a.k % g.order()) % g.order()};
}
inline bool is_identity(GroupElement a) { return a.k == 0; }

/// x_i -> h_i * x_i on the selected block (primed slots use the eigenvalue
/// of the underlying variable).
Polynomial act_on_poly(const DiagonalGroup& g, GroupElement h,
                       const Polynomial& p, VarBlock block = VarBlock::kBoth);

/// (I_h, I^h): indices moved by h and its complement (0-based).
struct FixedPartition {
  std::vector<int> moved;  // I_h
  std::vector<int> fixed;  // I^h
};
FixedPartition fixed_indices(const DiagonalGroup& g, GroupElement h);

/// Substitute 0 for every unprimed x_i with i in I_h.
Polynomial project_fixed(const DiagonalGroup& g, const Polynomial& p,
                         GroupElement h);

/// prod_{i in I_h} (h'_i)^{-1}; xi_h is invariant iff this is 1 for the
/// group generator.
Cyclo xi_action_factor(const DiagonalGroup& g, GroupElement hprime,
                       GroupElement h);

}  // namespace lgorb

#endif
