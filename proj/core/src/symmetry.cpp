#include "lgorb/symmetry.hpp"

#include "lgorb/error.hpp"

namespace lgorb {

DiagonalGroup::DiagonalGroup(int order, std::vector<int> weights)
    : order_(order), weights_(std::move(weights)) {
  if (order_ <= 0 || 12 % order_ != 0) throw UnsupportedOrderError(order_);
}

Cyclo DiagonalGroup::eigenvalue(int k, int i) const {
  long e = static_cast<long>(k) * weights_[i];
  return Cyclo::root_of_unity(order_, static_cast<int>(e % order_));
}

Polynomial act_on_poly(const DiagonalGroup& g, GroupElement h,
                       const Polynomial& p, VarBlock block) {
  const int n = p.ring()->nvars();
  Polynomial r(p.ring());
  for (const auto& [mono, c] : p.terms()) {
    Cyclo f(1);
    for (int i = 0; i < n; ++i) {
      int e = 0;
      if (block != VarBlock::kPrimed) e += mono[i];
      if (block != VarBlock::kUnprimed) e += mono[p.ring()->primed(i)];
      if (e != 0) f *= g.eigenvalue(h.k, i).pow(e);
    }
    r.add_term(mono, c * FieldScalar::constant(p.ring()->params(), f));
  }
  return r;
}

FixedPartition fixed_indices(const DiagonalGroup& g, GroupElement h) {
  FixedPartition part;
  for (int i = 0; i < g.nvars(); ++i) {
    if (g.eigenvalue(h.k, i).is_one())
      part.fixed.push_back(i);
    else
      part.moved.push_back(i);
  }
  return part;
}

Polynomial project_fixed(const DiagonalGroup& g, const Polynomial& p,
                         GroupElement h) {
  auto part = fixed_indices(g, h);
  std::map<int, Polynomial> subst;
  for (int i : part.moved) subst.emplace(i, Polynomial(p.ring()));
  return p.substitute(subst);
}

Cyclo xi_action_factor(const DiagonalGroup& g, GroupElement hprime,
                       GroupElement h) {
  Cyclo f(1);
  for (int i : fixed_indices(g, h).moved)
    f *= g.eigenvalue(hprime.k, i).inverse();
  return f;
}

}  // namespace lgorb
