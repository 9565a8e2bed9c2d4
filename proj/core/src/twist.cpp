#include "lgorb/twist.hpp"

#include <bit>
#include <sstream>

#include "lgorb/error.hpp"

namespace lgorb {

LGOrbifold::LGOrbifold(Polynomial w, DiagonalGroup group)
    : w_(std::move(w)), group_(std::move(group)) {
  if (group_.nvars() != w_.ring()->nvars())
    throw RingMismatchError("group rank does not match the variable count");
  if (!w_.uses_only_unprimed())
    throw Error("potential must not use primed variables");
  Polynomial acted =
      act_on_poly(group_, GroupElement{1}, w_, VarBlock::kUnprimed);
  if (acted != w_) throw Error("potential is not group invariant");
}

uint32_t LGOrbifold::moved_mask(GroupElement h) const {
  uint32_t mask = 0;
  for (int i : fixed_indices(group_, h).moved) mask |= 1u << i;
  return mask;
}

void TwistedElement::add_part(GroupElement sector, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  for (auto& [s, c] : parts_) {
    if (s.k == sector.k) {
      c += coeff;
      if (c.is_zero()) {
        std::erase_if(parts_, [&](const auto& p) { return p.second.is_zero(); });
      }
      return;
    }
  }
  auto it = parts_.begin();
  while (it != parts_.end() && it->first.k < sector.k) ++it;
  parts_.insert(it, {sector, coeff});
}

Polynomial TwistedElement::coefficient(GroupElement sector,
                                       const PolyRingPtr& ring) const {
  for (const auto& [s, c] : parts_)
    if (s.k == sector.k) return c;
  return Polynomial(ring);
}

std::string TwistedElement::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : parts_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*xi[" << s.k << "]";
  }
  return out.str();
}

namespace {

void check_range(const LGOrbifold& o, int j, int i) {
  if (j < 0 || i < j || i > o.nvars())
    throw Error("substitution indices out of range");
}

/// x_t - h_t x_t as a polynomial (t 0-based).
Polynomial moved_binomial(const LGOrbifold& o, GroupElement h, int t) {
  const PolyRingPtr& ring = o.ring();
  Cyclo ht = o.group().eigenvalue(h.k, t);
  return Polynomial::var(ring, t) * FieldScalar::constant(ring->params(),
                                                          Cyclo(1) - ht);
}

}  // namespace

Polynomial wbar(const LGOrbifold& o, GroupElement h, int j, int i) {
  check_range(o, j, i);
  const PolyRingPtr& ring = o.ring();
  std::map<int, Polynomial> subst;
  for (int t = 0; t < j; ++t)
    subst.emplace(t, Polynomial::var(ring, ring->primed(t)));
  for (int t = i; t < o.nvars(); ++t) {
    Cyclo ht = o.group().eigenvalue(h.k, t);
    subst.emplace(t, Polynomial::var(ring, t) *
                         FieldScalar::constant(ring->params(), ht));
  }
  return o.w().substitute(subst);
}

Polynomial wtilde(const LGOrbifold& o, GroupElement h, int j, int i) {
  check_range(o, j, i);
  const PolyRingPtr& ring = o.ring();
  std::map<int, Polynomial> subst;
  for (int t = 0; t < j; ++t)
    if (!o.group().eigenvalue(h.k, t).is_one())
      subst.emplace(t, Polynomial(ring));
  for (int t = i; t < o.nvars(); ++t) {
    Cyclo ht = o.group().eigenvalue(h.k, t);
    subst.emplace(t, Polynomial::var(ring, t) *
                         FieldScalar::constant(ring->params(), ht));
  }
  return o.w().substitute(subst);
}

Polynomial g_coeff(const LGOrbifold& o, GroupElement h, int j, int i) {
  if (j < 1 || i < j || i > o.nvars()) throw Error("g indices out of range");
  const PolyRingPtr& ring = o.ring();
  if (o.group().eigenvalue(h.k, i - 1).is_one()) return Polynomial(ring);
  if (j == i) {
    // (1/(x_i'-x_i)) * ((Wb_ii - Wb_{i-1,i-1})/(x_i'-hx_i)
    //                   - (Wb_{i-1,i} - Wb_{i-1,i-1})/(x_i-hx_i))
    Cyclo hi = o.group().eigenvalue(h.k, i - 1);
    Polynomial xi = Polynomial::var(ring, i - 1);
    Polynomial xip = Polynomial::var(ring, ring->primed(i - 1));
    Polynomial hxi = xi * FieldScalar::constant(ring->params(), hi);
    Polynomial a =
        (wbar(o, h, i, i) - wbar(o, h, i - 1, i - 1)).exact_div(xip - hxi);
    Polynomial b =
        (wbar(o, h, i - 1, i) - wbar(o, h, i - 1, i - 1)).exact_div(xi - hxi);
    return (a - b).exact_div(xip - xi);
  }
  Polynomial num = (wbar(o, h, j, i) - wbar(o, h, j - 1, i)) -
                   (wbar(o, h, j, i - 1) - wbar(o, h, j - 1, i - 1));
  Polynomial xjdiff = Polynomial::var(ring, ring->primed(j - 1)) -
                      Polynomial::var(ring, j - 1);
  return num.exact_div(xjdiff).exact_div(moved_binomial(o, h, i - 1));
}

Polynomial f_coeff(const LGOrbifold& o, GroupElement h, int j, int i) {
  if (j < 1 || i <= j || i > o.nvars()) throw Error("f indices out of range");
  const PolyRingPtr& ring = o.ring();
  if (o.group().eigenvalue(h.k, i - 1).is_one() ||
      o.group().eigenvalue(h.k, j - 1).is_one())
    return Polynomial(ring);
  Polynomial num = (wtilde(o, h, j, i) - wtilde(o, h, j - 1, i)) -
                   (wtilde(o, h, j, i - 1) - wtilde(o, h, j - 1, i - 1));
  return num.exact_div(moved_binomial(o, h, j - 1))
      .exact_div(moved_binomial(o, h, i - 1));
}

namespace {

struct EtaTables {
  // 1-based (j,i) flattened as j*(n+1)+i; only entries with j<=i used.
  std::vector<Polynomial> g, f;
  int n;

  const Polynomial& g_at(int j, int i) const { return g[j * (n + 1) + i]; }
  const Polynomial& f_at(int j, int i) const { return f[j * (n + 1) + i]; }
};

EtaTables make_tables(const LGOrbifold& o, GroupElement h) {
  const int n = o.nvars();
  EtaTables t{std::vector<Polynomial>((n + 1) * (n + 1), Polynomial(o.ring())),
              std::vector<Polynomial>((n + 1) * (n + 1), Polynomial(o.ring())),
              n};
  for (int j = 1; j <= n; ++j)
    for (int i = j; i <= n; ++i) {
      t.g[j * (n + 1) + i] = g_coeff(o, h, j, i);
      if (j < i) t.f[j * (n + 1) + i] = f_coeff(o, h, j, i);
    }
  return t;
}

CliffordElement eta_with_tables(const LGOrbifold& o, const EtaTables& t,
                                const CliffordElement& e) {
  const PolyRingPtr& ring = o.ring();
  const int n = t.n;
  CliffordElement out(ring);
  for (const auto& [key, c] : e.terms()) {
    const int theta_deg = std::popcount(key.theta);
    const int sign_i = (theta_deg % 2 == 0) ? 1 : -1;  // (-1)^{|I|}
    CliffordElement word = CliffordElement::theta_word(ring, key.theta);
    CliffordElement del_word = CliffordElement::basis(
        ring, CKey{0, key.del}, Polynomial::constant(ring, Cyclo(1)));
    for (int i = 1; i <= n; ++i) {
      if (!(key.theta & (1u << (i - 1)))) continue;
      CliffordElement di = theta_partial(word, i - 1);
      for (int j = 1; j <= i; ++j) {
        const Polynomial& g = t.g_at(j, i);
        if (g.is_zero()) continue;
        // (d theta_I / d theta_i) del_j del_J, del_j pushed into del_J by
        // the normal ordering.
        CliffordElement piece = normal_ordered_product(
            normal_ordered_product(
                di, CliffordElement::basis(
                        ring, CKey{0, 1u << (j - 1)},
                        Polynomial::constant(ring, Cyclo(1)))),
            del_word);
        Polynomial coeff = c * g;
        out += piece * (sign_i == 1 ? coeff : -coeff);
      }
      for (int j = 1; j < i; ++j) {
        if (!(key.theta & (1u << (j - 1)))) continue;
        const Polynomial& f = t.f_at(j, i);
        if (f.is_zero()) continue;
        CliffordElement dji =
            normal_ordered_product(theta_partial(di, j - 1), del_word);
        out += dji * (c * f);
      }
    }
  }
  return out;
}

}  // namespace

CliffordElement eta_apply(const LGOrbifold& o, GroupElement h,
                          const CliffordElement& e) {
  return eta_with_tables(o, make_tables(o, h), e);
}

CliffordElement exp_eta(const LGOrbifold& o, GroupElement h,
                        const CliffordElement& e) {
  EtaTables t = make_tables(o, h);
  CliffordElement result = e;
  CliffordElement term = e;
  for (int k = 1; !term.is_zero(); ++k) {
    term = eta_with_tables(o, t, term) *
           FieldScalar::constant(o.ring()->params(), Cyclo(Rational(1, k)));
    result += term;
  }
  return result;
}

Polynomial sigma(const LGOrbifold& o, GroupElement h, GroupElement hprime) {
  const PolyRingPtr& ring = o.ring();
  const DiagonalGroup& g = o.group();
  GroupElement hh = product(g, h, hprime);

  CliffordElement left =
      exp_eta(o, h, CliffordElement::theta_word(ring, o.moved_mask(h)));
  CliffordElement right = exp_eta(
      o, hprime, CliffordElement::theta_word(ring, o.moved_mask(hprime)));
  CliffordElement prod =
      normal_ordered_product(pushforward(g, hprime, left), right);
  Polynomial st = coefficient_of(prod, o.moved_mask(hh));

  // pi_{hh'}: x_i' -> (hh')_i x_i.
  std::map<int, Polynomial> subst;
  for (int i = 0; i < o.nvars(); ++i)
    subst.emplace(ring->primed(i),
                  Polynomial::var(ring, i) *
                      FieldScalar::constant(ring->params(),
                                            g.eigenvalue(hh.k, i)));
  return st.substitute(subst);
}

JacobianRing sector_jacobian(const LGOrbifold& o, GroupElement h,
                             const std::vector<int>& weights) {
  Polynomial wh = project_fixed(o.group(), o.w(), h);
  auto part = fixed_indices(o.group(), h);
  std::vector<int> wsub;
  if (!weights.empty())
    for (int i : part.fixed) wsub.push_back(weights[i]);
  return JacobianRing::build(wh, part.fixed, wsub);
}

TwistedElement xi_product(const LGOrbifold& o, GroupElement h,
                          GroupElement hprime) {
  GroupElement hh = product(o.group(), h, hprime);
  JacobianRing jr = sector_jacobian(o, hh);
  TwistedElement out;
  out.add_part(hh, jr.normal_form(sigma(o, h, hprime)));
  return out;
}

}  // namespace lgorb
