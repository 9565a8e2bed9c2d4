#include "lgorb/clifford.hpp"

#include <bit>
#include <sstream>
#include <vector>

#include "lgorb/error.hpp"

namespace lgorb {

CliffordElement CliffordElement::one(PolyRingPtr ring) {
  CliffordElement e(ring);
  e.add_term(CKey{}, Polynomial::constant(ring, Cyclo(1)));
  return e;
}

CliffordElement CliffordElement::theta_word(PolyRingPtr ring,
                                            uint32_t theta_mask) {
  CliffordElement e(ring);
  e.add_term(CKey{theta_mask, 0}, Polynomial::constant(ring, Cyclo(1)));
  return e;
}

CliffordElement CliffordElement::basis(PolyRingPtr ring, CKey key,
                                       Polynomial coeff) {
  CliffordElement e(ring);
  e.add_term(key, std::move(coeff));
  return e;
}

int CliffordElement::theta_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_)
    d = std::max(d, std::popcount(key.theta));
  return d;
}

void CliffordElement::add_term(CKey key, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r(ring_);
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  CliffordElement r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  return *this + (-o);
}

CliffordElement CliffordElement::operator*(const Polynomial& c) const {
  CliffordElement r(ring_);
  for (const auto& [key, a] : terms_) r.add_term(key, a * c);
  return r;
}

CliffordElement CliffordElement::operator*(const FieldScalar& c) const {
  CliffordElement r(ring_);
  for (const auto& [key, a] : terms_) r.add_term(key, a * c);
  return r;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (int i = 0; i < 32; ++i)
      if (key.theta & (1u << i)) out << " t" << (i + 1);
    for (int i = 0; i < 32; ++i)
      if (key.del & (1u << i)) out << " d" << (i + 1);
  }
  return out.str();
}

namespace {

// Sign of inserting index i into the sorted word for `mask`, moving in from
// the right: one transposition per element greater than i.
int insert_sign(uint32_t mask, int i) {
  uint32_t greater = mask & ~((1u << (i + 1)) - 1);
  return (std::popcount(greater) % 2 == 0) ? 1 : -1;
}

// Sign of left-multiplying del_j onto the sorted word del_J: one
// transposition per element smaller than j.
int prepend_sign(uint32_t mask, int j) {
  uint32_t smaller = mask & ((1u << j) - 1);
  return (std::popcount(smaller) % 2 == 0) ? 1 : -1;
}

struct SignedKey {
  CKey key;
  int sign;
};

// del_J * theta_i rewritten to normal order: a list of (word, sign), each
// word either containing theta_i at the left or theta-free (delta terms).
std::vector<SignedKey> del_word_times_theta(uint32_t del_mask, int i) {
  if (del_mask == 0) return {{CKey{1u << i, 0}, 1}};
  int top = 31 - std::countl_zero(del_mask);
  uint32_t rest = del_mask & ~(1u << top);
  // del_rest (del_top theta_i) = -(del_rest theta_i) del_top
  //                              + delta_{i,top} del_rest.
  std::vector<SignedKey> out;
  for (const auto& t : del_word_times_theta(rest, i)) {
    // Append del_top on the right; top exceeds everything in t.key.del.
    out.push_back({CKey{t.key.theta, t.key.del | (1u << top)}, -t.sign});
  }
  if (top == i) out.push_back({CKey{0, rest}, 1});
  return out;
}

// (theta_I del_J) * generator, where the generator is theta_i or del_j.
std::vector<SignedKey> key_times_theta(CKey k, int i) {
  std::vector<SignedKey> out;
  for (const auto& t : del_word_times_theta(k.del, i)) {
    uint32_t theta = k.theta;
    int sign = t.sign;
    if (t.key.theta) {
      if (theta & t.key.theta) continue;  // theta_i^2 = 0
      sign *= insert_sign(theta, i);
      theta |= t.key.theta;
    }
    out.push_back({CKey{theta, t.key.del}, sign});
  }
  return out;
}

std::vector<SignedKey> key_times_del(CKey k, int j) {
  if (k.del & (1u << j)) return {};  // del_j^2 = 0
  return {{CKey{k.theta, k.del | (1u << j)}, insert_sign(k.del, j)}};
}

}  // namespace

CliffordElement normal_ordered_product(const CliffordElement& a,
                                       const CliffordElement& b) {
  CliffordElement result(a.ring());
  for (const auto& [kb, cb] : b.terms()) {
    // Right-multiply each of a's words by the generators of kb in order.
    for (const auto& [ka, ca] : a.terms()) {
      std::vector<SignedKey> current = {{ka, 1}};
      for (int i = 0; i < 32 && !current.empty(); ++i) {
        if (!(kb.theta & (1u << i))) continue;
        std::vector<SignedKey> next;
        for (const auto& t : current)
          for (const auto& u : key_times_theta(t.key, i))
            next.push_back({u.key, u.sign * t.sign});
        current = std::move(next);
      }
      for (int j = 0; j < 32 && !current.empty(); ++j) {
        if (!(kb.del & (1u << j))) continue;
        std::vector<SignedKey> next;
        for (const auto& t : current)
          for (const auto& u : key_times_del(t.key, j))
            next.push_back({u.key, u.sign * t.sign});
        current = std::move(next);
      }
      Polynomial coeff = ca * cb;
      for (const auto& t : current) {
        if (t.sign == 1)
          result.add_term(t.key, coeff);
        else
          result.add_term(t.key, -coeff);
      }
    }
  }
  return result;
}

CliffordElement theta_partial(const CliffordElement& e, int i) {
  CliffordElement r(e.ring());
  const uint32_t bit = 1u << i;
  for (const auto& [key, c] : e.terms()) {
    if (!(key.theta & bit)) continue;
    uint32_t below = key.theta & (bit - 1);
    int sign = (std::popcount(below) % 2 == 0) ? 1 : -1;
    CKey nk{key.theta & ~bit, key.del};
    r.add_term(nk, sign == 1 ? c : -c);
  }
  return r;
}

CliffordElement pushforward(const DiagonalGroup& g, GroupElement h,
                            const CliffordElement& e) {
  const PolyRingPtr& ring = e.ring();
  const int n = ring->nvars();
  CliffordElement r(ring);
  for (const auto& [key, c] : e.terms()) {
    // x_i' -> h_i^{-1} x_i' in the coefficient.
    Polynomial coeff = c;
    for (int i = 0; i < n; ++i) {
      Cyclo hi = g.eigenvalue(h.k, i);
      if (!hi.is_one()) coeff = coeff.scale_var(ring->primed(i), hi.inverse());
    }
    // h^{-1}(theta_I del_J): theta_i picks up h_i, del_j picks up h_j^{-1}.
    Cyclo f(1);
    for (int i = 0; i < n; ++i) {
      if (key.theta & (1u << i)) f *= g.eigenvalue(h.k, i);
      if (key.del & (1u << i)) f *= g.eigenvalue(h.k, i).inverse();
    }
    if (!f.is_one())
      coeff = coeff * FieldScalar::constant(ring->params(), f);
    r.add_term(key, coeff);
  }
  return r;
}

Polynomial coefficient_of(const CliffordElement& e, uint32_t theta_mask) {
  auto it = e.terms().find(CKey{theta_mask, 0});
  return it == e.terms().end() ? Polynomial(e.ring()) : it->second;
}

}  // namespace lgorb
