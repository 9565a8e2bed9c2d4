#ifndef LGORB_CLIFFORD_HPP
#define LGORB_CLIFFORD_HPP

#include <cstdint>
#include <map>

#include "lgorb/polyring.hpp"
#include "lgorb/symmetry.hpp"

namespace lgorb {

/// Normal-ordered basis word theta_I del_J: bitmask index sets, each block
/// read in increasing index order.
struct CKey {
  uint32_t theta = 0;
  uint32_t del = 0;
  auto operator<=>(const CKey&) const = default;
};

/// Finite sum of normal-ordered words with Polynomial coefficients in
/// S = k[x, x']. Coefficients are central; the generators satisfy
///   theta_i theta_j = -theta_j theta_i,  del_i del_j = -del_j del_i,
///   del_i theta_j = -theta_j del_i + delta_ij.
class CliffordElement {
public:
  explicit CliffordElement(PolyRingPtr ring) : ring_(std::move(ring)) {}
  static CliffordElement zero(PolyRingPtr ring) { return CliffordElement(ring); }
  static CliffordElement one(PolyRingPtr ring);
  /// theta_{i1}..theta_{ik} for the set bits of mask, increasing order.
  static CliffordElement theta_word(PolyRingPtr ring, uint32_t theta_mask);
  static CliffordElement basis(PolyRingPtr ring, CKey key, Polynomial coeff);

  const PolyRingPtr& ring() const { return ring_; }
  const std::map<CKey, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int theta_degree() const;  // max |I| over terms; -1 when zero

  void add_term(CKey key, const Polynomial& coeff);

  CliffordElement operator-() const;
  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement& operator+=(const CliffordElement& o) { return *this = *this + o; }
  CliffordElement& operator-=(const CliffordElement& o) { return *this = *this - o; }
  CliffordElement operator*(const Polynomial& c) const;
  CliffordElement operator*(const FieldScalar& c) const;

  bool operator==(const CliffordElement& o) const;
  bool operator!=(const CliffordElement& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  PolyRingPtr ring_;
  std::map<CKey, Polynomial> terms_;
};

/// Product rewritten into normal order.
CliffordElement normal_ordered_product(const CliffordElement& a,
                                       const CliffordElement& b);

/// Left derivative: d theta_I / d theta_i = (-1)^pos theta_{I minus i}
/// where pos is the 0-based position of i in the increasing list I.
CliffordElement theta_partial(const CliffordElement& e, int i);

/// h_*: substitutes x_i' -> h_i^{-1} x_i' in coefficients and applies
/// h^{-1} to each basis word.
CliffordElement pushforward(const DiagonalGroup& g, GroupElement h,
                            const CliffordElement& e);

/// Coefficient of the key (I, empty); zero polynomial if absent.
Polynomial coefficient_of(const CliffordElement& e, uint32_t theta_mask);

}  // namespace lgorb

#endif
