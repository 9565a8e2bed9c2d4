#ifndef LGORB_TESTS_TESTUTIL_HPP
#define LGORB_TESTS_TESTUTIL_HPP

#include <memory>
#include <random>
#include <vector>

#include "lgorb/clifford.hpp"
#include "lgorb/param.hpp"
#include "lgorb/polyring.hpp"

namespace testutil {

using namespace lgorb;

inline std::mt19937& rng() {
  static std::mt19937 r(20260824);
  return r;
}

inline int uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Rational random_rational() {
  Rational r(uniform(-9, 9), uniform(1, 9));
  r.canonicalize();
  return r;
}

inline Cyclo random_cyclo() {
  std::array<Rational, 4> c;
  for (auto& x : c) x = random_rational();
  return Cyclo(c);
}

inline Cyclo random_nonzero_cyclo() {
  for (;;) {
    Cyclo c = random_cyclo();
    if (!c.is_zero()) return c;
  }
}

inline ParamRingPtr small_params() {
  static ParamRingPtr p =
      std::make_shared<const ParamRing>(std::vector<std::string>{"s", "t"});
  return p;
}

inline PolyRingPtr small_ring() {
  static PolyRingPtr r = std::make_shared<const PolyRing>(
      std::vector<std::string>{"x", "y", "z"}, small_params());
  return r;
}

inline ParamPoly random_param_poly(const ParamRingPtr& ring, int max_terms = 3,
                                   int max_deg = 2) {
  ParamPoly p(ring);
  int terms = uniform(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> mono(ring->size());
    for (auto& e : mono) e = uniform(0, max_deg);
    p.set_coeff(mono, p.coeff(mono) + random_cyclo());
  }
  return p;
}

inline ParamPoly random_nonzero_param_poly(const ParamRingPtr& ring,
                                           int max_terms = 3,
                                           int max_deg = 2) {
  for (;;) {
    ParamPoly p = random_param_poly(ring, max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
}

inline FieldScalar random_scalar(const ParamRingPtr& ring) {
  return FieldScalar(random_param_poly(ring, 2, 1),
                     random_nonzero_param_poly(ring, 2, 1));
}

inline FieldScalar random_nonzero_scalar(const ParamRingPtr& ring) {
  for (;;) {
    FieldScalar s = random_scalar(ring);
    if (!s.is_zero()) return s;
  }
}

inline Polynomial random_poly(const PolyRingPtr& ring, bool primed_too = false,
                              int max_terms = 3, int max_deg = 2) {
  Polynomial p(ring);
  int terms = uniform(0, max_terms);
  int slots = primed_too ? ring->nslots() : ring->nvars();
  for (int t = 0; t < terms; ++t) {
    Monomial mono(ring->nslots(), 0);
    for (int s = 0; s < slots; ++s) mono[s] = uniform(0, max_deg);
    p.add_term(mono, FieldScalar::constant(ring->params(), random_cyclo()));
  }
  return p;
}

inline CliffordElement random_clifford(const PolyRingPtr& ring,
                                       int max_terms = 3) {
  CliffordElement e(ring);
  const uint32_t full = (1u << ring->nvars()) - 1;
  int terms = uniform(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    CKey key{uniform(0, static_cast<int>(full)) & full,
             uniform(0, static_cast<int>(full)) & full};
    e.add_term(key, random_poly(ring, true, 2, 1));
  }
  return e;
}

}  // namespace testutil

#endif
