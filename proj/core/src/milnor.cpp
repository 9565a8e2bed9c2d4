#include "lgorb/milnor.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "lgorb/error.hpp"

namespace lgorb {

namespace {

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (size_t k = 0; k < b.size(); ++k) q[k] = b[k] - a[k];
  return q;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

Polynomial term_poly(const PolyRingPtr& ring, const Monomial& m,
                     const FieldScalar& c) {
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coeff().inverse();
}

/// Full remainder of p on division by basis (every term reduced).
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis) {
  Polynomial rem(p.ring());
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (mono_divides(g.leading_monomial(), lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.add_term(lm, p.leading_coeff());
      p -= term_poly(p.ring(), lm, p.leading_coeff());
    } else {
      FieldScalar factor = p.leading_coeff() / divisor->leading_coeff();
      p -= term_poly(p.ring(), mono_quot(lm, divisor->leading_monomial()),
                     factor) *
           *divisor;
    }
  }
  return rem;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = term_poly(f.ring(), mono_quot(l, f.leading_monomial()),
                           f.leading_coeff().inverse()) *
                 f;
  Polynomial b = term_poly(g.ring(), mono_quot(l, g.leading_monomial()),
                           g.leading_coeff().inverse()) *
                 g;
  return a - b;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> basis) {
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (mono_coprime(basis[i].leading_monomial(), basis[j].leading_monomial()))
      continue;
    Polynomial r = reduce_full(s_poly(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    r = make_monic(r);
    for (size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
    basis.push_back(std::move(r));
  }
  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial &mi = basis[i].leading_monomial(),
                     &mj = basis[j].leading_monomial();
      if (mono_divides(mj, mi) && (mi != mj || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(make_monic(reduce_full(minimal[i], others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return GrlexGreater{}(a.leading_monomial(), b.leading_monomial());
            });
  return reduced;
}

int default_max_degree() {
  if (const char* s = std::getenv("LG_ORBIFOLD_MAX_DEGREE")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 60;
}

/// All monomials of total degree d in the given slots (full-width vectors).
void monomials_of_degree(int nslots, const std::vector<int>& slots, size_t pos,
                         int d, Monomial& current, std::vector<Monomial>& out) {
  if (pos + 1 == slots.size() || slots.empty()) {
    if (slots.empty()) {
      if (d == 0) out.push_back(current);
      return;
    }
    current[slots[pos]] = d;
    out.push_back(current);
    current[slots[pos]] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    current[slots[pos]] = e;
    monomials_of_degree(nslots, slots, pos + 1, d - e, current, out);
  }
  current[slots[pos]] = 0;
}

}  // namespace

JacobianRing JacobianRing::build(const Polynomial& w,
                                 std::vector<int> active_slots,
                                 std::vector<int> weights, int max_degree) {
  if (!weights.empty() && weights.size() != active_slots.size())
    throw Error("weights must match the active slots");
  if (max_degree <= 0) max_degree = default_max_degree();

  JacobianRing jr;
  jr.ring_ = w.ring();
  jr.w_ = w;
  jr.active_ = std::move(active_slots);
  jr.weights_ = std::move(weights);

  std::vector<Polynomial> gens;
  for (int slot : jr.active_) {
    Polynomial d = w.derivative(slot);
    if (!d.is_zero()) gens.push_back(make_monic(d));
  }
  jr.gb_ = buchberger(std::move(gens));

  const int nslots = jr.ring_->nslots();
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> level;
    Monomial current(nslots, 0);
    monomials_of_degree(nslots, jr.active_, 0, d, current, level);
    size_t found = 0;
    for (const auto& m : level) {
      bool standard = true;
      for (const auto& g : jr.gb_)
        if (mono_divides(g.leading_monomial(), m)) {
          standard = false;
          break;
        }
      if (standard) {
        jr.basis_.push_back(m);
        ++found;
      }
    }
    // Standard monomials are closed under divisibility, so one empty
    // degree level means every higher level is empty too.
    if (found == 0) {
      if (!jr.weights_.empty()) jr.find_socle();
      return jr;
    }
  }
  throw NonIsolatedSingularityError(max_degree);
}

JacobianRing JacobianRing::build(const Polynomial& w) {
  std::vector<int> active(w.ring()->nvars());
  for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);
  return build(w, std::move(active));
}

void JacobianRing::find_socle() {
  auto wdeg = [&](const Monomial& m) {
    int d = 0;
    for (size_t k = 0; k < active_.size(); ++k) d += weights_[k] * m[active_[k]];
    return d;
  };
  int top = 0;
  for (const auto& m : basis_) top = std::max(top, wdeg(m));
  int count = 0;
  for (const auto& m : basis_) {
    if (wdeg(m) == top) {
      socle_ = m;
      ++count;
    }
  }
  have_socle_ = (count == 1);
}

Polynomial JacobianRing::normal_form(const Polynomial& p) const {
  return reduce_full(p, gb_);
}

Polynomial JacobianRing::hessian_class() const {
  const int n = static_cast<int>(active_.size());
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m[r].push_back(w_.derivative(active_[r]).derivative(active_[c]));
  if (n == 0) return normal_form(Polynomial::constant(ring_, Cyclo(1)));
  return normal_form(poly_det(m));
}

FieldScalar JacobianRing::residue(const Polynomial& f) const {
  if (weights_.empty() || !have_socle_)
    throw UnsupportedSingularityError(
        "residue needs weights and a one-dimensional top weighted-degree "
        "piece");
  // Quasi-homogeneity of W: every term must sit in one weighted degree.
  std::optional<int> wd;
  for (const auto& [m, c] : w_.terms()) {
    int d = 0;
    for (size_t k = 0; k < active_.size(); ++k) d += weights_[k] * m[active_[k]];
    if (!wd) wd = d;
    else if (*wd != d)
      throw UnsupportedSingularityError("W is not quasi-homogeneous");
  }
  FieldScalar alpha = normal_form(f).coeff(socle_);
  FieldScalar beta = hessian_class().coeff(socle_);
  if (beta.is_zero())
    throw InternalConsistencyError("Hessian class misses the socle monomial");
  return alpha / beta *
         FieldScalar::constant(ring_->params(), Cyclo(milnor_number()));
}

FieldScalar JacobianRing::pairing_res(const Polynomial& f, const Polynomial& g,
                                      const FieldScalar& rescale) const {
  const int n = static_cast<int>(active_.size());
  FieldScalar r = residue(f * g) * rescale * rescale;
  return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace lgorb
