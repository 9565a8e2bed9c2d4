#include "lgorb/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lgorb/error.hpp"

namespace lgorb {

int PolyRing::slot_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[i] == name) return i;
    if (names_[i] + "'" == name) return primed(i);
  }
  return -1;
}

static void check_same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (a == b) return;
  if (a && b && a->names() == b->names() &&
      a->params()->names() == b->params()->names())
    return;
  throw RingMismatchError("polynomial rings differ");
}

Polynomial Polynomial::constant(PolyRingPtr ring, const FieldScalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.emplace(Monomial(ring->nslots(), 0), c);
  return p;
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Cyclo& c) {
  return constant(ring, FieldScalar::constant(ring->params(), c));
}

Polynomial Polynomial::var(PolyRingPtr ring, int slot, int exponent) {
  Polynomial p(ring);
  Monomial mono(ring->nslots(), 0);
  mono[slot] = exponent;
  p.terms_.emplace(mono, FieldScalar::one(ring->params()));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& mono = terms_.begin()->first;
  return std::all_of(mono.begin(), mono.end(), [](int e) { return e == 0; });
}

FieldScalar Polynomial::constant_term() const {
  return coeff(Monomial(ring_->nslots(), 0));
}

FieldScalar Polynomial::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? FieldScalar::zero(ring_->params()) : it->second;
}

void Polynomial::set_coeff(const Monomial& mono, const FieldScalar& c) {
  if (c.is_zero())
    terms_.erase(mono);
  else
    terms_.insert_or_assign(mono, c);
}

void Polynomial::add_term(const Monomial& mono, const FieldScalar& c) {
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& Polynomial::leading_monomial() const {
  return terms_.begin()->first;
}

const FieldScalar& Polynomial::leading_coeff() const {
  return terms_.begin()->second;
}

int Polynomial::degree_in(int slot) const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono[slot]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_)
    d = std::max(d, std::accumulate(mono.begin(), mono.end(), 0));
  return d;
}

bool Polynomial::uses_only_unprimed() const {
  const int n = ring_->nvars();
  for (const auto& [mono, c] : terms_)
    for (int s = n; s < ring_->nslots(); ++s)
      if (mono[s] > 0) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial mono(ma.size());
      for (size_t k = 0; k < mono.size(); ++k) mono[k] = ma[k] + mb[k];
      r.add_term(mono, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const FieldScalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [mono, a] : terms_) r.terms_.emplace(mono, a * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(ring_, Cyclo(1));
  for (int k = 0; k < e; ++k) r *= *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

Polynomial Polynomial::derivative(int slot) const {
  Polynomial r(ring_);
  for (const auto& [mono, c] : terms_) {
    if (mono[slot] == 0) continue;
    Monomial m = mono;
    int e = m[slot]--;
    r.add_term(m, c * FieldScalar::constant(ring_->params(), Cyclo(e)));
  }
  return r;
}

Polynomial Polynomial::substitute(
    const std::map<int, Polynomial>& assignment) const {
  Polynomial r(ring_);
  for (const auto& [mono, c] : terms_) {
    Polynomial term = Polynomial::constant(ring_, c);
    Monomial fixed(mono.size(), 0);
    for (size_t s = 0; s < mono.size(); ++s) {
      if (mono[s] == 0) continue;
      auto it = assignment.find(static_cast<int>(s));
      if (it == assignment.end())
        fixed[s] = mono[s];
      else
        term *= it->second.pow(mono[s]);
    }
    Polynomial base(ring_);
    base.set_coeff(fixed, FieldScalar::one(ring_->params()));
    r += term * base;
  }
  return r;
}

Polynomial Polynomial::scale_var(int slot, const Cyclo& c) const {
  Polynomial r(ring_);
  for (const auto& [mono, coeffv] : terms_) {
    Cyclo f = c.pow(mono[slot]);
    r.add_term(mono, coeffv * FieldScalar::constant(ring_->params(), f));
  }
  return r;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  check_same_ring(ring_, d.ring_);
  if (d.is_zero()) throw DivisionByZeroError();
  Polynomial q(ring_);
  Polynomial r = *this;
  const auto& dm = d.leading_monomial();
  const FieldScalar dlc_inv = d.leading_coeff().inverse();
  while (!r.is_zero()) {
    const auto& rm = r.leading_monomial();
    Monomial mono(rm.size());
    bool divisible = true;
    for (size_t k = 0; k < rm.size(); ++k) {
      mono[k] = rm[k] - dm[k];
      if (mono[k] < 0) divisible = false;
    }
    if (!divisible) throw NonExactDivisionError(r.to_string());
    FieldScalar c = r.leading_coeff() * dlc_inv;
    Polynomial t(ring_);
    t.set_coeff(mono, c);
    q += t;
    r -= t * d;
  }
  return q;
}

int Polynomial::weighted_degree(const std::vector<int>& weights) const {
  int d = 0;
  const int n = ring_->nvars();
  for (const auto& [mono, c] : terms_) {
    int wd = 0;
    for (int s = 0; s < n; ++s) wd += weights[s] * mono[s];
    d = std::max(d, wd);
  }
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    std::string monostr;
    for (size_t s = 0; s < mono.size(); ++s) {
      if (mono[s] == 0) continue;
      if (!monostr.empty()) monostr += "*";
      monostr += ring_->slot_name(static_cast<int>(s));
      if (mono[s] > 1) monostr += "^" + std::to_string(mono[s]);
    }
    std::string cs = c.to_string();
    bool negative = false;
    if (!c.needs_parens() && !cs.empty() && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (monostr.empty()) {
      out << (c.needs_parens() ? "(" + c.to_string() + ")" : cs);
    } else if (cs == "1") {
      out << monostr;
    } else if (c.needs_parens()) {
      out << "(" << c.to_string() << ")*" << monostr;
    } else {
      out << cs << "*" << monostr;
    }
  }
  return out.str();
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  const PolyRingPtr& ring = m[0][0].ring();
  Polynomial det(ring);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial cof = m[0][j] * poly_det(minor);
    if (j % 2 == 0)
      det += cof;
    else
      det -= cof;
  }
  return det;
}

Polynomial hessian_det(const Polynomial& w, int n) {
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(w.ring())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = w.derivative(i).derivative(j);
  return poly_det(m);
}

}  // namespace lgorb
