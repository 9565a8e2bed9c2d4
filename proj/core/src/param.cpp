#include "lgorb/param.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "lgorb/error.hpp"

namespace lgorb {

int ParamRing::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool GrlexGreater::operator()(const std::vector<int>& a,
                              const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // lex tie-break
}

static void check_same_ring(const ParamRingPtr& a, const ParamRingPtr& b) {
  if (a == b) return;
  if (a && b && a->names() == b->names()) return;
  throw RingMismatchError("parameter rings differ");
}

ParamPoly ParamPoly::constant(ParamRingPtr ring, const Cyclo& c) {
  ParamPoly p(ring);
  if (!c.is_zero()) p.terms_[std::vector<int>(ring->size(), 0)] = c;
  return p;
}

ParamPoly ParamPoly::param(ParamRingPtr ring, int index, int exponent) {
  ParamPoly p(ring);
  std::vector<int> mono(ring->size(), 0);
  mono[index] = exponent;
  p.terms_[mono] = Cyclo(1);
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& mono = terms_.begin()->first;
  return std::all_of(mono.begin(), mono.end(), [](int e) { return e == 0; });
}

Cyclo ParamPoly::constant_value() const {
  auto it = terms_.find(std::vector<int>(ring_->size(), 0));
  return it == terms_.end() ? Cyclo() : it->second;
}

void ParamPoly::set_coeff(const std::vector<int>& mono, const Cyclo& c) {
  if (c.is_zero())
    terms_.erase(mono);
  else
    terms_[mono] = c;
}

Cyclo ParamPoly::coeff(const std::vector<int>& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Cyclo() : it->second;
}

const std::vector<int>& ParamPoly::leading_monomial() const {
  return terms_.begin()->first;
}

const Cyclo& ParamPoly::leading_coeff() const { return terms_.begin()->second; }

int ParamPoly::degree_in(int param) const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono[param]);
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_)
    d = std::max(d, std::accumulate(mono.begin(), mono.end(), 0));
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(ring_);
  for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  check_same_ring(ring_, o.ring_);
  ParamPoly r = *this;
  for (const auto& [mono, c] : o.terms_) {
    auto it = r.terms_.find(mono);
    if (it == r.terms_.end()) {
      r.terms_[mono] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  check_same_ring(ring_, o.ring_);
  ParamPoly r(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      std::vector<int> mono(ma.size());
      for (size_t k = 0; k < mono.size(); ++k) mono[k] = ma[k] + mb[k];
      Cyclo c = ca * cb;
      auto it = r.terms_.find(mono);
      if (it == r.terms_.end()) {
        if (!c.is_zero()) r.terms_[mono] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ParamPoly ParamPoly::operator*(const Cyclo& c) const {
  ParamPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [mono, a] : terms_) r.terms_[mono] = a * c;
  return r;
}

ParamPoly ParamPoly::pow(int e) const {
  ParamPoly r = constant(ring_, Cyclo(1));
  for (int k = 0; k < e; ++k) r *= *this;
  return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
  check_same_ring(ring_, o.ring_);
  return terms_ == o.terms_;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& d) const {
  check_same_ring(ring_, d.ring_);
  if (d.is_zero()) throw DivisionByZeroError();
  ParamPoly q(ring_);
  ParamPoly r = *this;
  const auto& dm = d.leading_monomial();
  const Cyclo dlc_inv = d.leading_coeff().inverse();
  while (!r.is_zero()) {
    const auto& rm = r.leading_monomial();
    std::vector<int> mono(rm.size());
    bool divisible = true;
    for (size_t k = 0; k < rm.size(); ++k) {
      mono[k] = rm[k] - dm[k];
      if (mono[k] < 0) divisible = false;
    }
    if (!divisible) throw NonExactDivisionError(r.to_string());
    Cyclo c = r.leading_coeff() * dlc_inv;
    ParamPoly t(ring_);
    t.terms_[mono] = c;
    q += t;
    r -= t * d;
  }
  return q;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

ParamPoly monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coeff().inverse();
}

// p as univariate in variable v: exponent -> coefficient poly (v-free).
std::map<int, ParamPoly> coeffs_in(const ParamPoly& p, int v) {
  std::map<int, ParamPoly> out;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> rest = mono;
    int e = rest[v];
    rest[v] = 0;
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, ParamPoly(p.ring())).first;
    ParamPoly t(p.ring());
    t.set_coeff(rest, c);
    it->second += t;
  }
  return out;
}

int degree_in_var(const ParamPoly& p, int v) { return p.degree_in(v); }

ParamPoly content_in(const ParamPoly& p, int v) {
  ParamPoly g(p.ring());
  for (const auto& [e, c] : coeffs_in(p, v)) g = gcd(g, c);
  return g;
}

ParamPoly shift_var(const ParamPoly& p, int v, int amount) {
  ParamPoly r(p.ring());
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> m = mono;
    m[v] += amount;
    r.set_coeff(m, c);
  }
  return r;
}

ParamPoly lead_coeff_in(const ParamPoly& p, int v) {
  auto cs = coeffs_in(p, v);
  return cs.rbegin()->second;
}

// Pseudo-remainder of p by q in variable v (deg_v p >= deg_v q > 0).
ParamPoly prem(ParamPoly p, const ParamPoly& q, int v) {
  const int dq = degree_in_var(q, v);
  const ParamPoly lq = lead_coeff_in(q, v);
  while (!p.is_zero()) {
    int dp = degree_in_var(p, v);
    if (dp < dq) break;
    ParamPoly lp = lead_coeff_in(p, v);
    p = p * lq - shift_var(lp * q, v, dp - dq);
  }
  return p;
}

// gcd of polynomials with trivial monomial content.
ParamPoly gcd_primitive(const ParamPoly& a, const ParamPoly& b) {
  const auto one = ParamPoly::constant(a.ring(), Cyclo(1));
  if (a.is_constant() || b.is_constant()) return one;
  int v = -1;
  for (int k = 0; k < a.ring()->size(); ++k)
    if (a.degree_in(k) > 0 && b.degree_in(k) > 0) {
      v = k;
      break;
    }
  if (v < 0) return one;
  ParamPoly ca = content_in(a, v), cb = content_in(b, v);
  ParamPoly gc = gcd(ca, cb);
  ParamPoly p = a.exact_div(ca), q = b.exact_div(cb);
  if (degree_in_var(p, v) < degree_in_var(q, v)) std::swap(p, q);
  // Primitive PRS.
  while (true) {
    ParamPoly r = prem(p, q, v);
    if (r.is_zero()) return gc * q.exact_div(content_in(q, v));
    if (degree_in_var(r, v) == 0) return gc;
    p = q;
    q = r.exact_div(content_in(r, v));
  }
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const int np = a.ring()->size();
  std::vector<int> common(np, INT_MAX);
  auto fold_min = [&](const ParamPoly& p) {
    std::vector<int> m(np, INT_MAX);
    for (const auto& [mono, c] : p.terms())
      for (int k = 0; k < np; ++k) m[k] = std::min(m[k], mono[k]);
    return m;
  };
  std::vector<int> ma = fold_min(a), mb = fold_min(b);
  for (int k = 0; k < np; ++k) common[k] = std::min(ma[k], mb[k]);
  ParamPoly a1 = a, b1 = b;
  for (int k = 0; k < np; ++k) {
    if (ma[k] > 0) a1 = shift_var(a1, k, -ma[k]);
    if (mb[k] > 0) b1 = shift_var(b1, k, -mb[k]);
  }
  ParamPoly g = gcd_primitive(a1, b1);
  for (int k = 0; k < np; ++k)
    if (common[k] > 0) g = shift_var(g, k, common[k]);
  return monic(g);
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    std::string monostr;
    for (size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      if (!monostr.empty()) monostr += "*";
      monostr += ring_->name(static_cast<int>(k));
      if (mono[k] > 1) monostr += "^" + std::to_string(mono[k]);
    }
    Cyclo coeff = c;
    bool negative = false;
    if (coeff.is_rational() && coeff.rational_part() < 0) {
      negative = true;
      coeff = -coeff;
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (monostr.empty()) {
      out << (coeff.needs_parens() && !coeff.is_rational()
                  ? "(" + coeff.to_string() + ")"
                  : coeff.to_string());
    } else if (coeff.is_one()) {
      out << monostr;
    } else if (coeff.needs_parens()) {
      out << "(" << coeff.to_string() << ")*" << monostr;
    } else {
      out << coeff.to_string() << "*" << monostr;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// FieldScalar

FieldScalar::FieldScalar(ParamPoly num)
    : num_(std::move(num)),
      den_(ParamPoly::constant(num_.ring(), Cyclo(1))) {}

FieldScalar::FieldScalar(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError();
  normalize();
}

FieldScalar FieldScalar::zero(ParamRingPtr ring) {
  return FieldScalar(ParamPoly(ring));
}

FieldScalar FieldScalar::one(ParamRingPtr ring) {
  return FieldScalar(ParamPoly::constant(ring, Cyclo(1)));
}

FieldScalar FieldScalar::constant(ParamRingPtr ring, const Cyclo& c) {
  return FieldScalar(ParamPoly::constant(ring, c));
}

FieldScalar FieldScalar::param(ParamRingPtr ring, int index, int exponent) {
  return FieldScalar(ParamPoly::param(ring, index, exponent));
}

void FieldScalar::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly::constant(num_.ring(), Cyclo(1));
    return;
  }
  if (den_.is_constant()) {
    Cyclo c = den_.constant_value();
    if (!c.is_one()) num_ = num_ * c.inverse();
    den_ = ParamPoly::constant(num_.ring(), Cyclo(1));
    return;
  }
  ParamPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Cyclo lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Cyclo inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  if (den_.is_constant()) den_ = ParamPoly::constant(num_.ring(), Cyclo(1));
}

bool FieldScalar::is_one() const { return num_ == den_; }

Cyclo FieldScalar::constant_value() const {
  return num_.constant_value() * den_.constant_value().inverse();
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  if (den_ == o.den_) return FieldScalar(num_ + o.num_, den_);
  return FieldScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  return *this + (-o);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  return FieldScalar(num_ * o.num_, den_ * o.den_);
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  if (o.is_zero()) throw DivisionByZeroError();
  return FieldScalar(num_ * o.den_, den_ * o.num_);
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  return FieldScalar(den_, num_);
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  // Cross-multiplication; valid independently of normalization.
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

bool FieldScalar::operator<(const FieldScalar& o) const {
  return to_string() < o.to_string();
}

std::string FieldScalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string numstr = num_.to_string();
  if (num_.terms().size() > 1 || numstr[0] == '-')
    numstr = "(" + numstr + ")";
  std::string denstr = den_.to_string();
  bool bare_den = den_.terms().size() == 1 && den_.leading_coeff().is_one();
  if (bare_den) {
    // A product of several params still needs parens after '/'.
    int nvars = 0;
    for (int e : den_.leading_monomial())
      if (e > 0) ++nvars;
    bare_den = nvars <= 1;
  }
  if (!bare_den) denstr = "(" + denstr + ")";
  return numstr + "/" + denstr;
}

bool FieldScalar::needs_parens() const {
  if (!den_.is_constant()) return num_.terms().size() > 1;
  if (num_.terms().size() > 1) return true;
  std::string s = num_.to_string();
  return !s.empty() && s[0] == '-';
}

}  // namespace lgorb
