#include "lgorb/cyclo.hpp"

#include <sstream>

#include "lgorb/error.hpp"

namespace lgorb {

Cyclo Cyclo::zeta(int k) {
  k %= 12;
  if (k < 0) k += 12;
  // Reduce w^k with w^4 = w^2 - 1. w^6 = -1 gives the period-12 pattern.
  std::array<Rational, 4> c{};
  int sign = 1;
  if (k >= 6) {
    sign = -1;
    k -= 6;
  }
  switch (k) {
    case 0: c[0] = sign; break;
    case 1: c[1] = sign; break;
    case 2: c[2] = sign; break;
    case 3: c[3] = sign; break;
    case 4:  // w^2 - 1
      c[2] = sign;
      c[0] = -sign;
      break;
    case 5:  // w^3 - w
      c[3] = sign;
      c[1] = -sign;
      break;
  }
  return Cyclo(c);
}

Cyclo Cyclo::root_of_unity(int order, int power) {
  if (order <= 0 || 12 % order != 0) throw UnsupportedOrderError(order);
  long step = 12 / order;
  long k = (static_cast<long>(power) % order) * step;
  return zeta(static_cast<int>(k));
}

Cyclo Cyclo::sqrt3_i() {
  Cyclo r = zeta(2) * Cyclo(2);
  return r - Cyclo(1);
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

bool Cyclo::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyclo Cyclo::operator-() const {
  std::array<Rational, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = -c_[k];
  return Cyclo(c);
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  std::array<Rational, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = c_[k] + o.c_[k];
  return Cyclo(c);
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  std::array<Rational, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = c_[k] - o.c_[k];
  return Cyclo(c);
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  std::array<Rational, 7> conv{};
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      conv[a + b] += c_[a] * o.c_[b];
    }
  }
  // w^k = w^{k-2} - w^{k-4} for k >= 4.
  for (int k = 6; k >= 4; --k) {
    if (conv[k] == 0) continue;
    conv[k - 2] += conv[k];
    conv[k - 4] -= conv[k];
    conv[k] = 0;
  }
  return Cyclo({conv[0], conv[1], conv[2], conv[3]});
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  if (is_rational()) return Cyclo(Rational(1) / c_[0]);
  // Solve M * d = e0 where M is multiplication by *this in basis {1,w,w^2,w^3}.
  // Column j of M is the reduction of (*this) * w^j.
  Rational m[4][5];
  for (int j = 0; j < 4; ++j) {
    Cyclo col = *this * zeta(j);
    for (int r = 0; r < 4; ++r) m[r][j] = col.coeffs()[r];
  }
  for (int r = 0; r < 4; ++r) m[r][4] = (r == 0) ? Rational(1) : Rational(0);
  // Gaussian elimination.
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw DivisionByZeroError();
    if (piv != col)
      for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[col][k]);
    Rational inv = Rational(1) / m[col][col];
    for (int k = col; k < 5; ++k) m[col][k] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return Cyclo({m[0][4], m[1][4], m[2][4], m[3][4]});
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Cyclo::operator<(const Cyclo& o) const {
  for (int k = 3; k >= 0; --k) {
    int c = cmp(c_[k], o.c_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      out << lgorb::to_string(a);
    } else {
      if (a != 1) out << lgorb::to_string(a) << "*";
      out << "w";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

bool Cyclo::needs_parens() const {
  int nonzero = 0;
  for (const auto& c : c_)
    if (c != 0) ++nonzero;
  if (nonzero > 1) return true;
  // A single negative term also needs parens inside a product.
  for (const auto& c : c_)
    if (c < 0) return true;
  return false;
}

}  // namespace lgorb
