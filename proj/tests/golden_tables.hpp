#ifndef LGORB_TESTS_GOLDEN_TABLES_HPP
#define LGORB_TESTS_GOLDEN_TABLES_HPP

// Closed-form expected values for the deformed potentials, difference
// quotients, exponential components and structure constants of the three
// built-in cases, shared by the unit tests and the acceptance gate.

#include <string>
#include <vector>

#include "lgorb/cases.hpp"
#include "lgorb/expr.hpp"
#include "lgorb/twist.hpp"

namespace goldens {

using namespace lgorb;

struct GoldenResult {
  std::string label;
  bool ok;
};

namespace detail {

inline void add(std::vector<GoldenResult>& out, const std::string& label,
                const Polynomial& got, const std::string& expect) {
  out.push_back({label, got == parse_polynomial(expect, got.ring())});
}

inline Polynomial del_coeff(const CliffordElement& e, uint32_t mask) {
  auto it = e.terms().find(CKey{0, mask});
  return it == e.terms().end() ? Polynomial(e.ring()) : it->second;
}

inline std::string cell(const char* kind, int j, int i) {
  return std::string(kind) + "[" + std::to_string(j) + "," +
         std::to_string(i) + "]";
}

}  // namespace detail

/// Every displayed deformed-potential and difference-quotient value for
/// the generator sector of one case.
inline std::vector<GoldenResult> table_results(CaseName name) {
  std::vector<GoldenResult> out;
  CaseDefinition def = builtin_case(name);
  const LGOrbifold& o = def.orbifold;
  const GroupElement chi{1};
  auto wb = [&](int j, int i, const std::string& e) {
    detail::add(out, to_string(name) + " " + detail::cell("wbar", j, i),
                wbar(o, chi, j, i), e);
  };
  auto wt = [&](int j, int i, const std::string& e) {
    detail::add(out, to_string(name) + " " + detail::cell("wtilde", j, i),
                wtilde(o, chi, j, i), e);
  };
  auto gg = [&](int j, int i, const std::string& e) {
    detail::add(out, to_string(name) + " " + detail::cell("g", j, i),
                g_coeff(o, chi, j, i), e);
  };
  auto ff = [&](int j, int i, const std::string& e) {
    detail::add(out, to_string(name) + " " + detail::cell("f", j, i),
                f_coeff(o, chi, j, i), e);
  };

  switch (name) {
    case CaseName::kZ3: {
      const std::string w = "phi*(x^3+y^3+z^3) - psi*x*y*z";
      wb(0, 0, w);
      wb(0, 1, "phi*(x^3+y^3+z^3) - w^8*psi*x*y*z");
      wb(0, 2, "phi*(x^3+y^3+z^3) - w^4*psi*x*y*z");
      wb(0, 3, w);
      wb(1, 1, "phi*(x'^3+y^3+z^3) - w^8*psi*x'*y*z");
      wb(1, 2, "phi*(x'^3+y^3+z^3) - w^4*psi*x'*y*z");
      wb(1, 3, "phi*(x'^3+y^3+z^3) - psi*x'*y*z");
      wb(2, 2, "phi*(x'^3+y'^3+z^3) - w^4*psi*x'*y'*z");
      wb(2, 3, "phi*(x'^3+y'^3+z^3) - psi*x'*y'*z");
      wb(3, 3, "phi*(x'^3+y'^3+z'^3) - psi*x'*y'*z'");
      wt(0, 0, w);
      wt(0, 1, "phi*(x^3+y^3+z^3) - w^8*psi*x*y*z");
      wt(0, 2, "phi*(x^3+y^3+z^3) - w^4*psi*x*y*z");
      wt(0, 3, w);
      for (int i = 1; i <= 3; ++i) wt(1, i, "phi*(y^3+z^3)");
      for (int i = 2; i <= 3; ++i) wt(2, i, "phi*z^3");
      wt(3, 3, "0");
      gg(1, 1, "phi*(x'-w^8*x)");
      gg(1, 2, "-w^4*psi*z");
      gg(1, 3, "-psi*y");
      gg(2, 2, "phi*(y'-w^8*y)");
      gg(2, 3, "-psi*x'");
      gg(3, 3, "phi*(z'-w^8*z)");
      ff(1, 2, "w^4*psi*z/(1-w^4)");
      ff(1, 3, "psi*y/(1-w^4)");
      ff(2, 3, "0");
      break;
    }
    case CaseName::kZ4: {
      const std::string w = "-q*x*y*z + q^6*x^2 + a*(y^4+z^4) + b*y^2*z^2";
      wb(0, 0, w);
      wb(0, 1, "q^6*x^2 + q*x*y*z + a*y^4 + a*z^4 + b*y^2*z^2");
      wb(0, 2, "q^6*x^2 - q*w^3*x*y*z + a*y^4 + a*z^4 - b*y^2*z^2");
      wb(0, 3, w);
      wb(1, 1, "q^6*x'^2 + q*x'*y*z + a*y^4 + a*z^4 + b*y^2*z^2");
      wb(1, 2, "q^6*x'^2 - q*w^3*x'*y*z + a*y^4 + a*z^4 - b*y^2*z^2");
      wb(1, 3, "q^6*x'^2 - q*x'*y*z + a*y^4 + a*z^4 + b*y^2*z^2");
      wb(2, 2, "q^6*x'^2 - q*w^3*x'*y'*z + a*y'^4 + a*z^4 - b*y'^2*z^2");
      wb(2, 3, "q^6*x'^2 - q*x'*y'*z + a*y'^4 + a*z^4 + b*y'^2*z^2");
      wb(3, 3, "-q*x'*y'*z' + q^6*x'^2 + a*(y'^4+z'^4) + b*y'^2*z'^2");
      wt(0, 0, w);
      wt(0, 1, "q^6*x^2 + q*x*y*z + a*y^4 + a*z^4 + b*y^2*z^2");
      wt(0, 2, "q^6*x^2 - q*w^3*x*y*z + a*y^4 + a*z^4 - b*y^2*z^2");
      wt(0, 3, w);
      wt(1, 1, "a*y^4 + a*z^4 + b*y^2*z^2");
      wt(1, 2, "a*y^4 + a*z^4 - b*y^2*z^2");
      wt(1, 3, "a*y^4 + a*z^4 + b*y^2*z^2");
      wt(2, 2, "a*z^4");
      wt(2, 3, "a*z^4");
      wt(3, 3, "0");
      gg(1, 1, "q^6");
      gg(1, 2, "-q*w^3*z");
      gg(1, 3, "-q*y");
      gg(2, 2, "a*(y'+y)*(y'+w^3*y) - b*z^2");
      gg(2, 3, "-q*x' + b*(y'+y)*(z+w^3*z)");
      gg(3, 3, "a*(z'+z)*(z'+w^3*z) + b*y'^2");
      ff(1, 2, "q*w^3*z/2");
      ff(1, 3, "q*y/2");
      ff(2, 3, "-w^3*b*y*z");
      break;
    }
    case CaseName::kZ6: {
      const std::string w =
          "-q*x*y*z + q^6*x^2 + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4";
      wb(0, 0, w);
      wb(0, 1,
         "q^6*x^2 + q*x*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4");
      wb(0, 2,
         "q^6*x^2 - w^2*q*x*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2"
         " + w^8*a4*y*z^4");
      wb(0, 3, w);
      wb(1, 1,
         "q^6*x'^2 + q*x'*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4");
      wb(1, 2,
         "q^6*x'^2 - w^2*q*x'*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2"
         " + w^8*a4*y*z^4");
      wb(1, 3,
         "q^6*x'^2 - q*x'*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4");
      wb(2, 2,
         "q^6*x'^2 - w^2*q*x'*y'*z + a1*y'^3 + a2*z^6 + w^4*a3*y'^2*z^2"
         " + w^8*a4*y'*z^4");
      wb(2, 3,
         "q^6*x'^2 - q*x'*y'*z + a1*y'^3 + a2*z^6 + a3*y'^2*z^2"
         " + a4*y'*z^4");
      wb(3, 3,
         "-q*x'*y'*z' + q^6*x'^2 + a1*y'^3 + a2*z'^6 + a3*y'^2*z'^2"
         " + a4*y'*z'^4");
      wt(0, 0, w);
      wt(0, 1,
         "q^6*x^2 + q*x*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4");
      wt(0, 2,
         "q^6*x^2 - w^2*q*x*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2"
         " + w^8*a4*y*z^4");
      wt(0, 3, w);
      wt(1, 1, "a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4");
      wt(1, 2, "a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2 + w^8*a4*y*z^4");
      wt(1, 3, "a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4");
      wt(2, 2, "a2*z^6");
      wt(2, 3, "a2*z^6");
      wt(3, 3, "0");
      gg(1, 1, "q^6");
      gg(1, 2, "-w^2*q*z");
      gg(1, 3, "-q*y");
      gg(2, 2, "a1*(y'+w^2*y) + w^4*a3*z^2");
      gg(2, 3, "-q*x' + a3*(y'+y)*(z+w^2*z) + a4*(2*w^2-1)*z^3");
      gg(3, 3,
         "a2*(z'-w^4*z)*(z'+z)*(z'-w^8*z)*(z'-w^10*z) + a3*y'^2"
         " + a4*y'*(z'^2 + z'*z + z^2 + (z'+z)*w^2*z + w^4*z^2)");
      ff(1, 2, "w^2*q*z/2");
      ff(1, 3, "q*y/2");
      ff(2, 3, "(-a3*y*z - w^2*a4*z^3)/(1-w^2)");
      break;
    }
  }
  return out;
}

/// The displayed components of exp(eta_h)(theta_1 theta_2 theta_3) for the
/// two odd sectors: the pure-derivative words for the generator sector and
/// the theta words for its inverse. The uncomputed remainder terms of the
/// displays are not compared.
inline std::vector<GoldenResult> exp_results(CaseName name) {
  std::vector<GoldenResult> out;
  CaseDefinition def = builtin_case(name);
  const LGOrbifold& o = def.orbifold;
  auto ring = def.ring();
  const std::string tag = to_string(name) + " exp ";
  CliffordElement top = CliffordElement::theta_word(ring, 0b111);
  CliffordElement e = exp_eta(o, GroupElement{1}, top);
  CliffordElement einv =
      exp_eta(o, GroupElement{o.group().order() - 1}, top);
  auto del = [&](uint32_t mask, const std::string& expect) {
    detail::add(out, tag + "del " + std::to_string(mask),
                detail::del_coeff(e, mask), expect);
  };
  auto th = [&](uint32_t mask, const std::string& expect) {
    detail::add(out, tag + "theta " + std::to_string(mask),
                coefficient_of(einv, mask), expect);
  };
  switch (name) {
    case CaseName::kZ3:
      del(0b001, "0");
      del(0b010, "-(phi*psi*(y'*y - w^8*y^2) + w^4*psi^2*x'*z)/(1-w^4)");
      del(0b100, "w^4*phi*psi*(z'*z - w^8*z^2)/(1-w^4)");
      // Our words are del_1 del_2 del_3 = -(del_3 del_2 del_1).
      del(0b111, "-phi^3*(x'-w^8*x)*(y'-w^8*y)*(z'-w^8*z)");
      th(0b111, "1");
      th(0b100, "-w^8*psi*z/(1-w^8)");
      th(0b010, "psi*y/(1-w^8)");
      th(0b001, "0");
      break;
    case CaseName::kZ4:
      del(0b001, "-q^6*w^3*b*y*z");
      del(0b010,
          "(q*b*y*z^2 - q*a*(y'+y)*(y'+w^3*y)*y"
          " + (-q*x' + b*(y'+y)*(z+w^3*z))*q*w^3*z)/2");
      del(0b100, "(a*(z'+w^3*z)*(z'+z) + b*y'^2)*q*w^3*z/2");
      del(0b111,
          "-q^6*(a*(y'+y)*(y'+w^3*y) - b*z^2)"
          "*(a*(z'+z)*(z'+w^3*z) + b*y'^2)");
      th(0b111, "1");
      th(0b100, "q*w^3*z/2");
      th(0b010, "q*y/2");
      th(0b001, "-w^3*b*y*z");
      break;
    case CaseName::kZ6:
      th(0b111, "1");
      th(0b100, "-w^10*q*z/2");
      th(0b010, "q*y/2");
      th(0b001, "(a3*y*z + w^10*a4*z^3)/(1-w^10)");
      break;
  }
  return out;
}

/// The closed-form structure constant sigma_{chi, chi^{m-1}} displays.
inline std::vector<GoldenResult> sigma_results(CaseName name) {
  std::vector<GoldenResult> out;
  CaseDefinition def = builtin_case(name);
  GroupElement last{def.orbifold.group().order() - 1};
  Polynomial got = sigma(def.orbifold, GroupElement{1}, last);
  const char* expect = "";
  switch (name) {
    case CaseName::kZ3:
      expect =
          "(3*(w^8-w^4)*phi^3 - psi^3/3)*x*y*z"
          " - phi*psi^2*(w^8-1)/3*y^3 - phi*psi^2*(w^8-1)/3*z^3";
      break;
    case CaseName::kZ4:
      expect =
          "-q^3*x*y*z/4"
          " + (q^2*a*(w^3+1)/2 + (2-2*w^3)*q^6*a*b)*y^4"
          " + (q^2*a*(w^3+1)/2 + (2-2*w^3)*q^6*a*b)*z^4"
          " + (2*q^6*b^2 - 8*q^6*a^2*w^3)*y^2*z^2";
      break;
    case CaseName::kZ6:
      expect =
          "(-a1*(2*w^2-1)*q^2*w^4/4 + q^6*a1*a3*w^8*(2*w^2-1))*y^3"
          " + (q^6*a4^2 + 3*q^2*a2*w^2/2 - 6*q^6*w^4*a2*a3)*z^6"
          " + ((6-3*w^2)*q^6*a3*a4 + (3*w^2-1)*q^2*a4/4"
          "    - 6*q^6*a1*a2*(2*w^2-1))*y*z^4"
          " + (2*q^6*a3^2 + (7-8*w^2)*q^6*a1*a4)*y^2*z^2"
          " - q^3*x*y*z/4";
      break;
  }
  detail::add(out, to_string(name) + " sigma", got, expect);
  return out;
}

}  // namespace goldens

#endif
