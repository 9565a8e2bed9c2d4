#include "doctest.h"
#include "lgorb/cases.hpp"
#include "lgorb/error.hpp"
#include "lgorb/expr.hpp"

using namespace lgorb;

namespace {

Polynomial P(const PolyRingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

bool mentions_param(const Polynomial& p, int param) {
  for (const auto& [m, c] : p.terms())
    if (c.depends_on(param)) return true;
  return false;
}

const GroupElement kId{0}, kChi{1};

}  // namespace

TEST_CASE("case lookup") {
  CHECK(case_by_name("z3") == CaseName::kZ3);
  CHECK(case_by_name("z4") == CaseName::kZ4);
  CHECK(case_by_name("z6") == CaseName::kZ6);
  CHECK(!case_by_name("z5").has_value());
  CHECK(to_string(CaseName::kZ6) == "z6");
}

TEST_CASE("built-in definitions are consistent") {
  for (CaseName name : {CaseName::kZ3, CaseName::kZ4, CaseName::kZ6}) {
    CaseDefinition def = builtin_case(name);
    CHECK(def.name == name);
    CHECK(def.ring()->nvars() == 3);
    CHECK(def.weights.size() == 3);
    CHECK(def.orbifold.w().uses_only_unprimed());
    // The potential is quasi-homogeneous for the declared weights: every
    // term has the same weighted degree.
    int d = def.orbifold.w().weighted_degree(def.weights);
    for (const auto& [m, c] : def.orbifold.w().terms()) {
      int wd = 0;
      for (int i = 0; i < 3; ++i) wd += def.weights[i] * m[i];
      CHECK(wd == d);
    }
    // Both divisor classes live in the two odd sectors and carry 1/cL.
    for (const TwistedElement* t : {&def.ks_h, &def.ks_v}) {
      REQUIRE(t->parts().size() == 2);
      CHECK(t->parts()[0].first.k == 1);
      CHECK(t->parts()[1].first.k == def.orbifold.group().order() - 1);
      for (const auto& [sector, coeff] : t->parts())
        CHECK(mentions_param(coeff, def.cl_param));
    }
  }
  CHECK(builtin_case(CaseName::kZ3).series == SeriesCase::kZ3);
  CHECK(builtin_case(CaseName::kZ4).series == SeriesCase::kZ4);
  CHECK(!builtin_case(CaseName::kZ6).series.has_value());
}

TEST_CASE("point classes combine the structure constants") {
  // The cL^2-rescaled product of the two divisor classes; the identity
  // sector must be the stated multiple of the reduced structure constant.
  CaseDefinition z3 = builtin_case(CaseName::kZ3);
  JacobianRing j3 = case_jacobian(z3);
  TwistedElement p3 = ks_point_class(z3);
  CHECK(p3.coefficient(kId, z3.ring()) ==
        j3.normal_form(sigma(z3.orbifold, kChi, GroupElement{2}) *
                       FieldScalar::constant(z3.ring()->params(),
                                             Cyclo::zeta(8) - Cyclo::zeta(4))));

  CaseDefinition z4 = builtin_case(CaseName::kZ4);
  JacobianRing j4 = case_jacobian(z4);
  TwistedElement p4 = ks_point_class(z4);
  CHECK(p4.coefficient(kId, z4.ring()) ==
        j4.normal_form(sigma(z4.orbifold, kChi, GroupElement{3}) *
                       FieldScalar::constant(z4.ring()->params(),
                                             -Cyclo::i())));

  CaseDefinition z6 = builtin_case(CaseName::kZ6);
  JacobianRing j6 = case_jacobian(z6);
  TwistedElement p6 = ks_point_class(z6);
  CHECK(p6.coefficient(kId, z6.ring()) ==
        j6.normal_form(sigma(z6.orbifold, kChi, GroupElement{5}) *
                       FieldScalar::constant(
                           z6.ring()->params(),
                           -Cyclo::sqrt3_i() * Cyclo(Rational(1, 3)))));
}

TEST_CASE("the scale parameter cancels out of the point class") {
  for (CaseName name : {CaseName::kZ3, CaseName::kZ4, CaseName::kZ6}) {
    CaseDefinition def = builtin_case(name);
    TwistedElement p = ks_point_class(def);  // throws if cL survives
    CHECK(!p.is_zero());
    for (const auto& [sector, coeff] : p.parts())
      CHECK(!mentions_param(coeff, def.cl_param));
  }
}

TEST_CASE("full verification of every case") {
  for (CaseName name : {CaseName::kZ3, CaseName::kZ4, CaseName::kZ6}) {
    CaseDefinition def = builtin_case(name);
    CaseReport r = verify_case(def, 120);
    CHECK(r.mu == def.expected_mu);
    CHECK(r.group_order == def.orbifold.group().order());
    CHECK(r.theorem.ok);
    CHECK(r.theorem.lhs == r.theorem.rhs);
    CHECK(r.trace.ok);
    CHECK(r.reductions.ok);
    CHECK(r.series_applicable == def.series.has_value());
    CHECK(r.series_ok());
    CHECK(r.all_ok());
  }
}

TEST_CASE("the theorem check is sensitive to the potential") {
  // Breaking one coefficient of a divisor class must break the theorem.
  CaseDefinition def = builtin_case(CaseName::kZ3);
  TwistedElement broken;
  for (const auto& [sector, coeff] : def.ks_h.parts())
    broken.add_part(sector,
                    coeff * FieldScalar::constant(def.ring()->params(),
                                                  Cyclo(2)));
  def.ks_h = broken;
  CheckReport r = verify_main_theorem(def);
  CHECK(!r.ok);
  CHECK(r.lhs != r.rhs);
  CHECK(!verify_trace(def).ok);
}
