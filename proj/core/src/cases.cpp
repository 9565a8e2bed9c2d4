#include "lgorb/cases.hpp"

#include "lgorb/error.hpp"
#include "lgorb/expr.hpp"

namespace lgorb {

std::optional<CaseName> case_by_name(const std::string& name) {
  if (name == "z3") return CaseName::kZ3;
  if (name == "z4") return CaseName::kZ4;
  if (name == "z6") return CaseName::kZ6;
  return std::nullopt;
}

std::string to_string(CaseName name) {
  switch (name) {
    case CaseName::kZ3: return "z3";
    case CaseName::kZ4: return "z4";
    case CaseName::kZ6: return "z6";
  }
  return "?";
}

namespace {

Polynomial scalar_part(const PolyRingPtr& ring, const Cyclo& c, int cl_param) {
  FieldScalar s = FieldScalar::constant(ring->params(), c) /
                  FieldScalar::param(ring->params(), cl_param);
  return Polynomial::constant(ring, s);
}

TwistedElement two_sector(const PolyRingPtr& ring, int cl_param, int k1,
                          const Cyclo& c1, int k2, const Cyclo& c2) {
  TwistedElement e;
  e.add_part(GroupElement{k1}, scalar_part(ring, c1, cl_param));
  e.add_part(GroupElement{k2}, scalar_part(ring, c2, cl_param));
  return e;
}

}  // namespace

CaseDefinition builtin_case(CaseName name) {
  const std::vector<std::string> vars = {"x", "y", "z"};
  switch (name) {
    case CaseName::kZ3: {
      auto params = std::make_shared<const ParamRing>(
          std::vector<std::string>{"phi", "psi", "cL"});
      auto ring = std::make_shared<const PolyRing>(vars, params);
      Polynomial w =
          parse_polynomial("phi*(x^3+y^3+z^3) - psi*x*y*z", ring);
      Cyclo rho = Cyclo::root_of_unity(3, 1);
      LGOrbifold orb(w, DiagonalGroup(3, {1, 1, 1}));
      return CaseDefinition{
          name,
          orb,
          {1, 1, 1},
          8,
          2,
          two_sector(ring, 2, 1, -rho, 2, -(rho * rho)),
          two_sector(ring, 2, 1, -(rho * rho), 2, -rho),
          SeriesCase::kZ3};
    }
    case CaseName::kZ4: {
      auto params = std::make_shared<const ParamRing>(
          std::vector<std::string>{"q", "a", "b", "cL"});
      auto ring = std::make_shared<const PolyRing>(vars, params);
      Polynomial w = parse_polynomial(
          "-q*x*y*z + q^6*x^2 + a*(y^4+z^4) + b*y^2*z^2", ring);
      Cyclo i = Cyclo::i();
      Cyclo half(Rational(1, 2));
      LGOrbifold orb(w, DiagonalGroup(4, {2, 1, 1}));
      return CaseDefinition{
          name,
          orb,
          {2, 1, 1},
          9,
          3,
          two_sector(ring, 3, 1, (Cyclo(-1) - i) * half, 3,
                     (Cyclo(-1) + i) * half),
          two_sector(ring, 3, 1, (Cyclo(1) - i) * half, 3,
                     (Cyclo(1) + i) * half),
          SeriesCase::kZ4};
    }
    case CaseName::kZ6: {
      auto params = std::make_shared<const ParamRing>(
          std::vector<std::string>{"q", "a1", "a2", "a3", "a4", "cL"});
      auto ring = std::make_shared<const PolyRing>(vars, params);
      Polynomial w = parse_polynomial(
          "-q*x*y*z + q^6*x^2 + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
          ring);
      Cyclo zeta = Cyclo::root_of_unity(6, 1);
      Cyclo third(Rational(1, 3));
      LGOrbifold orb(w, DiagonalGroup(6, {3, 2, 1}));
      return CaseDefinition{
          name,
          orb,
          {3, 2, 1},
          10,
          5,
          two_sector(ring, 5, 1, (-zeta - zeta * zeta) * third, 5,
                     (zeta + zeta * zeta) * third),
          two_sector(ring, 5, 1, (Cyclo(1) + zeta) * third, 5,
                     (Cyclo(1) - zeta * zeta) * third),
          std::nullopt};
    }
  }
  throw Error("unknown case");
}

JacobianRing case_jacobian(const CaseDefinition& def) {
  std::vector<int> active = {0, 1, 2};
  return JacobianRing::build(def.orbifold.w(), active, def.weights);
}

TwistedElement ks_point_class(const CaseDefinition& def) {
  const PolyRingPtr& ring = def.ring();
  FieldScalar cl2 =
      FieldScalar::param(ring->params(), def.cl_param, 2);
  TwistedElement out;
  for (const auto& [h, ch] : def.ks_h.parts()) {
    for (const auto& [hp, chp] : def.ks_v.parts()) {
      TwistedElement prod = xi_product(def.orbifold, h, hp);
      Polynomial factor = ch * chp * cl2;
      for (const auto& [sector, coeff] : prod.parts())
        out.add_part(sector, coeff * factor.constant_term());
    }
  }
  for (const auto& [sector, coeff] : out.parts())
    for (const auto& [mono, c] : coeff.terms())
      if (c.depends_on(def.cl_param))
        throw InternalConsistencyError(
            "cL did not cancel in the point class (sector " +
            std::to_string(sector.k) + ")");
  return out;
}

CheckReport verify_main_theorem(const CaseDefinition& def) {
  JacobianRing jr = case_jacobian(def);
  TwistedElement pc = ks_point_class(def);
  Polynomial lhs =
      jr.normal_form(pc.coefficient(GroupElement{0}, def.ring()));
  Rational denom(def.orbifold.group().order() *
                 static_cast<long>(jr.milnor_number()));
  Polynomial rhs =
      jr.hessian_class() *
      FieldScalar::constant(def.ring()->params(), Cyclo(Rational(-1) / denom));
  CheckReport rep;
  rep.ok = (lhs == rhs);
  rep.lhs = lhs.to_string();
  rep.rhs = rhs.to_string();
  for (const auto& [sector, coeff] : pc.parts())
    if (sector.k != 0)
      rep.notes.push_back("sector " + std::to_string(sector.k) + ": " +
                          coeff.to_string());
  if (jr.milnor_number() != def.expected_mu) {
    rep.ok = false;
    rep.notes.push_back("unexpected Milnor number " +
                        std::to_string(jr.milnor_number()));
  }
  return rep;
}

CheckReport verify_trace(const CaseDefinition& def) {
  JacobianRing jr = case_jacobian(def);
  TwistedElement pc = ks_point_class(def);
  Polynomial ident = pc.coefficient(GroupElement{0}, def.ring());
  FieldScalar value =
      -jr.residue(ident * FieldScalar::constant(
                              def.ring()->params(),
                              Cyclo(def.orbifold.group().order())));
  CheckReport rep;
  rep.ok = value.is_one();
  rep.lhs = value.to_string();
  rep.rhs = "1";
  return rep;
}

CheckReport verify_reductions(const CaseDefinition& def) {
  std::vector<std::pair<std::string, std::string>> relations;
  switch (def.name) {
    case CaseName::kZ3:
      relations = {
          {"y^3", "psi*x*y*z/(3*phi)"},
          {"z^3", "psi*x*y*z/(3*phi)"},
      };
      break;
    case CaseName::kZ4:
      relations = {
          {"x*y*z", "2*q^5*x^2"},
          {"y^2*z^2", "4*q^10*x^2"},
          {"2*a*y^4", "(q^6-4*b*q^10)*x^2"},
          {"2*a*z^4", "(q^6-4*b*q^10)*x^2"},
      };
      break;
    case CaseName::kZ6:
      relations = {
          {"x*y*z", "2*q^5*x^2"},
          {"a1*y^3",
           "(-8*q^14*a3*a4^2 - 16*q^10*a2*a3 + 32*q^14*a2*a3^2 - "
           "24*q^14*a1*a2*a4 + 2*q^10*a4^2 + 2*q^6*a2)"
           "/(4*q^4*a4^2 + 3*a2 - 12*q^4*a2*a3)*x^2"},
          {"z^6",
           "q^6*(-8*q^4*a3 - 48*q^8*a1*a4 + 16*q^8*a3^2 + 1)"
           "/(4*q^4*a4^2 + 3*a2 - 12*q^4*a2*a3)*x^2"},
          {"y*z^4",
           "2*q^10*(36*q^4*a1*a2 - 4*q^4*a3*a4 + a4)"
           "/(4*q^4*a4^2 + 3*a2 - 12*q^4*a2*a3)*x^2"},
      };
      break;
  }
  JacobianRing jr = case_jacobian(def);
  CheckReport rep;
  rep.ok = true;
  for (const auto& [lhs, rhs] : relations) {
    Polynomial l = jr.normal_form(parse_polynomial(lhs, def.ring()));
    Polynomial r = jr.normal_form(parse_polynomial(rhs, def.ring()));
    if (l != r) {
      rep.ok = false;
      rep.notes.push_back("failed: nf(" + lhs + ") != nf(" + rhs + ")");
    }
  }
  rep.lhs = std::to_string(relations.size()) + " relations";
  rep.rhs = rep.ok ? "all hold" : "mismatch";
  return rep;
}

CaseReport verify_case(const CaseDefinition& def, int series_order) {
  CaseReport rep;
  rep.name = def.name;
  rep.group_order = def.orbifold.group().order();
  JacobianRing jr = case_jacobian(def);
  rep.mu = jr.milnor_number();
  rep.theorem = verify_main_theorem(def);
  rep.trace = verify_trace(def);
  rep.reductions = verify_reductions(def);
  if (def.series) {
    rep.series_applicable = true;
    rep.series = verify_series_identity(*def.series, series_order);
  }
  return rep;
}

}  // namespace lgorb
