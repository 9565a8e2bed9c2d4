#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgorb/cases.hpp"
#include "lgorb/error.hpp"
#include "lgorb/expr.hpp"

using nlohmann::json;

namespace {

std::vector<lgorb::CaseName> cases_for(const std::string& name) {
  if (name == "all")
    return {lgorb::CaseName::kZ3, lgorb::CaseName::kZ4, lgorb::CaseName::kZ6};
  auto c = lgorb::case_by_name(name);
  if (!c) throw lgorb::Error("unknown case '" + name + "'");
  return {*c};
}

json report_json(const lgorb::CaseReport& rep) {
  json j;
  j["schema"] = 1;
  j["case"] = lgorb::to_string(rep.name);
  j["theorem_ok"] = rep.theorem.ok;
  j["trace_ok"] = rep.trace.ok;
  j["reductions_ok"] = rep.reductions.ok;
  j["series_ok"] = rep.series_ok();
  j["lhs"] = rep.theorem.lhs;
  j["rhs"] = rep.theorem.rhs;
  j["mu"] = rep.mu;
  return j;
}

int run_verify(const std::string& case_name, int series_order, bool as_json) {
  bool all_ok = true;
  json out = json::array();
  for (auto name : cases_for(case_name)) {
    lgorb::CaseReport rep =
        lgorb::verify_case(lgorb::builtin_case(name), series_order);
    all_ok = all_ok && rep.all_ok();
    if (as_json) {
      out.push_back(report_json(rep));
      continue;
    }
    std::cout << (rep.all_ok() ? "PASS" : "FAIL") << " "
              << lgorb::to_string(name) << " (|G|=" << rep.group_order
              << ", mu=" << rep.mu << "): theorem "
              << (rep.theorem.ok ? "ok" : "FAILED") << ", trace "
              << (rep.trace.ok ? "ok" : "FAILED") << ", reductions "
              << (rep.reductions.ok ? "ok" : "FAILED");
    if (rep.series_applicable)
      std::cout << ", series " << (rep.series.holds ? "ok" : "FAILED")
                << " (order " << rep.series.order << ")";
    std::cout << "\n";
    if (!rep.theorem.ok)
      std::cout << "  lhs: " << rep.theorem.lhs << "\n  rhs: "
                << rep.theorem.rhs << "\n";
    for (const auto& n : rep.reductions.notes) std::cout << "  " << n << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int run_sigma(const std::string& case_name, int h, int hprime, bool reduced,
              bool as_json) {
  auto def = lgorb::builtin_case(cases_for(case_name).at(0));
  lgorb::GroupElement gh{h % def.orbifold.group().order()};
  lgorb::GroupElement ghp{hprime % def.orbifold.group().order()};
  lgorb::Polynomial s = lgorb::sigma(def.orbifold, gh, ghp);
  lgorb::GroupElement sector =
      lgorb::product(def.orbifold.group(), gh, ghp);
  if (reduced)
    s = lgorb::sector_jacobian(def.orbifold, sector).normal_form(s);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["case"] = lgorb::to_string(def.name);
    j["h"] = gh.k;
    j["hprime"] = ghp.k;
    j["sector"] = sector.k;
    j["reduced"] = reduced;
    j["sigma"] = s.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << s.to_string() << "\n";
  }
  return 0;
}

int run_jacobian(const std::string& case_name, bool as_json) {
  auto def = lgorb::builtin_case(cases_for(case_name).at(0));
  lgorb::JacobianRing jr = lgorb::case_jacobian(def);
  std::vector<std::string> basis;
  for (const auto& m : jr.basis_monomials()) {
    lgorb::Polynomial p(def.ring());
    p.add_term(m, lgorb::FieldScalar::one(def.ring()->params()));
    basis.push_back(p.to_string());
  }
  std::vector<std::string> gb;
  for (const auto& g : jr.groebner_basis()) gb.push_back(g.to_string());
  std::string hess = jr.hessian_class().to_string();
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["case"] = lgorb::to_string(def.name);
    j["mu"] = jr.milnor_number();
    j["basis"] = basis;
    j["groebner_basis"] = gb;
    j["hessian_class"] = hess;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mu = " << jr.milnor_number() << "\n";
    std::cout << "basis monomials:\n";
    for (const auto& b : basis) std::cout << "  " << b << "\n";
    std::cout << "groebner basis:\n";
    for (const auto& g : gb) std::cout << "  " << g << "\n";
    std::cout << "hessian class: " << hess << "\n";
  }
  return 0;
}

int run_reduce(const std::string& case_name, const std::string& poly,
               bool as_json) {
  auto def = lgorb::builtin_case(cases_for(case_name).at(0));
  lgorb::JacobianRing jr = lgorb::case_jacobian(def);
  lgorb::Polynomial p = lgorb::parse_polynomial(poly, def.ring());
  std::string nf = jr.normal_form(p).to_string();
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["case"] = lgorb::to_string(def.name);
    j["input"] = poly;
    j["normal_form"] = nf;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << nf << "\n";
  }
  return 0;
}

int run_series(const std::string& name, int order, bool as_json) {
  if (name == "z3" || name == "z4") {
    auto which = (name == "z3") ? lgorb::SeriesCase::kZ3
                                : lgorb::SeriesCase::kZ4;
    lgorb::SeriesIdentityReport rep =
        lgorb::verify_series_identity(which, order);
    if (as_json) {
      json j;
      j["schema"] = 1;
      j["identity"] = name;
      j["order"] = rep.order;
      j["holds"] = rep.holds;
      if (rep.first_mismatch) j["first_mismatch"] = *rep.first_mismatch;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (rep.holds ? "PASS" : "FAIL") << " " << name
                << " series identity up to q^" << rep.order << "\n";
    }
    return rep.holds ? 0 : 1;
  }
  auto which = lgorb::theta_series_by_name(name);
  if (!which)
    throw lgorb::Error("unknown series '" + name +
                       "' (phi, psi, c333, a244, b244, z3, z4)");
  lgorb::TruncatedSeries s = lgorb::theta_series(*which, order);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["series"] = name;
    j["order"] = order;
    json coeffs = json::object();
    for (const auto& [e, c] : s.coeffs())
      coeffs[std::to_string(e)] = lgorb::to_string(c);
    j["coeffs"] = coeffs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << s.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of orbifold Jacobian algebra products "
               "for three elliptic orbisphere potentials"};
  app.require_subcommand(1);

  std::string case_name = "all";
  int series_order = 200;
  bool as_json = false;
  int h = 1, hprime = 1;
  bool reduced = false;
  std::string poly, series_name;
  std::string order_name = "grlex";

  app.set_help_flag("--help", "print help");

  auto add_common = [&](CLI::App* sub, bool with_case) {
    sub->set_help_flag("--help", "print help");
    sub->add_flag("--json", as_json, "machine-readable output");
    if (with_case)
      sub->add_option("--case", case_name, "z3, z4, z6 or all")
          ->default_str("all");
    sub->add_option("--order", order_name, "monomial order (grlex only)")
        ->check(CLI::IsMember({"grlex"}));
  };

  auto* verify = app.add_subcommand("verify", "run the case verifications");
  add_common(verify, true);
  verify->add_option("--series-order", series_order,
                     "q-series truncation order");

  auto* sigma = app.add_subcommand("sigma", "print a structure constant");
  add_common(sigma, true);
  sigma->add_option("--h", h, "first sector exponent")->required();
  sigma->add_option("--hprime", hprime, "second sector exponent")->required();
  sigma->add_flag("--reduced", reduced, "reduce in the product sector");

  auto* jacobian = app.add_subcommand("jacobian", "inspect a Jacobian ring");
  add_common(jacobian, true);

  auto* reduce = app.add_subcommand("reduce", "normal form of an expression");
  add_common(reduce, true);
  reduce->add_option("--poly", poly, "expression to reduce")->required();

  auto* series = app.add_subcommand("series", "print or check q-series");
  add_common(series, false);
  series->add_option("--name", series_name,
                     "phi, psi, c333, a244, b244, or identity z3/z4")
      ->required();
  series->add_option("--series-order", series_order,
                     "truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(case_name, series_order, as_json);
    if (sigma->parsed()) {
      if (case_name == "all")
        throw lgorb::Error("sigma needs a concrete --case");
      return run_sigma(case_name, h, hprime, reduced, as_json);
    }
    if (jacobian->parsed()) {
      if (case_name == "all")
        throw lgorb::Error("jacobian needs a concrete --case");
      return run_jacobian(case_name, as_json);
    }
    if (reduce->parsed()) {
      if (case_name == "all")
        throw lgorb::Error("reduce needs a concrete --case");
      return run_reduce(case_name, poly, as_json);
    }
    if (series->parsed()) return run_series(series_name, series_order, as_json);
  } catch (const lgorb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
