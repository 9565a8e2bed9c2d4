#ifndef LGORB_CASES_HPP
#define LGORB_CASES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgorb/qseries.hpp"
#include "lgorb/twist.hpp"

namespace lgorb {

enum class CaseName { kZ3, kZ4, kZ6 };

std::optional<CaseName> case_by_name(const std::string& name);
std::string to_string(CaseName name);

/// One built-in orbifold: potential, group action, quasi-homogeneous
/// weights, and the two divisor classes feeding the point-class product.
/// The class coefficients carry an explicit 1/cL factor.
struct CaseDefinition {
  CaseName name;
  LGOrbifold orbifold;
  std::vector<int> weights;
  int expected_mu;
  int cl_param;  // index of cL in the parameter ring
  TwistedElement ks_h, ks_v;
  std::optional<SeriesCase> series;  // the q-series identity, if one exists

  const PolyRingPtr& ring() const { return orbifold.ring(); }
};

CaseDefinition builtin_case(CaseName name);

/// Jacobian ring of the full potential with the case weights attached.
JacobianRing case_jacobian(const CaseDefinition& def);

/// cL^2 * (ks_h product ks_v), expanded distributively over sectors. The
/// cL factors must cancel identically; a surviving cL raises
/// InternalConsistencyError.
TwistedElement ks_point_class(const CaseDefinition& def);

struct CheckReport {
  bool ok = false;
  std::string lhs, rhs;
  std::vector<std::string> notes;
};

/// Identity-sector point class against -det Hess(W)/(|G|*mu), compared as
/// normal forms.
CheckReport verify_main_theorem(const CaseDefinition& def);

/// -residue(|G| * point class) = 1 (the n=3 pairing sign is -1).
CheckReport verify_trace(const CaseDefinition& def);

/// The displayed reduction relations as normal-form equalities.
CheckReport verify_reductions(const CaseDefinition& def);

struct CaseReport {
  CaseName name;
  int mu = 0;
  int group_order = 0;
  CheckReport theorem, trace, reductions;
  bool series_applicable = false;
  SeriesIdentityReport series;

  bool series_ok() const { return !series_applicable || series.holds; }
  bool all_ok() const {
    return theorem.ok && trace.ok && reductions.ok && series_ok();
  }
};

CaseReport verify_case(const CaseDefinition& def, int series_order = 200);

}  // namespace lgorb

#endif
