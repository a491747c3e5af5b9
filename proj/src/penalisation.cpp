#include "vecpen/penalisation.hpp"

#include <algorithm>

namespace vecpen {

namespace {

// First element of the symmetric difference, preferring got \ want.
std::optional<int> first_mismatch(const IndexSet& got, const IndexSet& want) {
  IndexSet extra = set_difference(got, want);
  if (!extra.empty()) return extra.front();
  IndexSet missing = set_difference(want, got);
  if (!missing.empty()) return missing.front();
  return std::nullopt;
}

void check_U(const Instance& inst, const IndexSet& U, bool need_boundary) {
  if (U.empty()) throw InvalidInput("penalisation check: U is empty");
  for (int idx : U)
    if (idx < 0 || idx >= static_cast<int>(inst.points.size()))
      throw InvalidInput("penalisation check: U index out of range");
  if (!is_subset(inst.feasible, U))
    throw InvalidInput("penalisation check: the feasible set must be contained in U");
  if (need_boundary && !is_subset(boundary_indices(inst), U))
    throw InvalidInput("penalisation check: boundary points must be contained in U");
}

}  // namespace

PropertyVerdict check_A1(const Instance& inst, const IndexSet& U, const Tolerances& tol) {
  check_U(inst, U, true);
  IndexSet boundary = boundary_indices(inst);
  if (boundary.empty()) return {PropertyStatus::Inapplicable, std::nullopt};
  std::vector<double> nu = penalisation_table(inst);
  for (int x0 : boundary) {
    IndexSet lev = level_set(nu, U, Cmp::LessEq, nu[x0], tol);
    if (lev != inst.feasible) {
      auto off = first_mismatch(lev, inst.feasible);
      return {PropertyStatus::Fails,
              PropertyWitness{x0, off.value_or(-1), "sublevel set differs from the feasible set"}};
    }
  }
  return {PropertyStatus::Holds, std::nullopt};
}

PropertyVerdict check_A2(const Instance& inst, const IndexSet& U, const Tolerances& tol) {
  check_U(inst, U, true);
  IndexSet boundary = boundary_indices(inst);
  if (boundary.empty()) return {PropertyStatus::Inapplicable, std::nullopt};
  std::vector<double> nu = penalisation_table(inst);
  for (int x0 : boundary) {
    IndexSet lev = level_set(nu, U, Cmp::Eq, nu[x0], tol);
    if (lev != boundary) {
      auto off = first_mismatch(lev, boundary);
      return {PropertyStatus::Fails,
              PropertyWitness{x0, off.value_or(-1), "level set differs from the boundary"}};
    }
  }
  return {PropertyStatus::Holds, std::nullopt};
}

PropertyVerdict check_A3(const Instance& inst, const IndexSet& U, const Tolerances& tol) {
  check_U(inst, U, false);
  std::vector<double> nu = penalisation_table(inst);
  for (int x0 : inst.feasible) {
    IndexSet eq = level_set(nu, U, Cmp::Eq, nu[x0], tol);
    if (eq != inst.feasible) {
      auto off = first_mismatch(eq, inst.feasible);
      return {PropertyStatus::Fails,
              PropertyWitness{x0, off.value_or(-1), "level set differs from the feasible set"}};
    }
    IndexSet le = level_set(nu, U, Cmp::LessEq, nu[x0], tol);
    if (le != inst.feasible) {
      auto off = first_mismatch(le, inst.feasible);
      return {PropertyStatus::Fails,
              PropertyWitness{x0, off.value_or(-1), "sublevel set differs from the feasible set"}};
    }
  }
  return {PropertyStatus::Holds, std::nullopt};
}

DerivedConsequences check_derived_consequences(const Instance& inst, const IndexSet& U,
                                               const PropertyVerdict& a1,
                                               const PropertyVerdict& a2,
                                               const PropertyVerdict& a3,
                                               const Tolerances& tol) {
  DerivedConsequences out;
  std::vector<double> nu = penalisation_table(inst);
  IndexSet boundary = boundary_indices(inst);
  IndexSet interior = interior_indices(inst);

  if (a1.holds() && !boundary.empty()) {
    out.strict_sublevel_in_interior = DerivedStatus::Verified;
    for (int x0 : boundary) {
      IndexSet lev = level_set(nu, U, Cmp::Less, nu[x0], tol);
      if (!is_subset(lev, interior)) {
        out.strict_sublevel_in_interior = DerivedStatus::Violated;
        out.detail = "strict sublevel at boundary point " + std::to_string(x0) +
                     " escapes the interior";
        break;
      }
    }
  }

  if (a1.holds() && a2.holds() && !boundary.empty()) {
    out.strict_sublevel_is_interior = DerivedStatus::Verified;
    for (int x0 : boundary) {
      IndexSet lev = level_set(nu, U, Cmp::Less, nu[x0], tol);
      if (lev != interior) {
        out.strict_sublevel_is_interior = DerivedStatus::Violated;
        out.detail = "strict sublevel at boundary point " + std::to_string(x0) +
                     " differs from the interior";
        break;
      }
    }
  }

  if (a3.holds()) {
    out.strict_sublevel_empty = DerivedStatus::Verified;
    for (int x0 : inst.feasible) {
      IndexSet lev = level_set(nu, U, Cmp::Less, nu[x0], tol);
      if (!lev.empty()) {
        out.strict_sublevel_empty = DerivedStatus::Violated;
        out.detail = "strict sublevel at feasible point " + std::to_string(x0) + " is nonempty";
        break;
      }
    }
  }

  return out;
}

PenalisationPropertyReport check_penalisation_properties(const Instance& inst, const IndexSet& U,
                                                         const Tolerances& tol) {
  PenalisationPropertyReport report;
  report.a1 = check_A1(inst, U, tol);
  report.a2 = check_A2(inst, U, tol);
  report.a3 = check_A3(inst, U, tol);
  report.derived = check_derived_consequences(inst, U, report.a1, report.a2, report.a3, tol);
  return report;
}

}  // namespace vecpen
