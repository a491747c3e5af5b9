#ifndef VECPEN_PENALISATION_HPP
#define VECPEN_PENALISATION_HPP

#include <optional>
#include <string>

#include "vecpen/efficiency.hpp"
#include "vecpen/instance.hpp"

namespace vecpen {

/// Level-set identities for the penalisation nu on S inside U (S <= U <= D):
///   A1: for every boundary point x0, { nu <= nu(x0) } over U equals S
///   A2: for every boundary point x0, { nu  = nu(x0) } over U equals bd S
///   A3: for every feasible point x0, both the equality and the sublevel set
///       at nu(x0) over U equal S
/// A1/A2 are Inapplicable when the sample has no boundary-tagged points.
enum class PropertyStatus { Holds, Fails, Inapplicable };

struct PropertyWitness {
  int x0 = -1;        // level point whose level set misbehaves
  int offender = -1;  // element of the symmetric difference
  std::string note;
};

struct PropertyVerdict {
  PropertyStatus status = PropertyStatus::Inapplicable;
  std::optional<PropertyWitness> witness;
  bool holds() const { return status == PropertyStatus::Holds; }
};

PropertyVerdict check_A1(const Instance& inst, const IndexSet& U, const Tolerances& tol = {});
PropertyVerdict check_A2(const Instance& inst, const IndexSet& U, const Tolerances& tol = {});
PropertyVerdict check_A3(const Instance& inst, const IndexSet& U, const Tolerances& tol = {});

enum class DerivedStatus { Verified, Violated, Skipped };

/// Level-set consequences, each gated on its base property:
///   under A1:        { nu < nu(x0) } over U is contained in int S
///   under A1 and A2: { nu < nu(x0) } over U equals int S
///   under A3:        { nu < nu(x0) } over U is empty for feasible x0
/// A Violated entry here contradicts a proven statement, so the suite treats
/// it as build-breaking.
struct DerivedConsequences {
  DerivedStatus strict_sublevel_in_interior = DerivedStatus::Skipped;
  DerivedStatus strict_sublevel_is_interior = DerivedStatus::Skipped;
  DerivedStatus strict_sublevel_empty = DerivedStatus::Skipped;
  std::string detail;
};

DerivedConsequences check_derived_consequences(const Instance& inst, const IndexSet& U,
                                               const PropertyVerdict& a1,
                                               const PropertyVerdict& a2,
                                               const PropertyVerdict& a3,
                                               const Tolerances& tol = {});

struct PenalisationPropertyReport {
  PropertyVerdict a1, a2, a3;
  DerivedConsequences derived;
};

PenalisationPropertyReport check_penalisation_properties(const Instance& inst, const IndexSet& U,
                                                         const Tolerances& tol = {});

}  // namespace vecpen

#endif  // VECPEN_PENALISATION_HPP
