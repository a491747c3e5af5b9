#ifndef VECPEN_EFFICIENCY_HPP
#define VECPEN_EFFICIENCY_HPP

#include <map>
#include <optional>
#include <vector>

#include "vecpen/cone.hpp"
#include "vecpen/instance.hpp"
#include "vecpen/types.hpp"

namespace vecpen {

/// Excluded points carry the index that beats them and the improvement
/// direction f(excluded) - f(by), which re-verifies under relate().
struct DominanceWitness {
  int by = -1;
  Vector direction;
};

struct EffResult {
  IndexSet set;
  std::map<int, DominanceWitness> witnesses;  // for excluded subset members
};

/// x is kept iff no y in the subset satisfies f(x) - f(y) in K \ {0}.
/// Pairwise sweep over the subset; candidates are judged independently, so
/// the sweep parallelises over candidates (set VECPEN_THREADS).
EffResult efficient_set(const std::vector<Vector>& values, const IndexSet& subset,
                        const Cone& cone, const Tolerances& tol = {});

/// x is kept iff no y satisfies f(x) - f(y) in int K. Requires nonempty
/// interior. Equals efficient_set under int_union_zero(cone); both routes
/// are exercised by the test suite.
EffResult weakly_efficient_set(const std::vector<Vector>& values, const IndexSet& subset,
                               const Cone& cone, const Tolerances& tol = {});

struct ConeCertificate {
  double eps = 0.0;  // smallest family parameter that certified membership
};

/// Per family member, one witness that excludes the point from that member's
/// efficient set. A point absent from every member is only known to lack a
/// certificate in this family; membership with respect to some cone outside
/// the sweep remains possible.
struct PeffExclusion {
  std::vector<std::pair<double, int>> per_member;  // (eps, witness index)
};

struct PeffResult {
  IndexSet set;                               // union of member efficient sets
  std::map<int, ConeCertificate> certificates;
  std::map<int, PeffExclusion> exclusions;
  IndexSet via_weakly;                        // union of member weakly efficient sets
  bool routes_agree = false;                  // set == via_weakly
};

PeffResult henig_peff_set(const std::vector<Vector>& values, const IndexSet& subset,
                          const DilatingFamily& family, const Tolerances& tol = {});

enum class Cmp { LessEq, Eq, Less };

/// { s in subset : nu(s) cmp threshold }, with the membership tolerance
/// applied on the comparison.
IndexSet level_set(const std::vector<double>& nu, const IndexSet& subset, Cmp cmp,
                   double threshold, const Tolerances& tol = {});

struct OracleResult {
  IndexSet set;
  double weight_bound = 0.0;       // smallest normalised weight over the grid
  bool inclusion_expected = false; // family reaches below the bound
};

/// Independent cross-check for orthant instances: union over strictly
/// positive weight vectors of the argmin of w . f (ties kept within
/// tolerance). Every oracle point is properly efficient; the inclusion in
/// the family answer is guaranteed once the family contains a member with
/// parameter below weight_bound.
OracleResult scalarization_oracle(const std::vector<Vector>& values, const IndexSet& subset,
                                  const std::vector<Vector>& weights,
                                  const DilatingFamily* family = nullptr,
                                  const Tolerances& tol = {});

/// Strictly positive weight vectors on the simplex, `per_axis` steps.
std::vector<Vector> simplex_weight_grid(int dim, int per_axis);

/// Index sets and certificates for one ground set of an instance.
struct EfficiencyReport {
  IndexSet eff, weff, peff;
  std::map<int, DominanceWitness> eff_witnesses;
  std::map<int, DominanceWitness> weff_witnesses;
  std::map<int, ConeCertificate> peff_certificates;
  std::map<int, PeffExclusion> peff_exclusions;
  IndexSet peff_via_weakly;
  bool peff_routes_agree = false;
};

EfficiencyReport analyze_ground_set(const std::vector<Vector>& values, const IndexSet& subset,
                                    const Cone& cone, const DilatingFamily& family,
                                    const Tolerances& tol = {});

}  // namespace vecpen

#endif  // VECPEN_EFFICIENCY_HPP
