#ifndef VECPEN_CONVEXITY_HPP
#define VECPEN_CONVEXITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "vecpen/cone.hpp"
#include "vecpen/instance.hpp"

namespace vecpen {

/// The comparison set A of the generalised convexity notions, one of
/// {K, K \ {0}, int K} for a cone K, expressed through the induced relation.
struct ConvexityRelation {
  Cone cone;
  Relation rel = Relation::Leq;
};

enum class ConvexityStatus { PassedSamples, Refuted };

struct ConvexityWitness {
  int x1 = -1, x2 = -1;
  double lambda = -1.0;  // -1 for pair-level refutations
  int snapped = -1;      // sample index of the tested combination
};

/// These checkers refute; a pass only says no sampled violation was found.
/// Combinations of sample points rarely land on the sample, so each tested
/// combination is snapped to the nearest sample point on the segment and the
/// relation is evaluated at the snapped parameter. Triples with no usable
/// snap are skipped and counted, so a pass is never silently vacuous.
struct ConvexityVerdict {
  ConvexityStatus status = ConvexityStatus::PassedSamples;
  long tested = 0;
  long skipped = 0;
  std::optional<ConvexityWitness> witness;
  bool passed() const { return status == ConvexityStatus::PassedSamples; }
};

struct InconclusiveCheck : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// f(lambda x1 + (1-lambda) x2) <=_A lambda f(x1) + (1-lambda) f(x2) over
/// sampled pairs and the lambda grid. Throws InconclusiveCheck when nothing
/// was testable.
ConvexityVerdict check_A_convex(const Instance& inst, const IndexSet& subset,
                                const ConvexityRelation& arel, int max_pairs = 4000,
                                const std::vector<double>& lambda_grid = {0.25, 0.5, 0.75},
                                const Tolerances& tol = {});

/// For each ordered improving pair (f(x1) <=_A f(x2)), search an anchor x0
/// whose half-open segment toward x2 satisfies the relation at every sampled
/// point. x1 itself is tried first; `x1_sufficed` reports whether it always
/// worked.
struct WeakQuasiVerdict {
  ConvexityVerdict verdict;
  bool x1_sufficed = true;
};

WeakQuasiVerdict check_weak_A_quasiconvex(const Instance& inst, const IndexSet& subset,
                                          const ConvexityRelation& arel, int max_pairs = 2000,
                                          int segment_grid = 16, const Tolerances& tol = {});

/// A-convex on samples implies weakly A-quasiconvex on samples with the
/// anchor x0 = x1; a counterexample to that implication is build-breaking.
struct ImplicationResult {
  bool holds = true;
  bool applicable = false;  // the premise passed
  ConvexityVerdict a_convex;
  WeakQuasiVerdict weak;
};

ImplicationResult check_convexity_implication(const Instance& inst, const IndexSet& subset,
                                              const ConvexityRelation& arel,
                                              const Tolerances& tol = {});

}  // namespace vecpen

#endif  // VECPEN_CONVEXITY_HPP
