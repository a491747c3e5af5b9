#include "vecpen/convexity.hpp"

#include <algorithm>
#include <cmath>

namespace vecpen {

namespace {

constexpr double kLineTol = 1e-9;

double min_spacing(const std::vector<Vector>& points, const IndexSet& subset) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      best = std::min(best, (points[subset[a]] - points[subset[b]]).norm());
  return best;
}

struct Snap {
  int idx;        // sample index of the snapped point
  double lambda;  // parameter of the snapped point on the segment
};

// Nearest sample point to lambda*x1 + (1-lambda)*x2, accepted only when it
// lies on the open segment (within collinearity tolerance) and within
// snap_radius of the requested combination. Evaluating the relation at the
// snapped parameter keeps the test sound: it is still an instance of the
// defining inequality, just at a slightly different lambda.
std::optional<Snap> snap_to_segment(const std::vector<Vector>& points, const IndexSet& subset,
                                    int i1, int i2, double lambda, double snap_radius) {
  const Vector& p1 = points[i1];
  const Vector& p2 = points[i2];
  Vector dir = p1 - p2;
  double len2 = dir.squaredNorm();
  if (len2 <= kLineTol * kLineTol) return std::nullopt;
  Vector z = lambda * p1 + (1.0 - lambda) * p2;

  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int idx : subset) {
    double d = (points[idx] - z).norm();
    if (d < best_d) {
      best_d = d;
      best = idx;
    }
  }
  if (best < 0 || best_d > snap_radius) return std::nullopt;

  double lam = (points[best] - p2).dot(dir) / len2;
  if (!(lam > kLineTol && lam < 1.0 - kLineTol)) return std::nullopt;
  Vector on_line = p2 + lam * dir;
  if ((points[best] - on_line).norm() > kLineTol * (1.0 + on_line.norm())) return std::nullopt;
  return Snap{best, lam};
}

bool leq_A(const ConvexityRelation& arel, const Vector& lhs, const Vector& rhs,
           const Tolerances& tol) {
  return relate(arel.rel, arel.cone, lhs, rhs, tol);
}

}  // namespace

ConvexityVerdict check_A_convex(const Instance& inst, const IndexSet& subset,
                                const ConvexityRelation& arel, int max_pairs,
                                const std::vector<double>& lambda_grid, const Tolerances& tol) {
  if (subset.size() < 2) throw InconclusiveCheck("check_A_convex: subset too small");
  const auto values = objective_table(inst);
  const double snap_radius = 0.5 * min_spacing(inst.points, subset);

  const long total_pairs = static_cast<long>(subset.size()) * (subset.size() - 1) / 2;
  const long stride = std::max(1L, total_pairs / std::max(1, max_pairs));

  ConvexityVerdict verdict;
  long pair_counter = 0;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (pair_counter++ % stride != 0) continue;
      int i1 = subset[a], i2 = subset[b];
      for (double lambda : lambda_grid) {
        auto snap = snap_to_segment(inst.points, subset, i1, i2, lambda, snap_radius);
        if (!snap) {
          ++verdict.skipped;
          continue;
        }
        ++verdict.tested;
        Vector combo = snap->lambda * values[i1] + (1.0 - snap->lambda) * values[i2];
        if (!leq_A(arel, values[snap->idx], combo, tol)) {
          verdict.status = ConvexityStatus::Refuted;
          verdict.witness = ConvexityWitness{i1, i2, snap->lambda, snap->idx};
          return verdict;
        }
      }
    }
  if (verdict.tested == 0)
    throw InconclusiveCheck("check_A_convex: no combination was snappable to the sample");
  return verdict;
}

WeakQuasiVerdict check_weak_A_quasiconvex(const Instance& inst, const IndexSet& subset,
                                          const ConvexityRelation& arel, int max_pairs,
                                          int segment_grid, const Tolerances& tol) {
  if (subset.size() < 2)
    return {ConvexityVerdict{ConvexityStatus::PassedSamples, 0, 0, std::nullopt}, true};
  const auto values = objective_table(inst);
  const double snap_radius = 0.5 * min_spacing(inst.points, subset);

  std::vector<double> lambdas;
  lambdas.push_back(1.0);  // the anchor itself belongs to the half-open segment
  for (int k = 1; k <= segment_grid; ++k)
    lambdas.push_back(static_cast<double>(k) / (segment_grid + 1));

  // Returns true when every snappable sample of [x0, x2) satisfies the
  // relation against f(x2).
  auto anchor_works = [&](int x0, int x2, long& skipped) {
    if (x0 == x2) return false;
    for (double lambda : lambdas) {
      int idx;
      double lam;
      if (lambda == 1.0) {
        idx = x0;
      } else {
        auto snap = snap_to_segment(inst.points, subset, x0, x2, lambda, snap_radius);
        if (!snap) {
          ++skipped;
          continue;
        }
        idx = snap->idx;
        lam = snap->lambda;
        (void)lam;
      }
      if (!leq_A(arel, values[idx], values[x2], tol)) return false;
    }
    return true;
  };

  WeakQuasiVerdict out;
  const long total_pairs = static_cast<long>(subset.size()) * (subset.size() - 1);
  const long stride = std::max(1L, total_pairs / std::max(1, max_pairs));
  long pair_counter = 0;
  for (int i1 : subset)
    for (int i2 : subset) {
      if (i1 == i2) continue;
      if (pair_counter++ % stride != 0) continue;
      if (!leq_A(arel, values[i1], values[i2], tol)) continue;
      ++out.verdict.tested;
      if (anchor_works(i1, i2, out.verdict.skipped)) continue;
      out.x1_sufficed = false;
      bool found = false;
      for (int cand : subset) {
        if (cand == i2 || cand == i1) continue;
        if (anchor_works(cand, i2, out.verdict.skipped)) {
          found = true;
          break;
        }
      }
      if (!found) {
        out.verdict.status = ConvexityStatus::Refuted;
        out.verdict.witness = ConvexityWitness{i1, i2, -1.0, -1};
        return out;
      }
    }
  return out;
}

ImplicationResult check_convexity_implication(const Instance& inst, const IndexSet& subset,
                                              const ConvexityRelation& arel,
                                              const Tolerances& tol) {
  ImplicationResult out;
  try {
    out.a_convex = check_A_convex(inst, subset, arel, 4000, {0.25, 0.5, 0.75}, tol);
  } catch (const InconclusiveCheck&) {
    out.applicable = false;
    out.holds = true;
    return out;
  }
  if (!out.a_convex.passed()) {
    out.applicable = false;
    out.holds = true;  // implication with a failed premise
    return out;
  }
  out.applicable = true;
  out.weak = check_weak_A_quasiconvex(inst, subset, arel, 2000, 16, tol);
  out.holds = out.weak.verdict.passed() && out.weak.x1_sufficed;
  return out;
}

}  // namespace vecpen
