#include "vecpen/efficiency.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace vecpen {

namespace {

int worker_count() {
  const char* env = std::getenv("VECPEN_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

// Static partition; each index is judged independently and results land in
// preallocated slots, so the outcome does not depend on the thread count.
template <typename Fn>
void parallel_over(int n, Fn&& fn) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

void check_values(const std::vector<Vector>& values, const IndexSet& subset, const char* where) {
  if (subset.empty()) throw InvalidInput(std::string(where) + ": subset is empty");
  for (int idx : subset)
    if (idx < 0 || idx >= static_cast<int>(values.size()))
      throw InvalidInput(std::string(where) + ": subset index out of range");
}

}  // namespace

EffResult efficient_set(const std::vector<Vector>& values, const IndexSet& subset,
                        const Cone& cone, const Tolerances& tol) {
  check_values(values, subset, "efficient_set");
  const int n = static_cast<int>(subset.size());
  std::vector<int> beaten_by(n, -1);
  parallel_over(n, [&](int k) {
    const Vector& fx = values[subset[k]];
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      Vector d = fx - values[subset[j]];
      if (d.lpNorm<Eigen::Infinity>() > tol.mem && contains(cone, d, tol)) {
        beaten_by[k] = j;
        break;
      }
    }
  });

  EffResult out;
  for (int k = 0; k < n; ++k) {
    if (beaten_by[k] < 0) {
      out.set.push_back(subset[k]);
    } else {
      int by = subset[beaten_by[k]];
      out.witnesses.emplace(subset[k], DominanceWitness{by, values[subset[k]] - values[by]});
    }
  }
  return out;
}

EffResult weakly_efficient_set(const std::vector<Vector>& values, const IndexSet& subset,
                               const Cone& cone, const Tolerances& tol) {
  check_values(values, subset, "weakly_efficient_set");
  canonical_interior_point(cone, tol);  // rejects cones with empty interior

  const int n = static_cast<int>(subset.size());
  std::vector<int> beaten_by(n, -1);
  parallel_over(n, [&](int k) {
    const Vector& fx = values[subset[k]];
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      if (interior_contains(cone, Vector(fx - values[subset[j]]), tol)) {
        beaten_by[k] = j;
        break;
      }
    }
  });

  EffResult out;
  for (int k = 0; k < n; ++k) {
    if (beaten_by[k] < 0) {
      out.set.push_back(subset[k]);
    } else {
      int by = subset[beaten_by[k]];
      out.witnesses.emplace(subset[k], DominanceWitness{by, values[subset[k]] - values[by]});
    }
  }
  return out;
}

PeffResult henig_peff_set(const std::vector<Vector>& values, const IndexSet& subset,
                          const DilatingFamily& family, const Tolerances& tol) {
  check_values(values, subset, "henig_peff_set");
  if (family.members.empty()) throw EmptyFamilyError("henig_peff_set: family has no members");

  PeffResult out;
  std::map<int, PeffExclusion> exclusions;
  for (int idx : subset) exclusions.emplace(idx, PeffExclusion{});

  for (const auto& member : family.members) {
    EffResult eff = efficient_set(values, subset, member.cone, tol);
    for (int idx : eff.set)
      if (!out.certificates.count(idx)) out.certificates.emplace(idx, ConeCertificate{member.eps});
    for (const auto& [idx, witness] : eff.witnesses)
      exclusions[idx].per_member.emplace_back(member.eps, witness.by);

    // The weakly efficient set with respect to a full space is empty by
    // definition (the origin lies in the interior), so that member
    // contributes nothing to the second route.
    if (member.cone.kind() != ConeKind::FullSpace) {
      EffResult weff = weakly_efficient_set(values, subset, member.cone, tol);
      out.via_weakly = set_union(out.via_weakly, weff.set);
    }
  }

  for (const auto& [idx, cert] : out.certificates) out.set.push_back(idx);
  sort_unique(out.set);
  for (int idx : subset)
    if (!out.certificates.count(idx)) out.exclusions.emplace(idx, std::move(exclusions[idx]));
  out.routes_agree = out.set == out.via_weakly;
  return out;
}

IndexSet level_set(const std::vector<double>& nu, const IndexSet& subset, Cmp cmp,
                   double threshold, const Tolerances& tol) {
  IndexSet out;
  for (int idx : subset) {
    if (idx < 0 || idx >= static_cast<int>(nu.size()))
      throw InvalidInput("level_set: subset index out of range");
    double v = nu[idx];
    bool keep = false;
    switch (cmp) {
      case Cmp::LessEq:
        keep = v <= threshold + tol.mem;
        break;
      case Cmp::Eq:
        keep = std::abs(v - threshold) <= tol.mem;
        break;
      case Cmp::Less:
        keep = v < threshold - tol.mem;
        break;
    }
    if (keep) out.push_back(idx);
  }
  return out;
}

std::vector<Vector> simplex_weight_grid(int dim, int per_axis) {
  if (dim < 1 || per_axis < 1) throw InvalidInput("simplex_weight_grid: bad arguments");
  std::vector<Vector> out;
  if (dim == 1) {
    out.push_back(Vector::Ones(1));
    return out;
  }
  // Strictly positive compositions of per_axis + dim into dim parts.
  std::vector<int> parts(dim, 1);
  parts[0] = per_axis + 1;
  const int total = per_axis + dim;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == dim - 1) {
      parts[pos] = remaining;
      Vector w(dim);
      for (int i = 0; i < dim; ++i) w(i) = static_cast<double>(parts[i]) / total;
      out.push_back(w);
      return;
    }
    for (int v = 1; v <= remaining - (dim - 1 - pos); ++v) {
      parts[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, total);
  return out;
}

OracleResult scalarization_oracle(const std::vector<Vector>& values, const IndexSet& subset,
                                  const std::vector<Vector>& weights,
                                  const DilatingFamily* family, const Tolerances& tol) {
  check_values(values, subset, "scalarization_oracle");
  if (weights.empty()) throw InvalidInput("scalarization_oracle: no weights");
  const int m = static_cast<int>(values[subset[0]].size());
  OracleResult out;
  out.weight_bound = std::numeric_limits<double>::infinity();
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != m)
      throw DimensionMismatch("scalarization_oracle: weight dimension mismatch");
    if (!(w.minCoeff() > 0))
      throw InvalidInput("scalarization_oracle: weights must be strictly positive");
    out.weight_bound = std::min(out.weight_bound, w.minCoeff() / w.sum());
    double best = std::numeric_limits<double>::infinity();
    for (int idx : subset) best = std::min(best, w.dot(values[idx]));
    for (int idx : subset)
      if (w.dot(values[idx]) <= best + tol.mem) out.set.push_back(idx);
  }
  sort_unique(out.set);
  if (family) {
    if (family->base.kind() != ConeKind::Orthant)
      throw UnsupportedRepresentation("scalarization_oracle: only orthant cones supported");
    // A weighted-sum minimiser stays efficient for the dilation with
    // parameter below min_i w_i / sum_i w_i, so the family certifies the
    // oracle set once its smallest parameter clears that bound.
    for (const auto& mem : family->members)
      if (mem.eps < out.weight_bound) {
        out.inclusion_expected = true;
        break;
      }
  }
  return out;
}

EfficiencyReport analyze_ground_set(const std::vector<Vector>& values, const IndexSet& subset,
                                    const Cone& cone, const DilatingFamily& family,
                                    const Tolerances& tol) {
  EfficiencyReport report;
  EffResult eff = efficient_set(values, subset, cone, tol);
  report.eff = std::move(eff.set);
  report.eff_witnesses = std::move(eff.witnesses);
  EffResult weff = weakly_efficient_set(values, subset, cone, tol);
  report.weff = std::move(weff.set);
  report.weff_witnesses = std::move(weff.witnesses);
  PeffResult peff = henig_peff_set(values, subset, family, tol);
  report.peff = std::move(peff.set);
  report.peff_certificates = std::move(peff.certificates);
  report.peff_exclusions = std::move(peff.exclusions);
  report.peff_via_weakly = std::move(peff.via_weakly);
  report.peff_routes_agree = peff.routes_agree;
  return report;
}

}  // namespace vecpen
