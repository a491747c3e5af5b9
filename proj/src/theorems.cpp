#include "vecpen/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace vecpen {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Verified:
      return "Verified";
    case Conclusion::Violated:
      return "Violated";
    case Conclusion::Skipped:
      return "SkippedHypothesisFailed";
  }
  return "?";
}

namespace {

std::string ids(const IndexSet& s, std::size_t cap = 8) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size() && i < cap; ++i) os << (i ? "," : "") << s[i];
  if (s.size() > cap) os << ",...";
  os << "}";
  return os.str();
}

bool require_subset(const IndexSet& a, const IndexSet& b, const std::string& what,
                    std::string& detail) {
  if (is_subset(a, b)) return true;
  detail = what + " fails; offending indices " + ids(set_difference(a, b));
  return false;
}

bool require_equal(const IndexSet& a, const IndexSet& b, const std::string& what,
                   std::string& detail) {
  if (a == b) return true;
  detail = what + " fails; left-only " + ids(set_difference(a, b)) + ", right-only " +
           ids(set_difference(b, a));
  return false;
}

std::vector<Vector> pseudo_random_vectors(int dim, int count, double scale,
                                          std::uint64_t seed = 0x2545f4914f6cdd1dull) {
  std::mt19937_64 eng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i)
      v(i) = scale * (2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TheoremVerdict verify_subset_theorem(const Instance& inst, const std::vector<IndexSet>& u_chain,
                                     const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "subset_monotonicity";
  IndexSet D = all_indices(inst);
  for (const auto& U : u_chain)
    if (!is_subset(inst.feasible, U) || !is_subset(U, D))
      throw InvalidInput("verify_subset_theorem: chain must satisfy S <= U <= D");
  v.hypotheses.push_back({"chain S <= U <= D", true, ""});

  const auto f = objective_table(inst);
  IndexSet global = henig_peff_set(f, D, inst.family, tol).set;
  IndexSet lhs = set_intersection(inst.feasible, global);
  v.conclusion = Conclusion::Verified;
  for (const auto& U : u_chain) {
    IndexSet over_u = henig_peff_set(f, U, inst.family, tol).set;
    std::string detail;
    if (!require_subset(lhs, over_u, "S ∩ PEff(D) ⊆ PEff(U)", detail)) {
      v.conclusion = Conclusion::Violated;
      v.detail = detail;
      return v;
    }
  }
  return v;
}

TheoremVerdict verify_convex_barrier(const Instance& inst, const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "convex_barrier";
  IndexSet D = all_indices(inst);

  bool tags = !inst.topo_tags.empty();
  v.hypotheses.push_back({"topological tags present", tags, ""});

  bool convex = false;
  std::string note;
  if (tags) {
    try {
      ConvexityVerdict cv =
          check_A_convex(inst, D, ConvexityRelation{inst.cone, Relation::Leq}, 4000,
                         {0.25, 0.5, 0.75}, tol);
      convex = cv.passed();
      if (!convex) note = "refuted on samples";
    } catch (const InconclusiveCheck& e) {
      note = e.what();
    }
  }
  v.hypotheses.push_back({"objective cone-convex on the sample", convex, note});
  if (!tags || !convex) {
    v.conclusion = Conclusion::Skipped;
    return v;
  }

  const auto f = objective_table(inst);
  IndexSet peff_S = henig_peff_set(f, inst.feasible, inst.family, tol).set;
  IndexSet peff_D = henig_peff_set(f, D, inst.family, tol).set;
  IndexSet interior = interior_indices(inst);
  IndexSet boundary = boundary_indices(inst);

  std::string detail;
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  if (!require_subset(set_intersection(interior, peff_S), set_intersection(interior, peff_D),
                      "int S ∩ PEff(S) ⊆ int S ∩ PEff(D)", detail))
    return fail(detail);
  if (!require_subset(set_intersection(inst.feasible, peff_D), peff_S,
                      "S ∩ PEff(D) ⊆ PEff(S)", detail))
    return fail(detail);
  if (!require_subset(peff_S, set_union(set_intersection(interior, peff_D), boundary),
                      "PEff(S) ⊆ (int S ∩ PEff(D)) ∪ bd S", detail))
    return fail(detail);
  if (!require_subset(set_difference(peff_S, peff_D), boundary,
                      "PEff(S) \\ PEff(D) ⊆ bd S", detail))
    return fail(detail);
  if (boundary.empty() &&
      !require_equal(set_intersection(inst.feasible, peff_D), peff_S,
                     "open S: S ∩ PEff(D) = PEff(S)", detail))
    return fail(detail);

  v.conclusion = Conclusion::Verified;
  return v;
}

TheoremVerdict verify_loss_mechanism(const Instance& inst, const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "loss_mechanism";
  v.hypotheses.push_back({"matched lifted family", true, ""});

  const auto f = objective_table(inst);
  const auto fx = extended_objective_table(inst);
  const auto nu = penalisation_table(inst);
  DilatingFamily lifted = lift_family(inst.family, tol);

  IndexSet p_plain = henig_peff_set(f, inst.feasible, inst.family, tol).set;
  IndexSet p_ext = henig_peff_set(fx, inst.feasible, lifted, tol).set;
  IndexSet lost = set_difference(p_plain, p_ext);

  for (int xbar : lost) {
    bool witnessed = false;
    for (int y : inst.feasible)
      if (nu[y] < nu[xbar] - tol.mem) {
        witnessed = true;
        break;
      }
    if (!witnessed) {
      v.conclusion = Conclusion::Violated;
      v.detail = "lost point " + std::to_string(xbar) +
                 " has no feasible witness with smaller penalisation";
      return v;
    }
  }
  v.conclusion = Conclusion::Verified;
  v.detail = "lost points: " + ids(lost);
  return v;
}

TheoremVerdict verify_gain_mechanism(const Instance& inst, const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "gain_mechanism";
  v.hypotheses.push_back({"matched lifted family", true, ""});

  const auto f = objective_table(inst);
  const auto fx = extended_objective_table(inst);
  const auto nu = penalisation_table(inst);
  DilatingFamily lifted = lift_family(inst.family, tol);

  PeffResult plain = henig_peff_set(f, inst.feasible, inst.family, tol);
  PeffResult ext = henig_peff_set(fx, inst.feasible, lifted, tol);
  IndexSet gained = set_difference(ext.set, plain.set);

  // Witness-characterised set, family-relative: extended-problem members that
  // every family member excludes for f, with some member supplying an
  // improving witness at strictly larger penalisation value.
  IndexSet characterised;
  for (int xbar : ext.set) {
    if (set_contains(plain.set, xbar)) continue;
    bool witnessed = false;
    for (const auto& member : inst.family.members) {
      for (int y : inst.feasible) {
        if (!(nu[y] > nu[xbar] + tol.mem)) continue;
        if (relate(Relation::Lneq, member.cone, f[y], f[xbar], tol)) {
          witnessed = true;
          break;
        }
      }
      if (witnessed) break;
    }
    if (witnessed) characterised.push_back(xbar);
  }

  std::string detail;
  if (!require_equal(gained, characterised,
                     "family-relative gain equality (difference vs witness set)", detail)) {
    v.conclusion = Conclusion::Violated;
    v.detail = detail;
    return v;
  }

  // Exclusion witnesses re-verify: for every gained point and every family
  // member there is a dominating feasible point under that member.
  for (int xbar : gained) {
    auto it = plain.exclusions.find(xbar);
    if (it == plain.exclusions.end() ||
        it->second.per_member.size() != inst.family.members.size()) {
      v.conclusion = Conclusion::Violated;
      v.detail = "gained point " + std::to_string(xbar) + " lacks per-member exclusions";
      return v;
    }
    for (std::size_t m = 0; m < inst.family.members.size(); ++m) {
      int y = it->second.per_member[m].second;
      if (!relate(Relation::Lneq, inst.family.members[m].cone, f[y], f[xbar], tol)) {
        v.conclusion = Conclusion::Violated;
        v.detail = "exclusion witness fails re-verification at point " + std::to_string(xbar);
        return v;
      }
    }
  }

  v.conclusion = Conclusion::Verified;
  v.detail = "gained points: " + ids(gained);
  return v;
}

TheoremVerdict verify_main_decomposition(const Instance& inst, const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "penalisation_decomposition";
  IndexSet D = all_indices(inst);

  bool tags = !inst.topo_tags.empty();
  bool closed = feasible_sample_closed(inst);
  PropertyVerdict a1 = tags ? check_A1(inst, D, tol) : PropertyVerdict{};
  PropertyVerdict a3 = check_A3(inst, D, tol);
  v.hypotheses.push_back({"topological tags present", tags, ""});
  v.hypotheses.push_back({"feasible sample closed", closed, ""});
  v.hypotheses.push_back({"A1", a1.holds(), ""});
  v.hypotheses.push_back({"A3", a3.holds(), ""});

  if (!tags || !(a1.holds() || a3.holds())) {
    v.conclusion = Conclusion::Skipped;
    return v;
  }

  const auto f = objective_table(inst);
  const auto fx = extended_objective_table(inst);
  DilatingFamily lifted = lift_family(inst.family, tol);

  IndexSet peff_S = henig_peff_set(f, inst.feasible, inst.family, tol).set;
  IndexSet peff_D = henig_peff_set(f, D, inst.family, tol).set;
  IndexSet peff_ext_D = henig_peff_set(fx, D, lifted, tol).set;
  IndexSet interior = interior_indices(inst);
  IndexSet boundary = boundary_indices(inst);

  // Computed stand-in for the boundary localisation required by the final
  // equalities; convexity of the objective is one sufficient condition.
  bool boundary_localised = is_subset(set_difference(peff_S, peff_D), boundary);
  v.hypotheses.push_back({"PEff(S) \\ PEff(D) within boundary", boundary_localised,
                          "computed on this instance"});

  std::string detail;
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  IndexSet interior_part = set_intersection(interior, peff_D);
  IndexSet feasible_part = set_intersection(inst.feasible, peff_D);
  IndexSet boundary_part = set_intersection(boundary, peff_ext_D);

  if ((a1.holds() || (a3.holds() && closed)) && !boundary.empty()) {
    if (!require_subset(set_union(interior_part, boundary_part), peff_S,
                        "PEff(S) ⊇ (int S ∩ PEff(D)) ∪ (bd S ∩ PEff⊗(D))", detail))
      return fail(detail);
    if (!require_subset(set_union(feasible_part, boundary_part), peff_S,
                        "PEff(S) ⊇ (S ∩ PEff(D)) ∪ (bd S ∩ PEff⊗(D))", detail))
      return fail(detail);
  }

  if (a3.holds()) {
    if (!require_equal(peff_S, set_intersection(inst.feasible, peff_ext_D),
                       "PEff(S) = S ∩ PEff⊗(D)", detail))
      return fail(detail);
    if (closed && boundary_localised) {
      if (!require_equal(peff_S, set_union(interior_part, boundary_part),
                         "PEff(S) = (int S ∩ PEff(D)) ∪ (bd S ∩ PEff⊗(D))", detail))
        return fail(detail);
      if (!require_equal(peff_S, set_union(feasible_part, boundary_part),
                         "PEff(S) = (S ∩ PEff(D)) ∪ (bd S ∩ PEff⊗(D))", detail))
        return fail(detail);
    }
  }

  v.conclusion = Conclusion::Verified;
  return v;
}

// ---- lifted-cone fixtures ----

namespace {

struct LiftFixture {
  Cone base_cone;  // C
  Cone dilating;   // H, validated against C
  Vector direction;
};

std::vector<LiftFixture> lift_fixtures(const Tolerances& tol) {
  std::vector<LiftFixture> out;
  auto add = [&](const Cone& C, const Cone& H, double h_scale) {
    Vector h = h_scale * canonical_interior_point(H, tol);
    out.push_back({C, H, h});
  };
  for (int m = 1; m <= 4; ++m) {
    Cone C = Cone::orthant(m);
    Matrix eye = Matrix::Identity(m, m);
    for (double eps : {1e-3, 1.0, 1e3}) {
      Matrix rows = eye;
      rows.rowwise() += Vector(eps * Vector::Ones(m)).transpose();
      Cone H = Cone::halfspaces(rows);
      add(C, H, 1.0);
      if (eps == 1.0) add(C, H, 0.5);
    }
    for (double alpha : {0.25, 0.8}) add(C, Cone::bishop_phelps(Vector::Ones(m), alpha), 1.0);
  }
  for (int m : {2, 3}) {
    Matrix row(1, m);
    row.setOnes();
    add(Cone::orthant(m), Cone::halfspaces(row), 1.0);
    add(Cone::orthant(m), Cone::halfspaces(row), 2.0);
  }
  // The square-root-scaled cone pair: a norm cone over the plane orthant.
  add(Cone::orthant(2), Cone::bishop_phelps(Vector::Ones(2), std::sqrt(3.0) / 2.0), 1.0);
  return out;
}

}  // namespace

TheoremVerdict verify_lifted_cone_lemma(int samples_per_fixture, const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "lifted_cone_lemma";
  v.hypotheses.push_back({"fixtures valid", true, ""});

  auto fixtures = lift_fixtures(tol);
  v.detail = std::to_string(fixtures.size()) + " fixtures";
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
    const auto& fx = fixtures[fi];
    const int m = fx.base_cone.dim();
    auto tag = [&](const std::string& what) {
      return "fixture " + std::to_string(fi) + ": " + what;
    };

    DilatingCheck base_check =
        is_dilating_for(fx.base_cone, fx.dilating, default_ray_samples(fx.base_cone, tol), tol);
    if (!base_check.ok) return fail(tag("candidate does not dilate the base cone"));

    Cone lifted = lift_cone(fx.dilating, fx.direction, tol);
    Cone product = product_with_ray(fx.base_cone);
    DilatingCheck lift_check =
        is_dilating_for(product, lifted, default_ray_samples(product, tol), tol);
    if (!lift_check.ok) return fail(tag("lifted cone does not dilate the product cone"));

    Cone section = restrict_to_zero(lifted);
    if (!cone_equal(section, fx.dilating)) return fail(tag("zero-section is not the base"));
    if (!base_check.ok) return fail(tag("unreachable"));

    auto samples = pseudo_random_vectors(m, samples_per_fixture, 3.0,
                                         0x9e3779b97f4a7c15ull + fi);
    for (const auto& s : samples) {
      Vector at_zero(m + 1);
      at_zero << s, 0.0;
      if (contains(lifted, at_zero, tol) != contains(fx.dilating, s, tol))
        return fail(tag("horizontal section membership mismatch"));
      // section x ray inside the lifted cone, plain and interior versions
      for (double t : {0.0, 0.4, 1.7}) {
        Vector up(m + 1);
        up << s, t;
        if (contains(section, s, tol) && !contains(lifted, up, tol))
          return fail(tag("section x ray escapes the lifted cone"));
        if (interior_contains(section, s, tol) && !interior_contains(lifted, up, tol))
          return fail(tag("interior section x ray escapes the interior"));
      }
    }

    // Sections of product-space dilating cones dilate the base cone.
    DilatingCheck back =
        is_dilating_for(fx.base_cone, section, default_ray_samples(fx.base_cone, tol), tol);
    if (!back.ok) return fail(tag("zero-section does not dilate the base cone"));

    // A boundary direction must be rejected by the lift constructor.
    if (fx.base_cone.kind() == ConeKind::Orthant && fx.dilating.kind() == ConeKind::Halfspaces) {
      bool rejected = false;
      try {
        Vector bad = Vector::Zero(m);
        (void)lift_cone(Cone::orthant(m), bad, tol);
      } catch (const InvalidInput&) {
        rejected = true;
      }
      if (!rejected) return fail(tag("boundary lift direction was accepted"));
    }
  }

  v.conclusion = Conclusion::Verified;
  return v;
}

// ---- built-in example reproductions ----

namespace {

TheoremVerdict example_halfspace(const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "example:halfspace";
  v.hypotheses.push_back({"fixture", true, ""});
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  Matrix row(1, 2);
  row << 1.0, 0.0;
  Cone C = Cone::halfspaces(row);
  auto rays = default_ray_samples(C, tol);

  // Every pointed candidate must fail: it cannot hold both vertical rays in
  // its interior without absorbing the origin.
  std::vector<Cone> pointed = {
      Cone::orthant(2),
      Cone::bishop_phelps(Vector::Ones(2), 0.5),
      Cone::halfspaces([] {
        Matrix m(2, 2);
        m << 1.0, 0.2, 1.0, -0.2;
        return m;
      }()),
  };
  for (const auto& H : pointed)
    if (is_dilating_for(C, H, rays, tol).ok) return fail("a pointed candidate was accepted");
  if (!is_dilating_for(C, Cone::full_space(2), rays, tol).ok)
    return fail("the full space was rejected");

  for (FamilyKind kind : {FamilyKind::EpsilonDilation, FamilyKind::BishopPhelpsSweep}) {
    DilatingFamily fam = build_family(C, kind, default_eps_grid(), tol);
    if (fam.members.size() != 1 || fam.members.front().cone.kind() != ConeKind::FullSpace)
      return fail("sweep should leave only the full space");
    if (fam.rejected.size() != default_eps_grid().size())
      return fail("every finite candidate should be rejected");
  }

  v.conclusion = Conclusion::Verified;
  v.detail = "only the full space survives validation";
  return v;
}

TheoremVerdict example_bp(const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "example:bp";
  v.hypotheses.push_back({"fixture", true, ""});
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  const double alpha = std::sqrt(3.0) / 2.0;
  Cone big = Cone::bishop_phelps(Vector::Ones(3), alpha);
  Cone orthant3 = Cone::orthant(3);
  Cone product = product_with_ray(Cone::orthant(2));

  // The product of the plane orthant with the ray is the space orthant.
  for (const auto& s : pseudo_random_vectors(3, 400, 2.0))
    if (contains(product, s, tol) != contains(orthant3, s, tol))
      return fail("product cone does not match the orthant");

  if (!is_dilating_for(orthant3, big, default_ray_samples(orthant3, tol), tol).ok)
    return fail("the norm cone does not dilate the space orthant");

  Vector e1 = Vector::Zero(3);
  e1(0) = 1.0;
  if (!contains(big, e1, tol)) return fail("membership of a basis vector fails");

  Cone sect = restrict_to_zero(big);
  if (sect.kind() != ConeKind::BishopPhelps || sect.dim() != 2 ||
      sect.bp_alpha() != alpha)
    return fail("zero-section has the wrong shape");
  for (const auto& s : pseudo_random_vectors(2, 400, 2.0)) {
    Vector up(3);
    up << s, 0.0;
    if (contains(big, up, tol) != contains(sect, s, tol))
      return fail("zero-section membership mismatch");
  }
  if (!is_dilating_for(Cone::orthant(2), sect, default_ray_samples(Cone::orthant(2), tol), tol)
           .ok)
    return fail("zero-section does not dilate the plane orthant");

  Vector h = Vector::Ones(2);
  Cone lifted = lift_cone(sect, h, tol);
  for (const auto& s : pseudo_random_vectors(2, 400, 2.0)) {
    for (double t : {-1.0, -0.25, 0.0, 0.5, 2.0}) {
      Vector up(3);
      up << s, t;
      Vector shifted = s + t * h;
      bool direct = sect.bp_q().dot(shifted) >= alpha * shifted.norm() - tol.mem;
      if (contains(lifted, up, tol) != direct) return fail("lifted membership formula mismatch");
    }
  }
  if (!cone_equal(restrict_to_zero(lifted), sect)) return fail("lifted zero-section mismatch");
  if (!is_dilating_for(product, lifted, default_ray_samples(product, tol), tol).ok)
    return fail("lifted cone does not dilate the product cone");

  v.conclusion = Conclusion::Verified;
  return v;
}

Instance sqrt_instance(const Tolerances& tol) {
  Instance inst;
  inst.dim_x = 2;
  inst.dim_y = 2;
  inst.points.push_back(Vector::Zero(2));
  // Wedge sample 0 < x1, x1 <= x2, along and off the diagonal; the diagonal
  // reaches past the largest sweep parameter so lifted witnesses exist.
  for (int k = -6; k <= 21; ++k) {
    double n = std::pow(2.0, k);
    Vector d(2);
    d << n, n;
    inst.points.push_back(d);
    Vector off(2);
    off << n, 2.0 * n;
    inst.points.push_back(off);
  }
  inst.feasible.resize(inst.points.size());
  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) inst.feasible[i] = i;
  inst.objective.kind = ObjectiveSpec::Kind::SqrtExample;
  inst.penalisation.kind = PenalisationSpec::Kind::NegLinf;
  inst.cone = Cone::orthant(2);
  inst.family = build_family(inst.cone, FamilyKind::EpsilonDilation, default_eps_grid(), tol);
  validate_instance(inst);
  return inst;
}

TheoremVerdict example_sqrt(const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "example:sqrt";
  v.hypotheses.push_back({"fixture", true, ""});
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  Instance inst = sqrt_instance(tol);
  const auto f = objective_table(inst);
  const auto fx = extended_objective_table(inst);
  const int origin = 0;

  Matrix row(1, 2);
  row << 1.0, 1.0;
  Cone halfspace = Cone::halfspaces(row);
  if (!is_dilating_for(inst.cone, halfspace, default_ray_samples(inst.cone, tol), tol).ok)
    return fail("diagonal halfspace does not dilate the orthant");
  EffResult eff = efficient_set(f, inst.feasible, halfspace, tol);
  if (!set_contains(eff.set, origin)) return fail("origin not efficient for the halfspace");

  PeffResult plain = henig_peff_set(f, inst.feasible, inst.family, tol);
  if (!set_contains(plain.set, origin)) return fail("origin not properly efficient");

  // In the lifted problem every member admits a diagonal witness that
  // defeats the origin.
  DilatingFamily lifted = lift_family(inst.family, tol);
  for (const auto& member : lifted.members) {
    bool defeated = false;
    for (int y : inst.feasible) {
      if (y == origin) continue;
      Vector d = fx[origin] - fx[y];
      if (d.lpNorm<Eigen::Infinity>() > tol.mem && contains(member.cone, d, tol)) {
        defeated = true;
        break;
      }
    }
    if (!defeated) return fail("origin survives a lifted member");
  }
  PeffResult ext = henig_peff_set(fx, inst.feasible, lifted, tol);
  if (set_contains(ext.set, origin)) return fail("origin properly efficient after extension");

  for (int y : inst.feasible) {
    if (y == origin) continue;
    if (f[y].lpNorm<Eigen::Infinity>() <= tol.mem)
      return fail("a nonzero feasible point maps to the origin");
  }

  TheoremVerdict loss = verify_loss_mechanism(inst, tol);
  if (loss.conclusion != Conclusion::Verified) return fail("loss mechanism failed: " + loss.detail);

  v.conclusion = Conclusion::Verified;
  v.detail = "diagonal sample up to 2^21 (sweep tops out at 1e6)";
  return v;
}

Instance identity_instance(const Tolerances& tol) {
  Instance inst;
  inst.dim_x = 1;
  inst.dim_y = 1;
  inst.points.push_back(Vector::Zero(1));
  // Geometric grid of (0, 1] reaching below the square of the smallest sweep
  // parameter, so each lifted member sees a witness y <= eps^2.
  for (int k = 40; k >= 0; --k) inst.points.push_back(Vector::Constant(1, std::pow(2.0, -k)));
  inst.feasible.resize(inst.points.size());
  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) inst.feasible[i] = i;
  inst.objective.kind = ObjectiveSpec::Kind::Identity;
  inst.penalisation.kind = PenalisationSpec::Kind::NegSqrt;
  inst.cone = Cone::orthant(1);
  inst.family = explicit_family(inst.cone, {{1.0, Cone::orthant(1)}}, tol);
  validate_instance(inst);
  return inst;
}

TheoremVerdict example_identity(const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "example:identity";
  v.hypotheses.push_back({"fixture", true, ""});
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  Instance inst = identity_instance(tol);
  const auto f = objective_table(inst);
  const auto fx = extended_objective_table(inst);
  const auto nu = penalisation_table(inst);
  const int origin = 0;

  PeffResult plain = henig_peff_set(f, inst.feasible, inst.family, tol);
  if (plain.set != IndexSet{origin}) return fail("the minimum is not the only proper point");

  // Sweep of lift directions h = eps over the grid: the origin is defeated
  // in each lifted problem by any sampled witness with 0 < y <= eps^2, and
  // each such witness improves the penalisation while worsening f.
  for (double eps : default_eps_grid()) {
    Cone lifted = lift_cone(Cone::orthant(1), Vector::Constant(1, eps), tol);
    bool defeated = false;
    for (int y : inst.feasible) {
      if (y == origin) continue;
      double yv = inst.points[y](0);
      if (yv > eps * eps * (1.0 + 1e-12)) continue;
      Vector d = fx[origin] - fx[y];
      if (d.lpNorm<Eigen::Infinity>() > tol.mem && contains(lifted, d, tol)) {
        if (!(nu[y] < nu[origin] - tol.mem)) return fail("witness does not improve nu");
        if (!(f[y](0) > f[origin](0) + tol.mem)) return fail("witness does not worsen f");
        defeated = true;
        break;
      }
    }
    if (!defeated)
      return fail("no sampled witness below eps^2 defeats the origin at eps = " +
                  std::to_string(eps));
  }

  TheoremVerdict loss = verify_loss_mechanism(inst, tol);
  if (loss.conclusion != Conclusion::Verified) return fail("loss mechanism failed: " + loss.detail);

  v.conclusion = Conclusion::Verified;
  v.detail = "grid reaches 2^-40 < (1e-6)^2";
  return v;
}

TheoremVerdict example_saturn(const Tolerances& tol) {
  TheoremVerdict v;
  v.id = "example:saturn";
  v.hypotheses.push_back({"fixture", true, ""});
  auto fail = [&](const std::string& d) {
    v.conclusion = Conclusion::Violated;
    v.detail = d;
    return v;
  };

  Shape ball3 = Shape::ball(Vector::Zero(3), 1.0);
  Shape disk = Shape::product(Shape::ball(Vector::Zero(2), 2.0),
                              Shape::box(Vector::Zero(1), Vector::Zero(1)));
  Shape saturn = Shape::union_of({ball3, disk});

  std::vector<double> radii = {0.3, 0.5, 0.9, 1.2, 1.5, 1.9, 2.2, 3.0};
  Vector dir(2);
  dir << std::cos(0.7), std::sin(0.7);
  std::vector<Vector> probes;
  for (double r : radii) probes.push_back(r * dir);

  RestrictionReport rep = check_restriction_interior(saturn, 0.0, probes, tol);
  if (!rep.lhs_only.empty()) return fail("interior-then-restrict escaped restrict-then-interior");
  IndexSet expect = {3, 4, 5};  // radii strictly between the ball and the disk
  if (rep.rhs_only != expect)
    return fail("mismatch set is not exactly the open annulus: " + ids(rep.rhs_only));

  // The section at height zero is the wide disk.
  auto section = restrict_shape_at(saturn, 0.0, tol);
  Shape disk2 = Shape::ball(Vector::Zero(2), 2.0);
  for (const auto& p : pseudo_random_vectors(2, 300, 2.5))
    if (section(p) != shape_contains(disk2, p, tol)) return fail("section is not the wide disk");

  v.conclusion = Conclusion::Verified;
  return v;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"halfspace", "bp", "sqrt", "identity", "saturn"};
}

TheoremVerdict reproduce_paper_example(const std::string& name, const Tolerances& tol) {
  if (name == "halfspace") return example_halfspace(tol);
  if (name == "bp") return example_bp(tol);
  if (name == "sqrt") return example_sqrt(tol);
  if (name == "identity") return example_identity(tol);
  if (name == "saturn") return example_saturn(tol);
  throw InvalidInput("unknown example: " + name);
}

std::vector<TheoremVerdict> verify_all(const Instance& inst, const Tolerances& tol) {
  std::vector<TheoremVerdict> out;
  IndexSet D = all_indices(inst);
  IndexSet mid = inst.feasible;
  IndexSet rest = set_difference(D, inst.feasible);
  for (std::size_t i = 0; i < rest.size(); i += 2) mid.push_back(rest[i]);
  sort_unique(mid);
  out.push_back(verify_subset_theorem(inst, {inst.feasible, mid, D}, tol));
  out.push_back(verify_convex_barrier(inst, tol));
  out.push_back(verify_loss_mechanism(inst, tol));
  out.push_back(verify_gain_mechanism(inst, tol));
  out.push_back(verify_main_decomposition(inst, tol));
  return out;
}

}  // namespace vecpen
