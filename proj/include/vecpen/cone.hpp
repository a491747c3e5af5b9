#ifndef VECPEN_CONE_HPP
#define VECPEN_CONE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vecpen/types.hpp"

namespace vecpen {

/// Tagged cone representation. Every kind exposes an analytic membership
/// predicate and an analytic interior predicate; composite kinds hold their
/// base cone by shared pointer, so copies are cheap and values immutable.
///
/// Kinds:
///   Orthant(m)        v_i >= 0 for all i
///   Halfspaces(W)     W v >= 0 row-wise (zero rows are not allowed)
///   Generators(G)     conic hull of the rows of G; converted to halfspace
///                     form at construction for dim <= 3, unsupported above
///   BishopPhelps      q.v >= alpha * |v| for a chosen norm, alpha >= 0
///   ProductWithRay    (v, t) with v in base and t >= 0
///   Lifted            (v, t) with v + t*h in base, h interior to base
///   IntUnionZero      interior of base plus the origin
///   FullSpace(m)      everything
enum class ConeKind {
  Orthant,
  Halfspaces,
  Generators,
  BishopPhelps,
  ProductWithRay,
  Lifted,
  IntUnionZero,
  FullSpace,
};

class Cone {
 public:
  Cone() : Cone(full_space(1)) {}

  static Cone orthant(int m);
  static Cone halfspaces(Matrix rows);
  static Cone generators(Matrix gens);
  static Cone bishop_phelps(Vector q, double alpha, Norm norm = Norm::L2);
  static Cone full_space(int m);

  ConeKind kind() const { return kind_; }
  int dim() const { return dim_; }

  const Matrix& rows() const { return rows_; }
  const Matrix& generator_rows() const { return gens_; }
  bool has_halfspace_form() const;
  const Vector& bp_q() const { return q_; }
  double bp_alpha() const { return alpha_; }
  Norm bp_norm() const { return norm_; }
  const Cone& base() const { return *base_; }
  const Vector& lift_direction() const { return h_; }

  friend Cone lift_cone(const Cone&, const Vector&, const Tolerances&);
  friend Cone product_with_ray(const Cone&);
  friend Cone int_union_zero(const Cone&, const Tolerances&);
  friend Cone restrict_to_zero(const Cone&);

 private:
  Cone(ConeKind k, int dim) : kind_(k), dim_(dim) {}

  ConeKind kind_;
  int dim_;
  Matrix rows_;   // Halfspaces; also the converted form of Generators
  Matrix gens_;
  Vector q_;
  double alpha_ = 0.0;
  Norm norm_ = Norm::L2;
  std::shared_ptr<const Cone> base_;
  Vector h_;
};

bool contains(const Cone& cone, const Vector& v, const Tolerances& tol = {});
bool interior_contains(const Cone& cone, const Vector& v, const Tolerances& tol = {});

/// x <= y, x <= y with y != x, x < y -- each induced by the cone:
///   Leq   y in x + K
///   Lneq  y in x + K \ {0}
///   Lt    y in x + int K
enum class Relation { Leq, Lneq, Lt };

bool relate(Relation rel, const Cone& cone, const Vector& x, const Vector& y,
            const Tolerances& tol = {});

/// Deterministic interior point: all-ones for orthants, the sum of the rows
/// for halfspace cones, q for Bishop-Phelps cones, the origin for the full
/// space. Throws EmptyInteriorError when the candidate fails the strict test.
Vector canonical_interior_point(const Cone& cone, const Tolerances& tol = {});

/// {(v,t) : v + t*h in H}. Requires h interior to H; the section at t = 0 is
/// exactly H and is returned by restrict_to_zero.
Cone lift_cone(const Cone& H, const Vector& h, const Tolerances& tol = {});

Cone product_with_ray(const Cone& C);
Cone int_union_zero(const Cone& C, const Tolerances& tol = {});

/// Section of a cone over Y x R at t = 0, as a cone over Y. Structural for
/// Lifted and ProductWithRay; coordinate-dropping for the direct kinds.
Cone restrict_to_zero(const Cone& K);

/// Structural equality of representations (not set equality).
bool cone_equal(const Cone& a, const Cone& b);

struct DilatingCheck {
  bool ok = false;
  std::string reason;
  std::optional<Vector> witness;
  explicit operator bool() const { return ok; }
};

/// H is accepted as a dilating cone for C when H passes a sampled convexity
/// test (u, v in H implies u + v in H over pairwise sums of the samples) and
/// every supplied ray of C \ {0} lies strictly interior to H. The first
/// violating vector is reported back on failure.
DilatingCheck is_dilating_for(const Cone& C, const Cone& H,
                              const std::vector<Vector>& ray_samples,
                              const Tolerances& tol = {});

/// Deterministic nonzero directions of C: signed basis vectors, pairwise
/// sums/differences, the all-ones vector and a fixed pseudo-random batch,
/// filtered by membership in C.
std::vector<Vector> default_ray_samples(const Cone& C, const Tolerances& tol = {});

enum class FamilyKind { EpsilonDilation, BishopPhelpsSweep, Explicit };

struct FamilyMember {
  double eps;
  Cone cone;
};

struct RejectedCandidate {
  double eps;
  std::string reason;
};

/// Finite stand-in for the set of all dilating cones of the base: a sweep of
/// validated candidates with strictly increasing parameters. Membership of a
/// point in the induced properly-efficient set is certified by a member;
/// absence only means no certificate was found in this family.
struct DilatingFamily {
  Cone base;
  FamilyKind kind = FamilyKind::Explicit;
  std::vector<FamilyMember> members;
  std::vector<RejectedCandidate> rejected;
};

/// 25 log-spaced parameters spanning [1e-6, 1e6].
std::vector<double> default_eps_grid();

/// EpsilonDilation over base rows W: candidate rows w_i + eps * sum_j w_j
/// (for the orthant: e_i + eps * ones). BishopPhelpsSweep: q = sum of rows
/// (all-ones for the orthant) with alpha = eps. Candidates failing
/// is_dilating_for are recorded under `rejected`; the full space is appended
/// as a final member with parameter +infinity since it dilates every cone.
DilatingFamily build_family(const Cone& C, FamilyKind kind,
                            const std::vector<double>& eps_grid,
                            const Tolerances& tol = {});

DilatingFamily explicit_family(const Cone& C, std::vector<FamilyMember> members,
                               const Tolerances& tol = {});

/// Matched product-space family: each member lifted at its canonical interior
/// point, over the base cone crossed with the nonnegative ray. Zero-sections
/// of the lifted members give back exactly the base members.
DilatingFamily lift_family(const DilatingFamily& family, const Tolerances& tol = {});

/// Intersection of two halfspace-representable cones (row concatenation).
/// Throws UnsupportedRepresentation for kinds without a closed form, e.g.
/// Bishop-Phelps with polyhedral.
Cone intersect_cones(const Cone& a, const Cone& b);

/// Halfspace rows for Orthant / Halfspaces / converted Generators.
Matrix to_halfspace_rows(const Cone& c);

}  // namespace vecpen

#endif  // VECPEN_CONE_HPP
