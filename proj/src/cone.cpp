#include "vecpen/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace vecpen {

namespace {

constexpr double kConvTol = 1e-9;

Vector rot90(const Vector& v) {
  Vector out(2);
  out << -v(1), v(0);
  return out;
}

Vector cross3(const Vector& a, const Vector& b) {
  Vector out(3);
  out << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
  return out;
}

void push_unique_direction(std::vector<Vector>& out, Vector n) {
  double len = n.norm();
  if (len <= kConvTol) return;
  n /= len;
  for (const auto& m : out)
    if ((m - n).lpNorm<Eigen::Infinity>() <= 1e-9) return;
  out.push_back(std::move(n));
}

Matrix rows_from(const std::vector<Vector>& rows, int dim) {
  Matrix out(static_cast<int>(rows.size()), dim);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) out.row(i) = rows[i];
  return out;
}

// Signed basis rows, used for the degenerate cone {0}.
Matrix signed_identity(int dim) {
  Matrix out(2 * dim, dim);
  out.topRows(dim) = Matrix::Identity(dim, dim);
  out.bottomRows(dim) = -Matrix::Identity(dim, dim);
  return out;
}

// Facet description of the conic hull of the given generators, dim <= 3.
// Candidate facet normals are drawn from the generators themselves, their
// perpendiculars (2-D) or pairwise cross products plus a second round of
// crosses against surviving candidates (3-D, catches cones that are flat in
// a plane); a candidate survives when every generator is on its nonnegative
// side. An empty row set means the hull is the whole space.
Matrix convert_generators(const Matrix& gens) {
  const int dim = static_cast<int>(gens.cols());
  std::vector<Vector> nonzero;
  for (int i = 0; i < gens.rows(); ++i) {
    Vector g = gens.row(i);
    if (g.lpNorm<Eigen::Infinity>() > kConvTol) nonzero.push_back(g / g.norm());
  }
  if (nonzero.empty()) return signed_identity(dim);

  if (dim == 1) {
    bool pos = false, neg = false;
    for (const auto& g : nonzero) (g(0) > 0 ? pos : neg) = true;
    if (pos && neg) return Matrix(0, 1);
    Matrix out(1, 1);
    out(0, 0) = pos ? 1.0 : -1.0;
    return out;
  }

  std::vector<Vector> candidates;
  for (const auto& g : nonzero) push_unique_direction(candidates, g);
  if (dim == 2) {
    for (const auto& g : nonzero) {
      push_unique_direction(candidates, rot90(g));
      push_unique_direction(candidates, -rot90(g));
    }
  } else {
    for (std::size_t i = 0; i < nonzero.size(); ++i)
      for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
        push_unique_direction(candidates, cross3(nonzero[i], nonzero[j]));
        push_unique_direction(candidates, -cross3(nonzero[i], nonzero[j]));
      }
    // Collinear generator sets produce no cross products; an orthogonal
    // complement basis of the first generator covers that case (the validity
    // filter below discards it otherwise).
    const Vector& g0 = nonzero.front();
    for (int k = 0; k < 3; ++k) {
      Vector e = Vector::Zero(3);
      e(k) = 1.0;
      Vector u = e - e.dot(g0) * g0;
      push_unique_direction(candidates, u);
      push_unique_direction(candidates, -u);
    }
  }

  auto valid = [&](const Vector& n) {
    for (const auto& g : nonzero)
      if (n.dot(g) < -kConvTol) return false;
    return true;
  };

  std::vector<Vector> kept;
  for (const auto& n : candidates)
    if (valid(n)) push_unique_direction(kept, n);

  if (dim == 3) {
    // Second round: in-plane facet normals of flat cones.
    std::vector<Vector> second;
    for (const auto& c : kept)
      for (const auto& g : nonzero) {
        push_unique_direction(second, cross3(g, c));
        push_unique_direction(second, -cross3(g, c));
      }
    for (const auto& n : second)
      if (valid(n)) push_unique_direction(kept, n);
  }

  return rows_from(kept, dim);
}

}  // namespace

// ---- constructors ----

Cone Cone::orthant(int m) {
  if (m < 1) throw InvalidInput("orthant: dimension must be positive");
  return Cone(ConeKind::Orthant, m);
}

Cone Cone::halfspaces(Matrix rows) {
  if (rows.rows() < 1) throw InvalidInput("halfspaces: at least one row required");
  for (int i = 0; i < rows.rows(); ++i)
    if (rows.row(i).lpNorm<Eigen::Infinity>() <= kConvTol)
      throw InvalidInput("halfspaces: zero normal in row " + std::to_string(i));
  Cone c(ConeKind::Halfspaces, static_cast<int>(rows.cols()));
  c.rows_ = std::move(rows);
  return c;
}

Cone Cone::generators(Matrix gens) {
  if (gens.rows() < 1) throw InvalidInput("generators: at least one generator required");
  const int dim = static_cast<int>(gens.cols());
  if (dim < 1) throw InvalidInput("generators: dimension must be positive");
  Cone c(ConeKind::Generators, dim);
  if (dim <= 3) c.rows_ = convert_generators(gens);
  c.gens_ = std::move(gens);
  return c;
}

Cone Cone::bishop_phelps(Vector q, double alpha, Norm norm) {
  if (q.size() < 1 || q.lpNorm<Eigen::Infinity>() <= kConvTol)
    throw InvalidInput("bishop_phelps: q must be nonzero");
  if (alpha < 0) throw InvalidInput("bishop_phelps: alpha must be nonnegative");
  Cone c(ConeKind::BishopPhelps, static_cast<int>(q.size()));
  c.q_ = std::move(q);
  c.alpha_ = alpha;
  c.norm_ = norm;
  return c;
}

Cone Cone::full_space(int m) {
  if (m < 1) throw InvalidInput("full_space: dimension must be positive");
  return Cone(ConeKind::FullSpace, m);
}

bool Cone::has_halfspace_form() const {
  switch (kind_) {
    case ConeKind::Orthant:
    case ConeKind::Halfspaces:
    case ConeKind::FullSpace:
      return true;
    case ConeKind::Generators:
      return dim_ <= 3;
    default:
      return false;
  }
}

// ---- membership ----

bool contains(const Cone& cone, const Vector& v, const Tolerances& tol) {
  require_dim(v, cone.dim(), "contains");
  switch (cone.kind()) {
    case ConeKind::Orthant:
      return (v.array() >= -tol.mem).all();
    case ConeKind::Halfspaces:
      return ((cone.rows() * v).array() >= -tol.mem).all();
    case ConeKind::Generators:
      if (!cone.has_halfspace_form())
        throw UnsupportedRepresentation(
            "generator cone in dimension > 3: supply halfspace form");
      return ((cone.rows() * v).array() >= -tol.mem).all();
    case ConeKind::BishopPhelps:
      return cone.bp_q().dot(v) >= cone.bp_alpha() * norm_value(v, cone.bp_norm()) - tol.mem;
    case ConeKind::ProductWithRay:
      return v(cone.dim() - 1) >= -tol.mem &&
             contains(cone.base(), v.head(cone.dim() - 1), tol);
    case ConeKind::Lifted: {
      const int n = cone.dim() - 1;
      return contains(cone.base(), Vector(v.head(n) + v(n) * cone.lift_direction()), tol);
    }
    case ConeKind::IntUnionZero:
      return v.lpNorm<Eigen::Infinity>() <= tol.mem || interior_contains(cone.base(), v, tol);
    case ConeKind::FullSpace:
      return true;
  }
  return false;
}

bool interior_contains(const Cone& cone, const Vector& v, const Tolerances& tol) {
  require_dim(v, cone.dim(), "interior_contains");
  switch (cone.kind()) {
    case ConeKind::Orthant:
      return (v.array() > tol.strict_margin).all();
    case ConeKind::Halfspaces:
      return ((cone.rows() * v).array() > tol.strict_margin).all();
    case ConeKind::Generators:
      if (!cone.has_halfspace_form())
        throw UnsupportedRepresentation(
            "generator cone in dimension > 3: supply halfspace form");
      return ((cone.rows() * v).array() > tol.strict_margin).all();
    case ConeKind::BishopPhelps:
      return cone.bp_q().dot(v) >
             cone.bp_alpha() * norm_value(v, cone.bp_norm()) + tol.strict_margin;
    case ConeKind::ProductWithRay:
      // int(A x B) = int A x int B for convex factors.
      return v(cone.dim() - 1) > tol.strict_margin &&
             interior_contains(cone.base(), v.head(cone.dim() - 1), tol);
    case ConeKind::Lifted: {
      // int {(v,t) : v + t h in H} = {(v,t) : v + t h in int H}.
      const int n = cone.dim() - 1;
      return interior_contains(cone.base(), Vector(v.head(n) + v(n) * cone.lift_direction()),
                               tol);
    }
    case ConeKind::IntUnionZero:
      // Interior of (int C u {0}) is int C again.
      return interior_contains(cone.base(), v, tol);
    case ConeKind::FullSpace:
      return true;
  }
  return false;
}

bool relate(Relation rel, const Cone& cone, const Vector& x, const Vector& y,
            const Tolerances& tol) {
  require_dim(x, cone.dim(), "relate");
  require_dim(y, cone.dim(), "relate");
  Vector d = y - x;
  switch (rel) {
    case Relation::Leq:
      return contains(cone, d, tol);
    case Relation::Lneq:
      return d.lpNorm<Eigen::Infinity>() > tol.mem && contains(cone, d, tol);
    case Relation::Lt: {
      canonical_interior_point(cone, tol);  // rejects cones with empty interior
      return interior_contains(cone, d, tol);
    }
  }
  return false;
}

// ---- interior points and derived cones ----

Vector canonical_interior_point(const Cone& cone, const Tolerances& tol) {
  switch (cone.kind()) {
    case ConeKind::Orthant:
      return Vector::Ones(cone.dim());
    case ConeKind::Halfspaces:
    case ConeKind::Generators: {
      if (!cone.has_halfspace_form())
        throw UnsupportedRepresentation(
            "generator cone in dimension > 3: supply halfspace form");
      if (cone.rows().rows() == 0) return Vector::Zero(cone.dim());
      Vector h = cone.rows().colwise().sum();
      if (!((cone.rows() * h).array() > tol.strict_margin).all())
        throw EmptyInteriorError("canonical interior point: row sum is not strictly interior");
      return h;
    }
    case ConeKind::BishopPhelps: {
      const Vector& q = cone.bp_q();
      if (!(q.dot(q) > cone.bp_alpha() * norm_value(q, cone.bp_norm()) + tol.strict_margin))
        throw EmptyInteriorError("canonical interior point: q is not strictly interior");
      return q;
    }
    case ConeKind::ProductWithRay: {
      Vector h(cone.dim());
      h << canonical_interior_point(cone.base(), tol), 1.0;
      return h;
    }
    case ConeKind::Lifted: {
      Vector h(cone.dim());
      h << canonical_interior_point(cone.base(), tol), 0.0;
      return h;
    }
    case ConeKind::IntUnionZero:
      return canonical_interior_point(cone.base(), tol);
    case ConeKind::FullSpace:
      return Vector::Zero(cone.dim());
  }
  throw EmptyInteriorError("canonical interior point: unknown kind");
}

Cone lift_cone(const Cone& H, const Vector& h, const Tolerances& tol) {
  require_dim(h, H.dim(), "lift_cone");
  if (!interior_contains(H, h, tol))
    throw InvalidInput("lift_cone: direction must be interior to the base cone");
  Cone c(ConeKind::Lifted, H.dim() + 1);
  c.base_ = std::make_shared<Cone>(H);
  c.h_ = h;
  return c;
}

Cone product_with_ray(const Cone& C) {
  Cone c(ConeKind::ProductWithRay, C.dim() + 1);
  c.base_ = std::make_shared<Cone>(C);
  return c;
}

Cone int_union_zero(const Cone& C, const Tolerances& tol) {
  if (C.kind() == ConeKind::FullSpace) return C;
  canonical_interior_point(C, tol);  // rejects cones with empty interior
  Cone c(ConeKind::IntUnionZero, C.dim());
  c.base_ = std::make_shared<Cone>(C);
  return c;
}

Cone restrict_to_zero(const Cone& K) {
  if (K.dim() < 2) throw InvalidInput("restrict_to_zero: dimension must be at least 2");
  const int n = K.dim() - 1;
  switch (K.kind()) {
    case ConeKind::Lifted:
    case ConeKind::ProductWithRay:
      return K.base();
    case ConeKind::Orthant:
      return Cone::orthant(n);
    case ConeKind::FullSpace:
      return Cone::full_space(n);
    case ConeKind::BishopPhelps:
      // (v, 0) satisfies q.(v,0) >= alpha |(v,0)| iff the truncated q does,
      // since every supported norm of (v, 0) equals the norm of v.
      return Cone::bishop_phelps(K.bp_q().head(n), K.bp_alpha(), K.bp_norm());
    case ConeKind::Halfspaces:
    case ConeKind::Generators: {
      if (!K.has_halfspace_form())
        throw UnsupportedRepresentation(
            "generator cone in dimension > 3: supply halfspace form");
      std::vector<Vector> kept;
      for (int i = 0; i < K.rows().rows(); ++i) {
        Vector r = K.rows().row(i).head(n);
        if (r.lpNorm<Eigen::Infinity>() > kConvTol) kept.push_back(r);
      }
      if (kept.empty()) return Cone::full_space(n);
      return Cone::halfspaces(rows_from(kept, n));
    }
    case ConeKind::IntUnionZero:
      throw UnsupportedRepresentation(
          "restrict_to_zero: no closed form for interior-plus-origin cones");
  }
  throw UnsupportedRepresentation("restrict_to_zero: unknown kind");
}

bool cone_equal(const Cone& a, const Cone& b) {
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  auto mat_eq = [](const Matrix& x, const Matrix& y) {
    return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
  };
  switch (a.kind()) {
    case ConeKind::Orthant:
    case ConeKind::FullSpace:
      return true;
    case ConeKind::Halfspaces:
      return mat_eq(a.rows(), b.rows());
    case ConeKind::Generators:
      return mat_eq(a.generator_rows(), b.generator_rows());
    case ConeKind::BishopPhelps:
      return a.bp_q() == b.bp_q() && a.bp_alpha() == b.bp_alpha() && a.bp_norm() == b.bp_norm();
    case ConeKind::ProductWithRay:
    case ConeKind::IntUnionZero:
      return cone_equal(a.base(), b.base());
    case ConeKind::Lifted:
      return a.lift_direction() == b.lift_direction() && cone_equal(a.base(), b.base());
  }
  return false;
}

// ---- dilating cones ----

DilatingCheck is_dilating_for(const Cone& C, const Cone& H,
                              const std::vector<Vector>& ray_samples, const Tolerances& tol) {
  if (C.dim() != H.dim()) throw DimensionMismatch("is_dilating_for: cone dimensions differ");
  if (ray_samples.empty()) throw InvalidInput("is_dilating_for: ray_samples must be nonempty");
  for (const auto& r : ray_samples) {
    require_dim(r, C.dim(), "is_dilating_for");
    if (r.lpNorm<Eigen::Infinity>() <= tol.mem)
      throw InvalidInput("is_dilating_for: ray_samples must be nonzero");
    if (!contains(C, r, tol))
      throw InvalidInput("is_dilating_for: ray sample is not an element of the base cone");
  }

  std::vector<Vector> pool = ray_samples;
  try {
    pool.push_back(canonical_interior_point(H, tol));
  } catch (const std::exception&) {
    // no interior point available; convexity is still sampled on the rays
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (!contains(H, pool[i], tol) || !contains(H, pool[j], tol)) continue;
      Vector s = pool[i] + pool[j];
      if (!contains(H, s, tol))
        return {false, "sampled convexity violated: member sum escapes the cone", s};
    }

  for (const auto& r : ray_samples)
    if (!interior_contains(H, r, tol))
      return {false, "base-cone ray is not interior to the candidate", r};

  return {true, "", std::nullopt};
}

std::vector<Vector> default_ray_samples(const Cone& C, const Tolerances& tol) {
  const int m = C.dim();
  std::vector<Vector> cands;
  for (int i = 0; i < m; ++i) {
    Vector e = Vector::Zero(m);
    e(i) = 1.0;
    cands.push_back(e);
    cands.push_back(-e);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vector u = Vector::Zero(m), w = Vector::Zero(m);
      u(i) = 1.0;
      u(j) = 1.0;
      w(i) = 1.0;
      w(j) = -1.0;
      cands.push_back(u);
      cands.push_back(w);
      cands.push_back(-w);
    }
  cands.push_back(Vector::Ones(m));
  cands.push_back(-Vector::Ones(m));
  std::mt19937_64 eng(0x9e3779b97f4a7c15ull);
  for (int k = 0; k < 8; ++k) {
    Vector v(m);
    for (int i = 0; i < m; ++i)
      v(i) = 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
    cands.push_back(v);
  }

  std::vector<Vector> rays;
  for (const auto& d : cands)
    if (d.lpNorm<Eigen::Infinity>() > tol.mem && contains(C, d, tol)) rays.push_back(d);
  if (rays.empty()) throw InvalidInput("default_ray_samples: found no nonzero rays");
  return rays;
}

std::vector<double> default_eps_grid() {
  std::vector<double> grid;
  grid.reserve(25);
  for (int k = 0; k < 25; ++k) grid.push_back(std::pow(10.0, -6.0 + 0.5 * k));
  return grid;
}

Matrix to_halfspace_rows(const Cone& c) {
  switch (c.kind()) {
    case ConeKind::Orthant:
      return Matrix::Identity(c.dim(), c.dim());
    case ConeKind::Halfspaces:
      return c.rows();
    case ConeKind::Generators:
      if (!c.has_halfspace_form())
        throw UnsupportedRepresentation(
            "generator cone in dimension > 3: supply halfspace form");
      return c.rows();
    case ConeKind::FullSpace:
      return Matrix(0, c.dim());
    default:
      throw UnsupportedRepresentation("no halfspace form for this cone kind");
  }
}

namespace {

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw InvalidInput("family: parameter grid must be nonempty");
  double prev = 0.0;
  for (double e : grid) {
    if (!(e > 0.0)) throw InvalidInput("family: parameters must be positive");
    if (!(e > prev)) throw InvalidInput("family: parameters must be strictly increasing");
    prev = e;
  }
}

}  // namespace

DilatingFamily build_family(const Cone& C, FamilyKind kind, const std::vector<double>& eps_grid,
                            const Tolerances& tol) {
  if (kind == FamilyKind::Explicit)
    throw InvalidInput("build_family: use explicit_family for explicit member lists");
  check_grid(eps_grid);

  const Matrix W = to_halfspace_rows(C);
  const int m = C.dim();
  std::vector<std::pair<double, Cone>> candidates;
  if (kind == FamilyKind::EpsilonDilation) {
    if (W.rows() == 0) throw InvalidInput("build_family: base cone is the full space");
    Vector s = W.colwise().sum();
    for (double eps : eps_grid) {
      Matrix rows = W;
      rows.rowwise() += (eps * s).transpose();
      candidates.emplace_back(eps, Cone::halfspaces(std::move(rows)));
    }
  } else {
    Vector q = W.rows() == 0 ? Vector(Vector::Ones(m)) : Vector(W.colwise().sum());
    for (double eps : eps_grid)
      candidates.emplace_back(eps, Cone::bishop_phelps(q, eps, Norm::L2));
  }
  // The whole space dilates every cone; it closes the sweep as the coarsest
  // member and is the only survivor for bases like a halfspace, whose sole
  // dilating cone is the space itself.
  candidates.emplace_back(std::numeric_limits<double>::infinity(), Cone::full_space(m));

  DilatingFamily fam{C, kind, {}, {}};
  const auto rays = default_ray_samples(C, tol);
  for (auto& [eps, cand] : candidates) {
    DilatingCheck check = is_dilating_for(C, cand, rays, tol);
    if (check.ok)
      fam.members.push_back({eps, std::move(cand)});
    else
      fam.rejected.push_back({eps, check.reason});
  }
  if (fam.members.empty()) throw EmptyFamilyError("build_family: no candidate validated");
  return fam;
}

DilatingFamily explicit_family(const Cone& C, std::vector<FamilyMember> members,
                               const Tolerances& tol) {
  if (members.empty()) throw EmptyFamilyError("explicit_family: no members supplied");
  double prev = 0.0;
  for (const auto& mem : members) {
    if (!(mem.eps > prev))
      throw InvalidInput("explicit_family: parameters must be positive and strictly increasing");
    prev = mem.eps;
  }
  const auto rays = default_ray_samples(C, tol);
  for (const auto& mem : members) {
    DilatingCheck check = is_dilating_for(C, mem.cone, rays, tol);
    if (!check.ok)
      throw InvalidInput("explicit_family: member with parameter " + std::to_string(mem.eps) +
                         " rejected: " + check.reason);
  }
  return DilatingFamily{C, FamilyKind::Explicit, std::move(members), {}};
}

DilatingFamily lift_family(const DilatingFamily& family, const Tolerances& tol) {
  DilatingFamily out{product_with_ray(family.base), family.kind, {}, {}};
  for (const auto& mem : family.members) {
    Vector h = canonical_interior_point(mem.cone, tol);
    out.members.push_back({mem.eps, lift_cone(mem.cone, h, tol)});
  }
  return out;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("intersect_cones: dimensions differ");
  if (a.kind() == ConeKind::FullSpace) return b;
  if (b.kind() == ConeKind::FullSpace) return a;
  Matrix ra = to_halfspace_rows(a);
  Matrix rb = to_halfspace_rows(b);
  Matrix rows(ra.rows() + rb.rows(), a.dim());
  rows << ra, rb;
  return Cone::halfspaces(std::move(rows));
}

}  // namespace vecpen
