#include "vecpen/shape.hpp"

#include <algorithm>
#include <cmath>

namespace vecpen {

Shape Shape::ball(Vector center, double radius, Norm norm) {
  if (radius < 0) throw InvalidInput("ball: radius must be nonnegative");
  if (center.size() < 1) throw InvalidInput("ball: dimension must be positive");
  Shape s(ShapeKind::Ball, static_cast<int>(center.size()));
  s.center_ = std::move(center);
  s.radius_ = radius;
  s.norm_ = norm;
  return s;
}

Shape Shape::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size() || lo.size() < 1) throw InvalidInput("box: bad bounds");
  if (((hi - lo).array() < 0).any()) throw InvalidInput("box: lo must not exceed hi");
  Shape s(ShapeKind::Box, static_cast<int>(lo.size()));
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

Shape Shape::halfspaces(Matrix normals, Vector offsets) {
  if (normals.rows() != offsets.size() || normals.rows() < 1)
    throw InvalidInput("halfspaces: need one offset per normal");
  Shape s(ShapeKind::Halfspaces, static_cast<int>(normals.cols()));
  s.normals_ = std::move(normals);
  s.offsets_ = std::move(offsets);
  return s;
}

Shape Shape::product(Shape a, Shape b) {
  Shape s(ShapeKind::Product, a.dim() + b.dim());
  s.a_ = std::make_shared<Shape>(std::move(a));
  s.b_ = std::make_shared<Shape>(std::move(b));
  return s;
}

Shape Shape::union_of(std::vector<Shape> parts) {
  if (parts.empty()) throw InvalidInput("union: at least one part required");
  for (const auto& p : parts)
    if (p.dim() != parts.front().dim()) throw DimensionMismatch("union: mixed dimensions");
  Shape s(ShapeKind::Union, parts.front().dim());
  s.parts_ = std::move(parts);
  return s;
}

Shape Shape::empty(int dim) { return Shape(ShapeKind::Empty, dim); }

Region classify(const Shape& s, const Vector& x, const Tolerances& tol) {
  require_dim(x, s.dim(), "classify");
  switch (s.kind()) {
    case ShapeKind::Ball: {
      double d = norm_value(x - s.center(), s.norm());
      if (d < s.radius() - tol.mem) return Region::Interior;
      if (d <= s.radius() + tol.mem) return Region::Boundary;
      return Region::Exterior;
    }
    case ShapeKind::Box: {
      bool interior = true;
      for (int i = 0; i < s.dim(); ++i) {
        if (x(i) < s.lo()(i) - tol.mem || x(i) > s.hi()(i) + tol.mem) return Region::Exterior;
        if (!(x(i) > s.lo()(i) + tol.mem && x(i) < s.hi()(i) - tol.mem)) interior = false;
      }
      return interior ? Region::Interior : Region::Boundary;
    }
    case ShapeKind::Halfspaces: {
      Vector slack = s.offsets() - s.normals() * x;
      if ((slack.array() < -tol.mem).any()) return Region::Exterior;
      return (slack.array() > tol.mem).all() ? Region::Interior : Region::Boundary;
    }
    case ShapeKind::Product: {
      Region ra = classify(s.first(), x.head(s.first().dim()), tol);
      Region rb = classify(s.second(), x.tail(s.second().dim()), tol);
      if (ra == Region::Exterior || rb == Region::Exterior) return Region::Exterior;
      if (ra == Region::Interior && rb == Region::Interior) return Region::Interior;
      return Region::Boundary;
    }
    case ShapeKind::Union: {
      bool inside = false, interior = false;
      for (const auto& p : s.parts()) {
        Region r = classify(p, x, tol);
        inside = inside || r != Region::Exterior;
        interior = interior || r == Region::Interior;
      }
      if (interior) return Region::Interior;
      return inside ? Region::Boundary : Region::Exterior;
    }
    case ShapeKind::Empty:
      return Region::Exterior;
  }
  return Region::Exterior;
}

bool shape_contains(const Shape& s, const Vector& x, const Tolerances& tol) {
  return classify(s, x, tol) != Region::Exterior;
}

bool shape_interior_contains(const Shape& s, const Vector& x, const Tolerances& tol) {
  return classify(s, x, tol) == Region::Interior;
}

bool shape_is_convex_kind(const Shape& s) {
  switch (s.kind()) {
    case ShapeKind::Ball:
    case ShapeKind::Box:
    case ShapeKind::Halfspaces:
    case ShapeKind::Empty:
      return true;
    case ShapeKind::Product:
      return shape_is_convex_kind(s.first()) && shape_is_convex_kind(s.second());
    case ShapeKind::Union:
      return false;
  }
  return false;
}

bool shape_is_closed_kind(const Shape& s) {
  switch (s.kind()) {
    case ShapeKind::Ball:
    case ShapeKind::Box:
    case ShapeKind::Halfspaces:
    case ShapeKind::Empty:
      return true;
    case ShapeKind::Product:
      return shape_is_closed_kind(s.first()) && shape_is_closed_kind(s.second());
    case ShapeKind::Union: {
      for (const auto& p : s.parts())
        if (!shape_is_closed_kind(p)) return false;
      return true;
    }
  }
  return false;
}

Shape restrict_shape(const Shape& s, double t, const Tolerances& tol) {
  if (s.dim() < 2) throw InvalidInput("restrict_shape: dimension must be at least 2");
  const int n = s.dim() - 1;
  switch (s.kind()) {
    case ShapeKind::Ball: {
      double dt = std::abs(t - s.center()(n));
      Vector c = s.center().head(n);
      switch (s.norm()) {
        case Norm::L2: {
          double rem = s.radius() * s.radius() - dt * dt;
          if (rem < -tol.mem) return Shape::empty(n);
          return Shape::ball(c, std::sqrt(std::max(0.0, rem)), Norm::L2);
        }
        case Norm::L1: {
          double rem = s.radius() - dt;
          if (rem < -tol.mem) return Shape::empty(n);
          return Shape::ball(c, std::max(0.0, rem), Norm::L1);
        }
        case Norm::LInf:
          if (dt > s.radius() + tol.mem) return Shape::empty(n);
          return Shape::ball(c, s.radius(), Norm::LInf);
      }
      return Shape::empty(n);
    }
    case ShapeKind::Box: {
      if (t < s.lo()(n) - tol.mem || t > s.hi()(n) + tol.mem) return Shape::empty(n);
      return Shape::box(s.lo().head(n), s.hi().head(n));
    }
    case ShapeKind::Halfspaces: {
      std::vector<int> kept;
      for (int i = 0; i < s.normals().rows(); ++i) {
        double head_norm = s.normals().row(i).head(n).lpNorm<Eigen::Infinity>();
        double off = s.offsets()(i) - s.normals()(i, n) * t;
        if (head_norm <= tol.mem) {
          if (off < -tol.mem) return Shape::empty(n);
        } else {
          kept.push_back(i);
        }
      }
      if (kept.empty())
        throw UnsupportedRepresentation("restrict_shape: section is a full unbounded slice");
      Matrix normals(static_cast<int>(kept.size()), n);
      Vector offsets(static_cast<int>(kept.size()));
      for (int r = 0; r < static_cast<int>(kept.size()); ++r) {
        normals.row(r) = s.normals().row(kept[r]).head(n);
        offsets(r) = s.offsets()(kept[r]) - s.normals()(kept[r], n) * t;
      }
      return Shape::halfspaces(std::move(normals), std::move(offsets));
    }
    case ShapeKind::Product: {
      if (s.second().dim() == 1) {
        Vector point(1);
        point << t;
        return shape_contains(s.second(), point, tol) ? s.first() : Shape::empty(n);
      }
      return Shape::product(s.first(), restrict_shape(s.second(), t, tol));
    }
    case ShapeKind::Union: {
      std::vector<Shape> parts;
      for (const auto& p : s.parts()) {
        Shape r = restrict_shape(p, t, tol);
        if (r.kind() != ShapeKind::Empty) parts.push_back(std::move(r));
      }
      if (parts.empty()) return Shape::empty(n);
      if (parts.size() == 1) return parts.front();
      return Shape::union_of(std::move(parts));
    }
    case ShapeKind::Empty:
      return Shape::empty(n);
  }
  return Shape::empty(n);
}

std::function<bool(const Vector&)> restrict_shape_at(const Shape& s, double t,
                                                     const Tolerances& tol) {
  Shape section = restrict_shape(s, t, tol);
  return [section, tol](const Vector& x) { return shape_contains(section, x, tol); };
}

bool check_halfopen_segment(const Shape& s, const Vector& x, const Vector& y, int grid_n,
                            const Tolerances& tol) {
  if (!shape_is_convex_kind(s))
    throw UnsupportedRepresentation("check_halfopen_segment: shape kind is not convex");
  if (classify(s, x, tol) != Region::Interior)
    throw InvalidInput("check_halfopen_segment: x must be interior");
  if (classify(s, y, tol) == Region::Exterior)
    throw InvalidInput("check_halfopen_segment: y must lie in the closure");
  // lambda = 1 is x itself; lambda -> 0 approaches y, which is excluded.
  std::vector<double> grid;
  grid.reserve(grid_n + 1);
  for (int k = 1; k <= grid_n; ++k) grid.push_back(static_cast<double>(k) / (grid_n + 1));
  grid.push_back(1.0);
  for (double lambda : grid) {
    Vector p = lambda * x + (1.0 - lambda) * y;
    if (classify(s, p, tol) != Region::Interior) return false;
  }
  return true;
}

RestrictionReport check_restriction_interior(const Shape& s, double t,
                                             const std::vector<Vector>& probes,
                                             const Tolerances& tol) {
  Shape section = restrict_shape(s, t, tol);
  RestrictionReport report;
  for (int i = 0; i < static_cast<int>(probes.size()); ++i) {
    Vector lifted(probes[i].size() + 1);
    lifted << probes[i], t;
    bool lhs = shape_interior_contains(s, lifted, tol);
    bool rhs = shape_interior_contains(section, probes[i], tol);
    if (lhs && !rhs) report.lhs_only.push_back(i);
    if (rhs && !lhs) report.rhs_only.push_back(i);
  }
  return report;
}

double distance_to_shape(const Shape& s, const Vector& x, Norm norm) {
  require_dim(x, s.dim(), "distance_to_shape");
  switch (s.kind()) {
    case ShapeKind::Ball:
      if (s.norm() != norm)
        throw UnsupportedRepresentation(
            "distance_to_shape: ball distance is only analytic in the ball's own norm");
      return std::max(0.0, norm_value(x - s.center(), s.norm()) - s.radius());
    case ShapeKind::Box: {
      Vector clamped = x.cwiseMax(s.lo()).cwiseMin(s.hi());
      return norm_value(x - clamped, norm);
    }
    default:
      throw UnsupportedRepresentation("distance_to_shape: unsupported shape kind");
  }
}

double signed_distance_to_shape(const Shape& s, const Vector& x, Norm norm) {
  require_dim(x, s.dim(), "signed_distance_to_shape");
  switch (s.kind()) {
    case ShapeKind::Ball:
      if (s.norm() != norm)
        throw UnsupportedRepresentation(
            "signed_distance_to_shape: only analytic in the ball's own norm");
      return norm_value(x - s.center(), s.norm()) - s.radius();
    case ShapeKind::Box: {
      Vector clamped = x.cwiseMax(s.lo()).cwiseMin(s.hi());
      double outside = norm_value(x - clamped, norm);
      if (outside > 0) return outside;
      // Inside: the nearest complement point differs in one coordinate, so
      // the gap to the closest face is the distance in every p-norm.
      double gap = std::numeric_limits<double>::infinity();
      for (int i = 0; i < s.dim(); ++i)
        gap = std::min(gap, std::min(x(i) - s.lo()(i), s.hi()(i) - x(i)));
      return -gap;
    }
    default:
      throw UnsupportedRepresentation("signed_distance_to_shape: unsupported shape kind");
  }
}

}  // namespace vecpen
