#ifndef VECPEN_SHAPE_HPP
#define VECPEN_SHAPE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "vecpen/types.hpp"

namespace vecpen {

/// Analytic sets with exact interior/boundary classification. Interiors are
/// computed per kind from the defining inequalities, never by sampling
/// neighbourhoods. For unions the interior is approximated by "interior of
/// some part", which is exact whenever overlapping parts are either disjoint
/// or thin (as in the two-piece ball-plus-disk fixture) but not for parts
/// glued along faces.
enum class ShapeKind { Ball, Box, Halfspaces, Product, Union, Empty };

class Shape {
 public:
  static Shape ball(Vector center, double radius, Norm norm = Norm::L2);
  static Shape box(Vector lo, Vector hi);
  /// { x : normals.row(i) . x <= offsets(i) }
  static Shape halfspaces(Matrix normals, Vector offsets);
  static Shape product(Shape a, Shape b);
  static Shape union_of(std::vector<Shape> parts);
  static Shape empty(int dim);

  ShapeKind kind() const { return kind_; }
  int dim() const { return dim_; }

  const Vector& center() const { return center_; }
  double radius() const { return radius_; }
  Norm norm() const { return norm_; }
  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }
  const Matrix& normals() const { return normals_; }
  const Vector& offsets() const { return offsets_; }
  const Shape& first() const { return *a_; }
  const Shape& second() const { return *b_; }
  const std::vector<Shape>& parts() const { return parts_; }

 private:
  Shape(ShapeKind k, int dim) : kind_(k), dim_(dim) {}

  ShapeKind kind_;
  int dim_;
  Vector center_;
  double radius_ = 0.0;
  Norm norm_ = Norm::L2;
  Vector lo_, hi_;
  Matrix normals_;
  Vector offsets_;
  std::shared_ptr<const Shape> a_, b_;
  std::vector<Shape> parts_;
};

enum class Region { Interior, Boundary, Exterior };

Region classify(const Shape& s, const Vector& x, const Tolerances& tol = {});
bool shape_contains(const Shape& s, const Vector& x, const Tolerances& tol = {});
bool shape_interior_contains(const Shape& s, const Vector& x, const Tolerances& tol = {});

bool shape_is_convex_kind(const Shape& s);
bool shape_is_closed_kind(const Shape& s);

/// Section of a product-space shape at last coordinate = t, as a shape over
/// the remaining coordinates.
Shape restrict_shape(const Shape& s, double t, const Tolerances& tol = {});

/// Membership predicate x -> (x, t) in s.
std::function<bool(const Vector&)> restrict_shape_at(const Shape& s, double t,
                                                     const Tolerances& tol = {});

/// For a convex shape, x interior and y in the closure, every point of the
/// half-open segment [x, y) must classify Interior. Sampled on `grid_n`
/// uniform parameters plus the endpoint at x.
bool check_halfopen_segment(const Shape& s, const Vector& x, const Vector& y, int grid_n = 64,
                            const Tolerances& tol = {});

/// Compares, probe by probe, the section of the interior against the interior
/// of the section at level t. lhs = interior-then-restrict, rhs =
/// restrict-then-interior; the lhs is always contained in the rhs, so
/// lhs_only must stay empty while rhs_only collects the probes where the two
/// operations genuinely differ.
struct RestrictionReport {
  std::vector<int> lhs_only;
  std::vector<int> rhs_only;
};

RestrictionReport check_restriction_interior(const Shape& s, double t,
                                             const std::vector<Vector>& probes,
                                             const Tolerances& tol = {});

/// Distance from x to the shape, measured in `norm`; zero on the shape.
/// Supported analytically for balls (in the ball's own norm) and boxes.
double distance_to_shape(const Shape& s, const Vector& x, Norm norm);

/// dist(x, S) - dist(x, complement of S); negative inside, positive outside.
double signed_distance_to_shape(const Shape& s, const Vector& x, Norm norm);

}  // namespace vecpen

#endif  // VECPEN_SHAPE_HPP
