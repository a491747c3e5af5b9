#ifndef VECPEN_INSTANCE_HPP
#define VECPEN_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecpen/cone.hpp"
#include "vecpen/shape.hpp"
#include "vecpen/types.hpp"

namespace vecpen {

enum class TopoTag { Interior, Boundary };

struct ObjectiveSpec {
  enum class Kind { Table, Linear, SqrtExample, Identity };
  Kind kind = Kind::Identity;
  std::vector<Vector> values;  // Table
  Matrix matrix;               // Linear
};

struct PenalisationSpec {
  enum class Kind { DistanceToFeasible, SignedDistance, Table, NegSqrt, NegLinf };
  Kind kind = Kind::DistanceToFeasible;
  Norm norm = Norm::L2;
  std::vector<double> values;  // Table
};

/// A desk-scale optimisation instance: a finite ambient sample (the points),
/// a feasible subset with topological tags relative to an optional analytic
/// shape, objective values into R^dim_y, a scalar penalisation, and the
/// ordering cone with its dilating-cone sweep. Immutable after validation;
/// every evaluator is a pure function of (instance, index).
struct Instance {
  int dim_x = 0;
  int dim_y = 0;
  std::vector<Vector> points;
  IndexSet feasible;
  std::optional<Shape> shape;
  std::vector<TopoTag> topo_tags;  // parallel to `feasible`; may be empty
  ObjectiveSpec objective;
  PenalisationSpec penalisation;
  Cone cone;
  DilatingFamily family;
  Tolerances tol;
};

/// Checks every structural invariant and throws InvalidInput with a located
/// message on the first violation. Tags, when present together with a shape,
/// must agree with the shape's classification.
void validate_instance(const Instance& inst);

Vector eval_objective(const Instance& inst, int idx);
double eval_penalisation(const Instance& inst, int idx);

/// (f(x), nu(x)) in R^{dim_y + 1}; comparisons in the extended problem use
/// product_with_ray(inst.cone).
Vector extended_objective(const Instance& inst, int idx);

std::vector<Vector> objective_table(const Instance& inst);
std::vector<Vector> extended_objective_table(const Instance& inst);
std::vector<double> penalisation_table(const Instance& inst);

IndexSet all_indices(const Instance& inst);
IndexSet boundary_indices(const Instance& inst);
IndexSet interior_indices(const Instance& inst);

/// The feasible sample is treated as closed when its shape kind is closed and
/// the sample carries at least one boundary-tagged point.
bool feasible_sample_closed(const Instance& inst);

enum class Profile { ConvexLinear, ConvexQuadratic, AnchoredQuadratic, ArbitraryTable };

struct GeneratorOptions {
  int dim_x = 2;
  int dim_y = 2;
  int target_points = 120;
  Profile profile = Profile::ConvexLinear;
  ShapeKind shape_kind = ShapeKind::Box;  // Box or Ball
  PenalisationSpec::Kind penalisation = PenalisationSpec::Kind::DistanceToFeasible;
  std::vector<double> eps_grid;  // empty -> default grid
};

/// Reproducible from the seed alone. Lattice ambient sample; for box shapes
/// the faces lie on lattice planes, for balls explicit boundary points are
/// added on the sphere. Convex profiles are coordinatewise convex, so they
/// are cone-convex for the orthant by construction:
///   ConvexLinear       f = A x with entrywise positive A (monotone)
///   ConvexQuadratic    f_j = sum_k q_jk (x_k - a_k)^2, vertex left of the
///                      domain (monotone on it), q >= 0
///   AnchoredQuadratic  f_j = |x - a_j|^2 with anchors clustered well inside
///                      the shape (efficient points stay interior)
///   ArbitraryTable     uniform random objective values
Instance generate_random_instance(std::uint64_t seed, const GeneratorOptions& opt);

}  // namespace vecpen

#endif  // VECPEN_INSTANCE_HPP
