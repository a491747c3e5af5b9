#include "vecpen/instance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vecpen {

namespace {

bool all_finite(const Vector& v) { return v.allFinite(); }

std::string at_point(int idx) { return " (point index " + std::to_string(idx) + ")"; }

}  // namespace

void validate_instance(const Instance& inst) {
  if (inst.dim_x < 1 || inst.dim_y < 1)
    throw InvalidInput("instance: dim_x and dim_y must be positive");
  if (inst.points.empty()) throw InvalidInput("instance: empty point sample");
  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) {
    if (static_cast<int>(inst.points[i].size()) != inst.dim_x)
      throw InvalidInput("instance: point dimension mismatch" + at_point(i));
    if (!all_finite(inst.points[i]))
      throw InvalidInput("instance: non-finite coordinate" + at_point(i));
  }

  if (inst.feasible.empty()) throw InvalidInput("instance: feasible set is empty");
  if (!std::is_sorted(inst.feasible.begin(), inst.feasible.end()))
    throw InvalidInput("instance: feasible indices must be sorted ascending");
  if (std::adjacent_find(inst.feasible.begin(), inst.feasible.end()) != inst.feasible.end())
    throw InvalidInput("instance: duplicate feasible index");
  for (int idx : inst.feasible)
    if (idx < 0 || idx >= static_cast<int>(inst.points.size()))
      throw InvalidInput("instance: feasible index out of range" + at_point(idx));

  if (!inst.topo_tags.empty() && inst.topo_tags.size() != inst.feasible.size())
    throw InvalidInput("instance: topo_tags must align with the feasible set");

  if (inst.shape) {
    if (inst.shape->dim() != inst.dim_x)
      throw InvalidInput("instance: shape dimension differs from dim_x");
    for (std::size_t k = 0; k < inst.feasible.size(); ++k) {
      Region r = classify(*inst.shape, inst.points[inst.feasible[k]], inst.tol);
      if (r == Region::Exterior)
        throw InvalidInput("instance: feasible point lies outside the shape" +
                           at_point(inst.feasible[k]));
      if (!inst.topo_tags.empty()) {
        TopoTag expect = r == Region::Interior ? TopoTag::Interior : TopoTag::Boundary;
        if (inst.topo_tags[k] != expect)
          throw InvalidInput("instance: topo tag disagrees with shape classification" +
                             at_point(inst.feasible[k]));
      }
    }
  }

  switch (inst.objective.kind) {
    case ObjectiveSpec::Kind::Table:
      if (inst.objective.values.size() != inst.points.size())
        throw InvalidInput("instance: objective table length differs from the sample");
      for (int i = 0; i < static_cast<int>(inst.objective.values.size()); ++i) {
        if (static_cast<int>(inst.objective.values[i].size()) != inst.dim_y)
          throw InvalidInput("instance: objective value dimension mismatch" + at_point(i));
        if (!all_finite(inst.objective.values[i]))
          throw InvalidInput("instance: non-finite objective value" + at_point(i));
      }
      break;
    case ObjectiveSpec::Kind::Linear:
      if (inst.objective.matrix.rows() != inst.dim_y ||
          inst.objective.matrix.cols() != inst.dim_x)
        throw InvalidInput("instance: objective matrix must be dim_y x dim_x");
      break;
    case ObjectiveSpec::Kind::SqrtExample:
      if (inst.dim_x != 2 || inst.dim_y != 2)
        throw InvalidInput("instance: sqrt_example objective requires dim_x = dim_y = 2");
      break;
    case ObjectiveSpec::Kind::Identity:
      if (inst.dim_y != inst.dim_x)
        throw InvalidInput("instance: identity objective requires dim_y = dim_x");
      break;
  }

  switch (inst.penalisation.kind) {
    case PenalisationSpec::Kind::Table:
      if (inst.penalisation.values.size() != inst.points.size())
        throw InvalidInput("instance: penalisation table length differs from the sample");
      for (double v : inst.penalisation.values)
        if (!std::isfinite(v)) throw InvalidInput("instance: non-finite penalisation value");
      break;
    case PenalisationSpec::Kind::NegSqrt:
      if (inst.dim_x != 1)
        throw InvalidInput("instance: neg_sqrt penalisation requires dim_x = 1");
      for (int i = 0; i < static_cast<int>(inst.points.size()); ++i)
        if (inst.points[i](0) < -inst.tol.mem)
          throw InvalidInput("instance: neg_sqrt requires nonnegative points" + at_point(i));
      break;
    case PenalisationSpec::Kind::SignedDistance:
      if (!inst.shape)
        throw InvalidInput("instance: signed_distance penalisation requires a shape");
      break;
    default:
      break;
  }

  if (inst.cone.dim() != inst.dim_y)
    throw InvalidInput("instance: cone dimension differs from dim_y");
  if (inst.family.members.empty()) throw InvalidInput("instance: dilating family is empty");
  if (inst.family.base.dim() != inst.dim_y)
    throw InvalidInput("instance: family base dimension differs from dim_y");
}

Vector eval_objective(const Instance& inst, int idx) {
  if (idx < 0 || idx >= static_cast<int>(inst.points.size()))
    throw InvalidInput("eval_objective: index out of range");
  const Vector& x = inst.points[idx];
  switch (inst.objective.kind) {
    case ObjectiveSpec::Kind::Table:
      return inst.objective.values[idx];
    case ObjectiveSpec::Kind::Linear:
      return inst.objective.matrix * x;
    case ObjectiveSpec::Kind::Identity:
      return x;
    case ObjectiveSpec::Kind::SqrtExample: {
      Vector v(2);
      v << x(0), std::sqrt(std::abs(x(0) * x(1)));
      double sup = x.lpNorm<Eigen::Infinity>();
      if (sup > 1.0) v /= sup;
      return v;
    }
  }
  throw InvalidInput("eval_objective: unknown objective kind");
}

double eval_penalisation(const Instance& inst, int idx) {
  if (idx < 0 || idx >= static_cast<int>(inst.points.size()))
    throw InvalidInput("eval_penalisation: index out of range");
  const Vector& x = inst.points[idx];
  switch (inst.penalisation.kind) {
    case PenalisationSpec::Kind::Table:
      return inst.penalisation.values[idx];
    case PenalisationSpec::Kind::NegSqrt:
      return -std::sqrt(std::max(0.0, x(0)));
    case PenalisationSpec::Kind::NegLinf:
      return -x.lpNorm<Eigen::Infinity>();
    case PenalisationSpec::Kind::SignedDistance:
      if (!inst.shape)
        throw UnsupportedRepresentation("signed distance requires an analytic shape");
      return signed_distance_to_shape(*inst.shape, x, inst.penalisation.norm);
    case PenalisationSpec::Kind::DistanceToFeasible: {
      if (inst.shape) {
        try {
          return distance_to_shape(*inst.shape, x, inst.penalisation.norm);
        } catch (const UnsupportedRepresentation&) {
          // fall through to the sample distance
        }
      }
      double best = std::numeric_limits<double>::infinity();
      for (int f : inst.feasible)
        best = std::min(best, norm_value(x - inst.points[f], inst.penalisation.norm));
      return best;
    }
  }
  throw InvalidInput("eval_penalisation: unknown penalisation kind");
}

Vector extended_objective(const Instance& inst, int idx) {
  Vector f = eval_objective(inst, idx);
  Vector out(inst.dim_y + 1);
  out << f, eval_penalisation(inst, idx);
  return out;
}

std::vector<Vector> objective_table(const Instance& inst) {
  std::vector<Vector> out;
  out.reserve(inst.points.size());
  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i)
    out.push_back(eval_objective(inst, i));
  return out;
}

std::vector<Vector> extended_objective_table(const Instance& inst) {
  std::vector<Vector> out;
  out.reserve(inst.points.size());
  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i)
    out.push_back(extended_objective(inst, i));
  return out;
}

std::vector<double> penalisation_table(const Instance& inst) {
  std::vector<double> out;
  out.reserve(inst.points.size());
  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i)
    out.push_back(eval_penalisation(inst, i));
  return out;
}

IndexSet all_indices(const Instance& inst) {
  IndexSet out(inst.points.size());
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = i;
  return out;
}

IndexSet boundary_indices(const Instance& inst) {
  IndexSet out;
  for (std::size_t k = 0; k < inst.topo_tags.size(); ++k)
    if (inst.topo_tags[k] == TopoTag::Boundary) out.push_back(inst.feasible[k]);
  return out;
}

IndexSet interior_indices(const Instance& inst) {
  IndexSet out;
  for (std::size_t k = 0; k < inst.topo_tags.size(); ++k)
    if (inst.topo_tags[k] == TopoTag::Interior) out.push_back(inst.feasible[k]);
  return out;
}

bool feasible_sample_closed(const Instance& inst) {
  if (!inst.shape || inst.topo_tags.empty()) return false;
  if (!shape_is_closed_kind(*inst.shape)) return false;
  return !boundary_indices(inst).empty();
}

// ---- random instances ----

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::vector<Vector> lattice_points(int dim, int per_dim, double lo, double hi) {
  std::vector<Vector> pts;
  std::vector<int> idx(dim, 0);
  const double h = per_dim > 1 ? (hi - lo) / (per_dim - 1) : 0.0;
  while (true) {
    Vector p(dim);
    for (int d = 0; d < dim; ++d) p(d) = lo + h * idx[d];
    pts.push_back(p);
    int d = 0;
    while (d < dim && ++idx[d] == per_dim) idx[d++] = 0;
    if (d == dim) break;
  }
  return pts;
}

std::vector<Vector> sphere_directions(int dim, int count, Rng& rng) {
  std::vector<Vector> dirs;
  if (dim == 1) {
    dirs.push_back(Vector::Constant(1, 1.0));
    dirs.push_back(Vector::Constant(1, -1.0));
    return dirs;
  }
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      double a = 2.0 * M_PI * (k + 0.25) / count;
      Vector d(2);
      d << std::cos(a), std::sin(a);
      dirs.push_back(d);
    }
    return dirs;
  }
  for (int k = 0; k < count; ++k) {
    Vector d(dim);
    double n2 = 0.0;
    do {
      for (int i = 0; i < dim; ++i) d(i) = rng.uniform(-1.0, 1.0);
      n2 = d.norm();
    } while (n2 < 1e-3);
    dirs.push_back(d / n2);
  }
  return dirs;
}

}  // namespace

Instance generate_random_instance(std::uint64_t seed, const GeneratorOptions& opt) {
  if (opt.dim_x < 1 || opt.dim_y < 1) throw InvalidInput("generator: bad dimensions");
  if (opt.shape_kind != ShapeKind::Box && opt.shape_kind != ShapeKind::Ball)
    throw InvalidInput("generator: shape kind must be box or ball");
  Rng rng(seed);

  Instance inst;
  inst.dim_x = opt.dim_x;
  inst.dim_y = opt.dim_y;

  // Ambient lattice over [0, 2]^dim_x with an odd per-axis count, so the
  // plane through 1.0 is a lattice plane and box faces carry sample points.
  int per_dim = std::max(3, static_cast<int>(std::round(
                                std::pow(static_cast<double>(opt.target_points),
                                         1.0 / opt.dim_x))));
  if (per_dim % 2 == 0) ++per_dim;
  while (std::pow(per_dim, opt.dim_x) > 2.5 * opt.target_points && per_dim > 3) per_dim -= 2;
  inst.points = lattice_points(opt.dim_x, per_dim, 0.0, 2.0);

  if (opt.shape_kind == ShapeKind::Box) {
    inst.shape = Shape::box(Vector::Zero(opt.dim_x), Vector::Ones(opt.dim_x));
  } else {
    Vector c = Vector::Ones(opt.dim_x);
    double r = rng.uniform(0.55, 0.8);
    inst.shape = Shape::ball(c, r, Norm::L2);
    for (const auto& d : sphere_directions(opt.dim_x, 2 * opt.dim_x + 6, rng))
      inst.points.push_back(c + r * d);
  }

  for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) {
    Region r = classify(*inst.shape, inst.points[i], inst.tol);
    if (r == Region::Exterior) continue;
    inst.feasible.push_back(i);
    inst.topo_tags.push_back(r == Region::Interior ? TopoTag::Interior : TopoTag::Boundary);
  }

  switch (opt.profile) {
    case Profile::ConvexLinear: {
      Matrix a(opt.dim_y, opt.dim_x);
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) = rng.uniform(0.2, 1.5);
      inst.objective = {ObjectiveSpec::Kind::Linear, {}, std::move(a)};
      break;
    }
    case Profile::ConvexQuadratic: {
      // Coordinatewise convex and increasing on [0, 2]: vertices left of 0.
      std::vector<Vector> vals;
      Matrix q(opt.dim_y, opt.dim_x), v(opt.dim_y, opt.dim_x);
      for (int j = 0; j < opt.dim_y; ++j)
        for (int k = 0; k < opt.dim_x; ++k) {
          q(j, k) = rng.uniform(0.1, 1.0);
          v(j, k) = -rng.uniform(0.5, 1.5);
        }
      vals.reserve(inst.points.size());
      for (const auto& p : inst.points) {
        Vector y(opt.dim_y);
        for (int j = 0; j < opt.dim_y; ++j) {
          double acc = 0.0;
          for (int k = 0; k < opt.dim_x; ++k) acc += q(j, k) * std::pow(p(k) - v(j, k), 2);
          y(j) = acc;
        }
        vals.push_back(y);
      }
      inst.objective = {ObjectiveSpec::Kind::Table, std::move(vals), {}};
      break;
    }
    case Profile::AnchoredQuadratic: {
      Vector c = inst.shape->kind() == ShapeKind::Ball ? inst.shape->center()
                                                       : Vector(0.5 * Vector::Ones(opt.dim_x));
      double spread = inst.shape->kind() == ShapeKind::Ball ? inst.shape->radius() / 4.0 : 0.12;
      std::vector<Vector> anchors;
      auto dirs = sphere_directions(opt.dim_x, opt.dim_y, rng);
      for (int j = 0; j < opt.dim_y; ++j) anchors.push_back(c + spread * dirs[j % dirs.size()]);
      std::vector<Vector> vals;
      vals.reserve(inst.points.size());
      for (const auto& p : inst.points) {
        Vector y(opt.dim_y);
        for (int j = 0; j < opt.dim_y; ++j) y(j) = (p - anchors[j]).squaredNorm();
        vals.push_back(y);
      }
      inst.objective = {ObjectiveSpec::Kind::Table, std::move(vals), {}};
      break;
    }
    case Profile::ArbitraryTable: {
      std::vector<Vector> vals;
      vals.reserve(inst.points.size());
      for (std::size_t i = 0; i < inst.points.size(); ++i) {
        Vector y(opt.dim_y);
        for (int j = 0; j < opt.dim_y; ++j) y(j) = rng.uniform(-1.0, 1.0);
        vals.push_back(y);
      }
      inst.objective = {ObjectiveSpec::Kind::Table, std::move(vals), {}};
      break;
    }
  }

  inst.penalisation.kind = opt.penalisation;
  inst.penalisation.norm = Norm::L2;
  if (opt.penalisation == PenalisationSpec::Kind::Table) {
    inst.penalisation.values.reserve(inst.points.size());
    for (std::size_t i = 0; i < inst.points.size(); ++i)
      inst.penalisation.values.push_back(rng.uniform(-1.0, 1.0));
  }

  inst.cone = Cone::orthant(opt.dim_y);
  inst.family = build_family(inst.cone, FamilyKind::EpsilonDilation,
                             opt.eps_grid.empty() ? default_eps_grid() : opt.eps_grid,
                             inst.tol);

  validate_instance(inst);
  return inst;
}

}  // namespace vecpen
