#ifndef VECPEN_TYPES_HPP
#define VECPEN_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace vecpen {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Sorted, duplicate-free point indices into an instance's sample.
using IndexSet = std::vector<int>;

enum class Norm { L1, L2, LInf };

inline double norm_value(const Vector& v, Norm n) {
  switch (n) {
    case Norm::L1:
      return v.lpNorm<1>();
    case Norm::L2:
      return v.norm();
    case Norm::LInf:
      return v.lpNorm<Eigen::Infinity>();
  }
  return v.norm();
}

// All non-strict inequalities are relaxed by `mem`; strict ones must clear
// a margin of `strict_margin`. Keeping strict_margin >= mem makes
// "member but not interior" and "zero within tolerance" mutually exclusive
// for the polyhedral kinds, which the dual-route efficiency checks rely on.
struct Tolerances {
  double mem = 1e-9;
  double strict_margin = 1e-9;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedRepresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInteriorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_dim(const Vector& v, int dim, const char* where) {
  if (static_cast<int>(v.size()) != dim)
    throw DimensionMismatch(std::string(where) + ": vector has dimension " +
                            std::to_string(v.size()) + ", expected " + std::to_string(dim));
}

// ---- index-set helpers (sets are kept sorted ascending) ----

inline void sort_unique(IndexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool set_contains(const IndexSet& s, int i) {
  return std::binary_search(s.begin(), s.end(), i);
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace vecpen

#endif  // VECPEN_TYPES_HPP
