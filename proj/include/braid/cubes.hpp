#pragma once
// Axis-aligned little cubes with exact rational operadic composition, plus a
// fixed catalogue of configuration paths and homotopies whose pairwise
// disjointness and boundary conditions are verified numerically on a grid.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "braid/errors.hpp"

namespace braid {

using Rational = boost::rational<long long>;

// An axis-aligned cube inside [0,1]^d: a center per axis and one full side
// length shared by all axes (the cube spans center +- side/2).
template <typename Scalar>
struct LittleCube {
  std::vector<Scalar> center;
  Scalar side{};

  friend bool operator==(const LittleCube&, const LittleCube&) = default;
};

template <typename Scalar>
using CubeConfig = std::vector<LittleCube<Scalar>>;

// True when the closed cubes overlap at most in their boundary: some axis
// has one cube's upper face at or below the other's lower face.
template <typename Scalar>
bool check_disjoint(const LittleCube<Scalar>& a, const LittleCube<Scalar>& b) {
  if (a.center.size() != b.center.size()) {
    throw ValidationError("cubes live in different dimensions");
  }
  const Scalar two = Scalar(1) + Scalar(1);
  for (std::size_t i = 0; i < a.center.size(); ++i) {
    Scalar gap = a.center[i] < b.center[i] ? b.center[i] - a.center[i]
                                           : a.center[i] - b.center[i];
    if (gap * two >= a.side + b.side) return true;
  }
  return false;
}

template <typename Scalar>
bool config_disjoint(const CubeConfig<Scalar>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!check_disjoint(c[i], c[j])) return false;
    }
  }
  return true;
}

// Center distance in the max-axis metric.  Two cubes of equal side are
// disjoint exactly when this is at least that side.
template <typename Scalar>
Scalar center_distance(const LittleCube<Scalar>& a,
                       const LittleCube<Scalar>& b) {
  if (a.center.size() != b.center.size()) {
    throw ValidationError("cubes live in different dimensions");
  }
  Scalar best = Scalar(0);
  for (std::size_t i = 0; i < a.center.size(); ++i) {
    Scalar gap = a.center[i] < b.center[i] ? b.center[i] - a.center[i]
                                           : a.center[i] - b.center[i];
    if (gap > best) best = gap;
  }
  return best;
}

// The identity element: [0,1]^dims itself.
template <typename Scalar>
LittleCube<Scalar> unit_cube(int dims) {
  LittleCube<Scalar> out;
  out.center.assign(static_cast<std::size_t>(dims), Scalar(1) / Scalar(2));
  out.side = Scalar(1);
  return out;
}

// Substitutes `inner` (given in [0,1]^d coordinates) into the subcube of
// [0,1]^d occupied by `outer`: each axis interval (lo, hi) of the inner cube
// maps to (x + (y-x) lo, x + (y-x) hi) where (x, y) is the outer interval.
template <typename Scalar>
LittleCube<Scalar> compose_cube(const LittleCube<Scalar>& outer,
                               const LittleCube<Scalar>& inner) {
  if (outer.center.size() != inner.center.size()) {
    throw ValidationError("cubes live in different dimensions");
  }
  LittleCube<Scalar> out;
  out.center.reserve(outer.center.size());
  const Scalar half = Scalar(1) / Scalar(2);
  for (std::size_t i = 0; i < outer.center.size(); ++i) {
    Scalar lo = outer.center[i] - outer.side * half;
    out.center.push_back(lo + outer.side * inner.center[i]);
  }
  out.side = outer.side * inner.side;
  return out;
}

// Operadic composition: substitutes inners[k] into the k-th cube of the
// outer configuration and concatenates the results in order.
template <typename Scalar>
CubeConfig<Scalar> compose_operad(const CubeConfig<Scalar>& outer,
                                  const std::vector<CubeConfig<Scalar>>& inners) {
  if (outer.size() != inners.size()) {
    throw ValidationError("operad composition arity mismatch: " +
                          std::to_string(outer.size()) + " cubes but " +
                          std::to_string(inners.size()) + " configurations");
  }
  CubeConfig<Scalar> out;
  for (std::size_t k = 0; k < outer.size(); ++k) {
    for (const LittleCube<Scalar>& c : inners[k]) {
      out.push_back(compose_cube(outer[k], c));
    }
  }
  return out;
}

// --- the path catalogue ----------------------------------------------------

enum class PathId { M, RaRb, Vhat, V1V2, Delta, Gamma, H, K, Phi };

std::vector<PathId> all_paths();
std::string to_text(PathId id);
PathId path_from_text(std::string_view name);

struct PathInfo {
  int dims = 3;   // ambient dimension of the cubes
  int arity = 2;  // cubes per configuration
  std::vector<std::string> params;                // parameter names, in order
  std::vector<std::pair<double, double>> ranges;  // inclusive, one per param
};

const PathInfo& path_info(PathId id);

// Full side length used when none is requested: 1/5 for the static binary
// configuration, 1/20 for every moving path.
double default_side(PathId id);

// Centers at the given parameter values (matching path_info sizes), every
// cube with the same full side length.
CubeConfig<double> eval_path(PathId id, const std::vector<double>& params,
                             double side);

// --- numerical verification ------------------------------------------------

struct HomotopyCheck {
  std::string name;
  bool pass = true;
  // Parameter values at the first failing sample (empty when passing or for
  // parameterless checks), as name/value pairs in path parameter order.
  std::vector<std::pair<std::string, double>> at;
};

struct HomotopyReport {
  PathId id = PathId::M;
  int grid = 64;
  double side = 0;
  double tol = 0;
  double min_sep = 0;  // smallest pairwise center distance over the sweep
  std::vector<HomotopyCheck> checks;
  bool all_pass = true;
};

// Sweeps the path on a grid of `grid` + 1 samples per parameter axis and
// runs its check catalogue: pairwise disjointness everywhere, the boundary
// and matching conditions of the homotopy, and a bounded-step continuity
// proxy.  side <= 0 selects default_side(id).  Requires grid >= 2.
HomotopyReport verify_homotopy(PathId id, int grid = 64, double side = 0,
                               double tol = 1e-9);

// One line per check: "PASS <id> <check> min_sep=<v>" or
// "FAIL <id> <check> [t=..,s=..] min_sep=<v>" (every line carries the global
// minimum separation; parameter values appear only on failures).
std::string to_text(const HomotopyReport& r);

}  // namespace braid
