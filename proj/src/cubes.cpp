#include "braid/cubes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

namespace braid {

namespace {

constexpr double kPi = std::numbers::pi;

using P2 = std::array<double, 2>;
using P3 = std::array<double, 3>;
using P4 = std::array<double, 4>;

// Mirror sign of the vertical bulge per cube of the 3-cube homotopies: the
// first cube arcs above the plane, the other two below.
constexpr double kBulgeSign[3] = {1.0, -1.0, -1.0};

// --- binary paths ----------------------------------------------------------

// Half-turn exchange of two cubes around the center of the unit square.
std::array<P3, 2> path_r(double t) {
  return {{{0.5 + std::cos(kPi + kPi * t) / 5.0,
            0.5 + std::sin(kPi + kPi * t) / 5.0, 0.5},
           {0.5 + std::cos(kPi * t) / 5.0, 0.5 + std::sin(kPi * t) / 5.0,
            0.5}}};
}

// Sweep of the exchange loop across its reverse through the third dimension.
std::array<P3, 2> path_vhat(double t, double s) {
  return {{{0.5 + std::cos(kPi + kPi * t) / 5.0,
            0.5 + (1.0 - 2.0 * s) * std::sin(kPi + kPi * t) / 5.0,
            0.5 + 0.25 * std::sin(kPi * s)},
           {0.5 + std::cos(kPi * t) / 5.0,
            0.5 + (1.0 - 2.0 * s) * std::sin(kPi * t) / 5.0,
            0.5 - 0.25 * std::sin(kPi * s)}}};
}

// Contraction of the double-speed exchange loop over the upper/lower
// hemisphere of a small sphere, in four dimensions.
std::array<P4, 2> path_v(double r, double t) {
  double lift = std::sqrt(std::max(0.0, 1.0 - r * r)) / 5.0;
  return {{{0.5 + (r / 5.0) * std::cos(kPi + 2.0 * kPi * t),
            0.5 + (r / 5.0) * std::sin(kPi + 2.0 * kPi * t), 0.5 + lift, 0.5},
           {0.5 + (r / 5.0) * std::cos(2.0 * kPi * t),
            0.5 + (r / 5.0) * std::sin(2.0 * kPi * t), 0.5 - lift, 0.5}}};
}

// --- ternary paths ---------------------------------------------------------

// Braid-like row rearrangement of three cubes in the plane: swap the left
// pair, shift everyone right, swap the right pair.  t runs over [0, 3].
std::array<P2, 3> row_p0(double t) {
  if (t <= 1.0) {
    double tau = t;
    return {{{0.3 + std::cos(kPi + kPi * tau) / 25.0,
              0.5 + std::sin(kPi + kPi * tau) / 25.0},
             {0.3 + std::cos(kPi * tau) / 25.0,
              0.5 + std::sin(kPi * tau) / 25.0},
             {0.7, 0.5}}};
  }
  if (t <= 2.0) {
    double tau = t - 1.0;
    return {{{17.0 / 50.0 + tau * 16.0 / 50.0, 0.5},
             {13.0 / 50.0 + tau * 2.0 / 50.0, 0.5},
             {35.0 / 50.0 + tau * 2.0 / 50.0, 0.5}}};
  }
  double u = t - 2.0;
  return {{{0.7 + std::cos(kPi + kPi * u) / 25.0,
            0.5 + std::sin(kPi + kPi * u) / 25.0},
           {0.3, 0.5},
           {0.7 + std::cos(kPi * u) / 25.0, 0.5 + std::sin(kPi * u) / 25.0}}};
}

// The same rearrangement with every swap taken the other way around: the
// mirror image of row_p0 in the horizontal axis of the square.
std::array<P2, 3> row_p1(double t) {
  std::array<P2, 3> out = row_p0(t);
  for (P2& p : out) p[1] = 1.0 - p[1];
  return out;
}

// One wide arc carrying the first cube over both others while they drift.
std::array<P3, 3> path_delta(double t) {
  double th = kPi * t / 3.0;
  return {{{0.5 + 0.24 * std::cos(kPi + th), 0.5 - 0.24 * std::sin(kPi + th),
            0.5},
           {8.0 / 25.0 + std::cos(th) / 50.0, 0.5 - std::sin(th) / 50.0, 0.5},
           {17.0 / 25.0 + std::cos(th) / 50.0, 0.5 - std::sin(th) / 50.0,
            0.5}}};
}

// Same trajectories reflected in the horizontal axis.
std::array<P3, 3> path_gamma(double t) {
  double th = kPi * t / 3.0;
  return {{{0.5 + 0.24 * std::cos(kPi + th), 0.5 + 0.24 * std::sin(kPi + th),
            0.5},
           {8.0 / 25.0 + std::cos(th) / 50.0, 0.5 + std::sin(th) / 50.0, 0.5},
           {17.0 / 25.0 + std::cos(th) / 50.0, 0.5 + std::sin(th) / 50.0,
            0.5}}};
}

// Rotates gamma onto delta through the third dimension; s in [1, 2].
std::array<P3, 3> path_h(double t, double s) {
  double th = kPi * t / 3.0;
  double z = 0.25 * std::sin(kPi * (s - 1.0));
  return {{{0.5 + 0.24 * std::cos(kPi + th),
            0.5 + 0.24 * (3.0 - 2.0 * s) * std::sin(kPi + th), 0.5 + z},
           {8.0 / 25.0 + std::cos(th) / 50.0,
            0.5 + (3.0 - 2.0 * s) * std::sin(th) / 50.0, 0.5 - z},
           {17.0 / 25.0 + std::cos(th) / 50.0,
            0.5 + (3.0 - 2.0 * s) * std::sin(th) / 50.0, 0.5 - z}}};
}

// Planar straight-line interpolation from the mirrored row (sigma = 1) to
// the wide arc (sigma = 2), per cube and coordinate.
std::array<P2, 3> l_xy(double t, double sigma) {
  std::array<P2, 3> p1 = row_p1(t);
  std::array<P3, 3> d = path_delta(t);
  std::array<P2, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = {(2.0 - sigma) * p1[i][0] + (sigma - 1.0) * d[i][0],
              (2.0 - sigma) * p1[i][1] + (sigma - 1.0) * d[i][1]};
  }
  return out;
}

// Carries the row over to the wide arc: starts at the y-mirror of the
// interpolation's row end, bulges through the third dimension, and flattens
// out on the arc.  s in [0, 2].
std::array<P3, 3> path_k(double t, double s) {
  double sigma = s / 2.0 + 1.0;
  std::array<P2, 3> l = l_xy(t, sigma);
  std::array<P3, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = {l[i][0], (1.0 - s / 2.0) + (s - 1.0) * l[i][1],
              0.5 + kBulgeSign[i] * 0.25 * std::sin(kPi * s / 2.0)};
  }
  return out;
}

// Flips the row onto its mirror image through the third dimension; s in
// [0, 1].
std::array<P3, 3> path_band(double t, double s) {
  std::array<P2, 3> p1 = row_p1(t);
  std::array<P3, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = {p1[i][0], (1.0 - s) + (2.0 * s - 1.0) * p1[i][1],
              0.5 + kBulgeSign[i] * 0.25 * std::sin(kPi * s)};
  }
  return out;
}

// Two-parameter family joining the band-then-interpolation composite (u = 0)
// to the single carry (u = 1); the two branch formulas agree along s = 1.
std::array<P3, 3> phi_branch(double t, double s, double u, bool upper) {
  std::array<P3, 3> out;
  if (!upper) {
    double sigma = s * u / 2.0 + 1.0;
    std::array<P2, 3> l = l_xy(t, sigma);
    for (int i = 0; i < 3; ++i) {
      out[i] = {l[i][0],
                1.0 - s * (1.0 - u / 2.0) + (s * (2.0 - u) - 1.0) * l[i][1],
                0.5 + kBulgeSign[i] * 0.25 *
                          std::sin(kPi * s * (1.0 - u / 2.0))};
    }
  } else {
    double sigma = s + (1.0 - s / 2.0) * u;
    std::array<P2, 3> l = l_xy(t, sigma);
    for (int i = 0; i < 3; ++i) {
      out[i] = {l[i][0],
                (1.0 - s / 2.0) * u + ((s - 2.0) * u + 1.0) * l[i][1],
                0.5 + kBulgeSign[i] * 0.25 * std::sin(kPi * s * u / 2.0)};
    }
  }
  return out;
}

std::array<P3, 3> path_phi(double t, double s, double u) {
  return phi_branch(t, s, u, s > 1.0);
}

// --- catalogue plumbing ----------------------------------------------------

template <std::size_t A, std::size_t D>
CubeConfig<double> to_config(const std::array<std::array<double, D>, A>& pts,
                             double side) {
  CubeConfig<double> out;
  out.reserve(A);
  for (const auto& p : pts) {
    LittleCube<double> c;
    c.center.assign(p.begin(), p.end());
    c.side = side;
    out.push_back(std::move(c));
  }
  return out;
}

struct NamedInfo {
  PathId id;
  const char* name;
  PathInfo info;
};

const std::vector<NamedInfo>& catalogue() {
  static const std::vector<NamedInfo> table = {
      {PathId::M, "m", {4, 2, {}, {}}},
      {PathId::RaRb, "Ra_Rb", {3, 2, {"t"}, {{0.0, 1.0}}}},
      {PathId::Vhat, "vhat", {3, 2, {"t", "s"}, {{0.0, 1.0}, {0.0, 1.0}}}},
      {PathId::V1V2, "v1_v2", {4, 2, {"r", "t"}, {{0.0, 1.0}, {0.0, 1.0}}}},
      {PathId::Delta, "delta", {3, 3, {"t"}, {{0.0, 3.0}}}},
      {PathId::Gamma, "gamma", {3, 3, {"t"}, {{0.0, 3.0}}}},
      {PathId::H, "H", {3, 3, {"t", "s"}, {{0.0, 3.0}, {1.0, 2.0}}}},
      {PathId::K, "K", {3, 3, {"t", "s"}, {{0.0, 3.0}, {0.0, 2.0}}}},
      {PathId::Phi,
       "Phi",
       {3, 3, {"t", "s", "u"}, {{0.0, 3.0}, {0.0, 2.0}, {0.0, 1.0}}}},
  };
  return table;
}

const NamedInfo& entry(PathId id) {
  for (const NamedInfo& e : catalogue()) {
    if (e.id == id) return e;
  }
  throw Error("unreachable path id");
}

}  // namespace

std::vector<PathId> all_paths() {
  std::vector<PathId> out;
  for (const NamedInfo& e : catalogue()) out.push_back(e.id);
  return out;
}

std::string to_text(PathId id) { return entry(id).name; }

PathId path_from_text(std::string_view name) {
  std::string valid;
  for (const NamedInfo& e : catalogue()) {
    if (name == e.name) return e.id;
    if (!valid.empty()) valid += ", ";
    valid += e.name;
  }
  throw ValidationError("unknown path id '" + std::string(name) +
                        "' (expected one of: " + valid + ")");
}

const PathInfo& path_info(PathId id) { return entry(id).info; }

double default_side(PathId id) { return id == PathId::M ? 0.2 : 0.05; }

CubeConfig<double> eval_path(PathId id, const std::vector<double>& params,
                             double side) {
  const PathInfo& info = path_info(id);
  if (params.size() != info.params.size()) {
    throw ValidationError("path " + to_text(id) + " takes " +
                          std::to_string(info.params.size()) +
                          " parameters, got " + std::to_string(params.size()));
  }
  switch (id) {
    case PathId::M:
      return to_config(
          std::array<P4, 2>{{{0.3, 0.5, 0.5, 0.5}, {0.7, 0.5, 0.5, 0.5}}},
          side);
    case PathId::RaRb:
      return to_config(path_r(params[0]), side);
    case PathId::Vhat:
      return to_config(path_vhat(params[0], params[1]), side);
    case PathId::V1V2:
      return to_config(path_v(params[0], params[1]), side);
    case PathId::Delta:
      return to_config(path_delta(params[0]), side);
    case PathId::Gamma:
      return to_config(path_gamma(params[0]), side);
    case PathId::H:
      return to_config(path_h(params[0], params[1]), side);
    case PathId::K:
      return to_config(path_k(params[0], params[1]), side);
    case PathId::Phi:
      return to_config(path_phi(params[0], params[1], params[2]), side);
  }
  throw Error("unreachable path id");
}

namespace {

// --- verification driver ---------------------------------------------------

double config_min_distance(const CubeConfig<double>& c) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      best = std::min(best, center_distance(c[i], c[j]));
    }
  }
  return best;
}

double config_max_diff(const CubeConfig<double>& a,
                       const CubeConfig<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = 0; i < a[k].center.size(); ++i) {
      worst = std::max(worst, std::abs(a[k].center[i] - b[k].center[i]));
    }
  }
  return worst;
}

// Uniform lattice over a parameter box: grid + 1 samples per axis,
// visited in row-major order with the last axis fastest.
class Lattice {
 public:
  Lattice(std::vector<std::pair<double, double>> ranges, int grid)
      : ranges_(std::move(ranges)), grid_(grid) {
    total_ = 1;
    for (std::size_t a = 0; a < ranges_.size(); ++a) {
      total_ *= static_cast<long long>(grid_ + 1);
    }
  }

  long long total() const { return total_; }
  std::size_t axes() const { return ranges_.size(); }

  double step(std::size_t axis) const {
    return (ranges_[axis].second - ranges_[axis].first) / grid_;
  }

  std::vector<int> index(long long flat) const {
    std::vector<int> idx(axes());
    for (std::size_t a = axes(); a-- > 0;) {
      idx[a] = static_cast<int>(flat % (grid_ + 1));
      flat /= grid_ + 1;
    }
    return idx;
  }

  std::vector<double> point(const std::vector<int>& idx) const {
    std::vector<double> p(axes());
    for (std::size_t a = 0; a < axes(); ++a) {
      p[a] = idx[a] == grid_
                 ? ranges_[a].second
                 : ranges_[a].first + step(a) * idx[a];
    }
    return p;
  }

 private:
  std::vector<std::pair<double, double>> ranges_;
  int grid_;
  long long total_ = 1;
};

std::vector<std::pair<std::string, double>> where_of(
    const std::vector<std::string>& names, const std::vector<double>& values) {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) {
    out.emplace_back(names[i], values[i]);
  }
  return out;
}

struct Sweeper {
  PathId id;
  int grid;
  double side;
  double tol;
  const PathInfo* info;

  CubeConfig<double> eval(const std::vector<double>& p) const {
    return eval_path(id, p, side);
  }

  // Pairwise separation over the whole box; records the global minimum and
  // the first sample whose cubes fail to clear the side length.
  HomotopyCheck disjoint(double& min_sep) const {
    HomotopyCheck out{"disjoint", true, {}};
    Lattice lat(info->ranges, grid);
    min_sep = std::numeric_limits<double>::infinity();
    for (long long f = 0; f < lat.total(); ++f) {
      std::vector<double> p = lat.point(lat.index(f));
      double sep = config_min_distance(eval(p));
      min_sep = std::min(min_sep, sep);
      if (out.pass && sep < side - tol) {
        out.pass = false;
        out.at = where_of(info->params, p);
      }
    }
    return out;
  }

  // Compares the path against a reference on the slice fixing one axis.
  HomotopyCheck slice(const std::string& name, std::size_t axis, double value,
                      const std::function<CubeConfig<double>(
                          const std::vector<double>&)>& reference) const {
    HomotopyCheck out{name, true, {}};
    std::vector<std::pair<double, double>> free_ranges;
    for (std::size_t a = 0; a < info->ranges.size(); ++a) {
      if (a != axis) free_ranges.push_back(info->ranges[a]);
    }
    Lattice lat(free_ranges, grid);
    for (long long f = 0; f < lat.total(); ++f) {
      std::vector<double> partial = lat.point(lat.index(f));
      std::vector<double> p;
      std::size_t k = 0;
      for (std::size_t a = 0; a < info->ranges.size(); ++a) {
        p.push_back(a == axis ? value : partial[k++]);
      }
      if (config_max_diff(eval(p), reference(p)) > tol) {
        out.pass = false;
        out.at = where_of(info->params, p);
        return out;
      }
    }
    return out;
  }

  // Adjacent lattice samples may move each coordinate at most ten steps.
  HomotopyCheck continuity() const {
    HomotopyCheck out{"continuity", true, {}};
    Lattice lat(info->ranges, grid);
    for (long long f = 0; f < lat.total(); ++f) {
      std::vector<int> idx = lat.index(f);
      std::vector<double> p = lat.point(idx);
      CubeConfig<double> here = eval(p);
      for (std::size_t a = 0; a < lat.axes(); ++a) {
        if (idx[a] == 0) continue;
        std::vector<int> prev = idx;
        --prev[a];
        if (config_max_diff(here, eval(lat.point(prev))) >
            10.0 * lat.step(a) + tol) {
          out.pass = false;
          out.at = where_of(info->params, p);
          return out;
        }
      }
    }
    return out;
  }

  // Compares the two endpoint configurations of a one-parameter path
  // against pinned centers.
  HomotopyCheck endpoints(const CubeConfig<double>& at_lo,
                          const CubeConfig<double>& at_hi) const {
    HomotopyCheck out{"endpoints", true, {}};
    double lo = info->ranges[0].first;
    double hi = info->ranges[0].second;
    if (config_max_diff(eval({lo}), at_lo) > tol) {
      out.pass = false;
      out.at = where_of(info->params, {lo});
      return out;
    }
    if (config_max_diff(eval({hi}), at_hi) > tol) {
      out.pass = false;
      out.at = where_of(info->params, {hi});
    }
    return out;
  }
};

CubeConfig<double> centers_config(std::vector<std::vector<double>> centers,
                                  double side) {
  CubeConfig<double> out;
  for (std::vector<double>& c : centers) {
    out.push_back(LittleCube<double>{std::move(c), side});
  }
  return out;
}

std::string format_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

HomotopyReport verify_homotopy(PathId id, int grid, double side, double tol) {
  if (grid < 2) {
    throw ValidationError("grid resolution must be at least 2");
  }
  if (side <= 0) side = default_side(id);
  HomotopyReport rep;
  rep.id = id;
  rep.grid = grid;
  rep.side = side;
  rep.tol = tol;

  Sweeper sw{id, grid, side, tol, &path_info(id)};
  rep.checks.push_back(sw.disjoint(rep.min_sep));

  switch (id) {
    case PathId::M: {
      HomotopyCheck c{"centers", true, {}};
      CubeConfig<double> expect = centers_config(
          {{0.3, 0.5, 0.5, 0.5}, {0.7, 0.5, 0.5, 0.5}}, side);
      c.pass = config_max_diff(sw.eval({}), expect) <= tol;
      rep.checks.push_back(std::move(c));
      break;
    }
    case PathId::RaRb: {
      rep.checks.push_back(sw.endpoints(
          centers_config({{0.3, 0.5, 0.5}, {0.7, 0.5, 0.5}}, side),
          centers_config({{0.7, 0.5, 0.5}, {0.3, 0.5, 0.5}}, side)));
      rep.checks.push_back(sw.continuity());
      break;
    }
    case PathId::Vhat: {
      rep.checks.push_back(sw.slice(
          "s0_matches_R", 1, 0.0, [&](const std::vector<double>& p) {
            return eval_path(PathId::RaRb, {p[0]}, side);
          }));
      rep.checks.push_back(sw.slice(
          "s1_matches_R_reversed", 1, 1.0, [&](const std::vector<double>& p) {
            CubeConfig<double> r = eval_path(PathId::RaRb, {1.0 - p[0]}, side);
            std::swap(r[0], r[1]);
            return r;
          }));
      rep.checks.push_back(sw.continuity());
      break;
    }
    case PathId::V1V2: {
      CubeConfig<double> pole = eval_path(PathId::V1V2, {0.0, 0.0}, side);
      rep.checks.push_back(sw.slice(
          "r0_constant", 0, 0.0,
          [&](const std::vector<double>&) { return pole; }));
      rep.checks.push_back(sw.slice(
          "r1_double_speed_R", 0, 1.0, [&](const std::vector<double>& p) {
            // At full radius the loop is the exchange path followed by its
            // continuation, traversed at double speed, lifted flat.
            double t = p[1];
            CubeConfig<double> r =
                2.0 * t <= 1.0 ? eval_path(PathId::RaRb, {2.0 * t}, side)
                               : eval_path(PathId::RaRb, {2.0 * t - 1.0}, side);
            if (2.0 * t > 1.0) std::swap(r[0], r[1]);
            CubeConfig<double> out = centers_config(
                {{r[0].center[0], r[0].center[1], 0.5, 0.5},
                 {r[1].center[0], r[1].center[1], 0.5, 0.5}},
                side);
            return out;
          }));
      rep.checks.push_back(sw.continuity());
      break;
    }
    case PathId::Delta:
    case PathId::Gamma: {
      rep.checks.push_back(sw.endpoints(
          centers_config(
              {{13.0 / 50, 0.5, 0.5}, {17.0 / 50, 0.5, 0.5}, {0.7, 0.5, 0.5}},
              side),
          centers_config(
              {{37.0 / 50, 0.5, 0.5}, {0.3, 0.5, 0.5}, {33.0 / 50, 0.5, 0.5}},
              side)));
      rep.checks.push_back(sw.continuity());
      break;
    }
    case PathId::H: {
      rep.checks.push_back(sw.slice(
          "s1_matches_gamma", 1, 1.0, [&](const std::vector<double>& p) {
            return eval_path(PathId::Gamma, {p[0]}, side);
          }));
      rep.checks.push_back(sw.slice(
          "s2_matches_delta", 1, 2.0, [&](const std::vector<double>& p) {
            return eval_path(PathId::Delta, {p[0]}, side);
          }));
      rep.checks.push_back(sw.continuity());
      break;
    }
    case PathId::K: {
      rep.checks.push_back(sw.slice(
          "s0_matches_mirrored_row", 1, 0.0, [&](const std::vector<double>& p) {
            std::array<P2, 3> row = row_p1(p[0]);
            return centers_config({{row[0][0], 1.0 - row[0][1], 0.5},
                                   {row[1][0], 1.0 - row[1][1], 0.5},
                                   {row[2][0], 1.0 - row[2][1], 0.5}},
                                  side);
          }));
      rep.checks.push_back(sw.slice(
          "s2_matches_delta", 1, 2.0, [&](const std::vector<double>& p) {
            return eval_path(PathId::Delta, {p[0]}, side);
          }));
      rep.checks.push_back(sw.continuity());
      break;
    }
    case PathId::Phi: {
      rep.checks.push_back(sw.slice(
          "u1_matches_K", 2, 1.0, [&](const std::vector<double>& p) {
            return eval_path(PathId::K, {p[0], p[1]}, side);
          }));
      // The u = 0 face splits along s = 1: the band flip below, the planar
      // interpolation above.  Each half gets its own fresh lattice.
      {
        HomotopyCheck c{"u0_matches_band", true, {}};
        Lattice lat({{0.0, 3.0}, {0.0, 1.0}}, grid);
        for (long long f = 0; f < lat.total() && c.pass; ++f) {
          std::vector<double> p = lat.point(lat.index(f));
          CubeConfig<double> got =
              eval_path(PathId::Phi, {p[0], p[1], 0.0}, side);
          CubeConfig<double> want = to_config(path_band(p[0], p[1]), side);
          if (config_max_diff(got, want) > tol) {
            c.pass = false;
            c.at = where_of(path_info(id).params, {p[0], p[1], 0.0});
          }
        }
        rep.checks.push_back(std::move(c));
      }
      {
        HomotopyCheck c{"u0_matches_L", true, {}};
        Lattice lat({{0.0, 3.0}, {1.0, 2.0}}, grid);
        for (long long f = 0; f < lat.total() && c.pass; ++f) {
          std::vector<double> p = lat.point(lat.index(f));
          CubeConfig<double> got =
              eval_path(PathId::Phi, {p[0], p[1], 0.0}, side);
          std::array<P2, 3> l = l_xy(p[0], p[1]);
          CubeConfig<double> want = centers_config({{l[0][0], l[0][1], 0.5},
                                                    {l[1][0], l[1][1], 0.5},
                                                    {l[2][0], l[2][1], 0.5}},
                                                   side);
          if (config_max_diff(got, want) > tol) {
            c.pass = false;
            c.at = where_of(path_info(id).params, {p[0], p[1], 0.0});
          }
        }
        rep.checks.push_back(std::move(c));
      }
      {
        HomotopyCheck c{"s1_branches_agree", true, {}};
        Lattice lat({{0.0, 3.0}, {0.0, 1.0}}, grid);
        for (long long f = 0; f < lat.total() && c.pass; ++f) {
          std::vector<double> p = lat.point(lat.index(f));
          CubeConfig<double> lower =
              to_config(phi_branch(p[0], 1.0, p[1], false), side);
          CubeConfig<double> upper =
              to_config(phi_branch(p[0], 1.0, p[1], true), side);
          if (config_max_diff(lower, upper) > tol) {
            c.pass = false;
            c.at = where_of(path_info(id).params, {p[0], 1.0, p[1]});
          }
        }
        rep.checks.push_back(std::move(c));
      }
      rep.checks.push_back(sw.continuity());
      break;
    }
  }

  rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const HomotopyCheck& c) { return c.pass; });
  return rep;
}

std::string to_text(const HomotopyReport& r) {
  std::string out;
  std::string name = to_text(r.id);
  for (const HomotopyCheck& c : r.checks) {
    out += c.pass ? "PASS " : "FAIL ";
    out += name;
    out += ' ';
    out += c.name;
    if (!c.pass && !c.at.empty()) {
      out += " [";
      for (std::size_t i = 0; i < c.at.size(); ++i) {
        if (i) out += ',';
        out += c.at[i].first;
        out += '=';
        out += format_g(c.at[i].second);
      }
      out += ']';
    }
    out += " min_sep=";
    out += format_g(r.min_sep);
    out += '\n';
  }
  return out;
}

}  // namespace braid
