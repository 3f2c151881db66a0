#pragma once

// Brute-force reference implementations. These deliberately share no code
// with the library solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "lpplab/environment.hpp"
#include "lpplab/measure.hpp"

namespace oracle {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Quadratic DP over points in ]p, q], processed in x order.
inline double lpp_quadratic(const std::vector<lpplab::WeightedPoint>& pts, double px,
                            double pt, double qx, double qt) {
  std::vector<lpplab::WeightedPoint> in;
  for (const auto& p : pts)
    if (p.x > px && p.x <= qx && p.t > pt && p.t <= qt) in.push_back(p);
  std::sort(in.begin(), in.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  std::vector<double> best(in.size());
  double out = 0.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    best[i] = in[i].w;
    for (std::size_t j = 0; j < i; ++j)
      if (in[j].x < in[i].x && in[j].t < in[i].t) best[i] = std::max(best[i], best[j] + in[i].w);
    out = std::max(out, best[i]);
  }
  return out;
}

// Every subset of the points in ]p, q] that forms a strictly increasing chain.
inline double lpp_subsets(const std::vector<lpplab::WeightedPoint>& pts, double px, double pt,
                          double qx, double qt) {
  std::vector<lpplab::WeightedPoint> in;
  for (const auto& p : pts)
    if (p.x > px && p.x <= qx && p.t > pt && p.t <= qt) in.push_back(p);
  std::sort(in.begin(), in.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  double out = 0.0;
  const std::size_t n = in.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    double lx = kNegInf;
    double lt = kNegInf;
    bool chain = true;
    for (std::size_t k = 0; k < n && chain; ++k) {
      if (!(mask >> k & 1u)) continue;
      chain = in[k].x > lx && in[k].t > lt;
      lx = in[k].x;
      lt = in[k].t;
      sum += in[k].w;
    }
    if (chain) out = std::max(out, sum);
  }
  return out;
}

struct BoundaryAnswer {
  double value = kNegInf;
  double exit = kNegInf;
};

// sup over z in {window_left, atoms <= x, x} of nu(z) + L((z,0),(x,t)),
// ties to the right-most z, each chain enumerated exhaustively.
inline BoundaryAnswer boundary_brute(const lpplab::AtomicMeasure& nu,
                                     const std::vector<lpplab::WeightedPoint>& pts, double x,
                                     double t) {
  std::vector<double> zs{nu.window_left(), x};
  for (const auto& a : nu.atoms())
    if (a.position >= nu.window_left() && a.position <= x) zs.push_back(a.position);
  std::sort(zs.begin(), zs.end());
  BoundaryAnswer best;
  for (double z : zs) {
    double nu_z = 0.0;
    for (const auto& a : nu.atoms()) {
      if (a.position <= z && a.position > 0.0) nu_z += a.mass;
      if (a.position > z && a.position <= 0.0) nu_z -= a.mass;
    }
    const double v = nu_z + lpp_subsets(pts, z, 0.0, x, t);
    if (v >= best.value) best = {v, z};
  }
  return best;
}

// Up-right paths from (i0, j0) to (i1, j1), every site counted.
inline double lattice_paths(const std::function<double(std::int64_t, std::int64_t)>& w,
                            std::int64_t i0, std::int64_t j0, std::int64_t i1,
                            std::int64_t j1) {
  if (i0 > i1 || j0 > j1) return kNegInf;
  const double here = w(i0, j0);
  if (i0 == i1 && j0 == j1) return here;
  return here + std::max(lattice_paths(w, i0 + 1, j0, i1, j1),
                         lattice_paths(w, i0, j0 + 1, i1, j1));
}

// sup over z in [wl, x] of nu(z) + max path weight from (z, 1) to (x, t).
inline BoundaryAnswer lattice_boundary_brute(const std::vector<double>& increments,
                                             std::int64_t origin,
                                             const lpplab::WeightGrid& grid, std::int64_t x,
                                             std::int64_t t) {
  auto nu = [&](std::int64_t z) {
    double s = 0.0;
    for (std::size_t k = 0; k < increments.size(); ++k) {
      const std::int64_t site = origin + static_cast<std::int64_t>(k);
      if (site <= z && site > 0) s += increments[k];
      if (site > z && site <= 0) s -= increments[k];
    }
    return s;
  };
  auto w = [&](std::int64_t i, std::int64_t j) { return grid.at(i, j); };
  BoundaryAnswer best{nu(x), static_cast<double>(x)};
  if (t == 0) return best;
  best = {};
  for (std::int64_t z = origin - 1; z <= x; ++z) {
    const double v = nu(z) + lattice_paths(w, z, 1, x, t);
    if (v >= best.value) best = {v, static_cast<double>(z)};
  }
  return best;
}

}  // namespace oracle
