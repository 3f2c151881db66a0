#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lpplab/environment.hpp"
#include "lpplab/measure.hpp"
#include "lpplab/summary.hpp"

namespace lpplab {

struct Point2 {
  double x = 0.0;
  double t = 0.0;
};

struct Site {
  std::int64_t i = 0;  // space
  std::int64_t j = 0;  // time
};

/// Last-passage value from a boundary measure, with the exit point (the
/// right-most maximizing z) and truncation diagnostics.
struct LppResult {
  double value = 0.0;
  double exit_point = 0.0;
  double window_left_used = 0.0;
  bool interior = true;
};

/// Margin used by the interior test when none is given: 2 * sqrt(t + 1).
double default_interior_margin(double t);

/// Maximum total mark over strictly increasing chains of cloud points inside
/// the half-open rectangle ]p, q] (points sharing a coordinate with p are
/// excluded). Sweep over x with a prefix-maximum tree on t-ranks,
/// O(n log n). Throws ArgumentError unless p <= q coordinatewise.
double last_passage(const PointCloud& cloud, Point2 p, Point2 q);

/// sup over z <= x (z >= nu.window_left()) of
///   nu.cumulative(z) + last_passage(cloud, (z, 0), (x, t)).
///
/// The cloud must cover [nu.window_left(), x] x [0, t] and the measure's
/// window must reach x (CoverageError otherwise). A chain whose first point
/// is p collects the boundary term cumulative_left(p.x); its exit point is
/// the last atom left of p.x, or the window's left edge. Ties are broken
/// towards the larger exit point. `interior` is exit_point >= window_left +
/// margin; a negative margin selects default_interior_margin(t).
LppResult last_passage_with_boundary(const AtomicMeasure& nu,
                                     const PointCloud& cloud, double x,
                                     double t, double margin = -1.0);

/// Lattice last-passage time over the half-open box ]p, q]:
/// G(i,j) = w(i,j) + max(G(i-1,j), G(i,j-1)), zero outside the box.
/// Throws ArgumentError unless p <= q, WindowError if ]p, q] leaves the grid.
double lattice_last_passage(const WeightGrid& grid, Site p, Site q);

/// Boundary increments X_k for sites k = origin, origin+1, ...; the signed
/// cumulative nu(z) = sum_{k=1}^{z} X_k (z >= 0), -sum_{k=z+1}^{0} X_k
/// (z < 0) is defined for z in [origin - 1, origin + size - 1].
class LatticeBoundary {
 public:
  LatticeBoundary() = default;
  LatticeBoundary(std::int64_t origin, std::vector<double> increments);

  std::int64_t origin() const { return origin_; }
  std::span<const double> increments() const { return increments_; }
  std::int64_t window_left() const { return origin_ - 1; }
  std::int64_t window_right() const {
    return origin_ + static_cast<std::int64_t>(increments_.size()) - 1;
  }
  /// Throws WindowError outside [window_left, window_right].
  double cumulative(std::int64_t z) const;

 private:
  std::int64_t origin_ = 1;
  std::vector<double> increments_;
  std::vector<double> prefix_;  // prefix_[k] = sum of increments_[0..k)
};

/// Lattice analog of last_passage_with_boundary:
///   max over integer z in [window_left, x] of
///   nu(z) + lattice_last_passage(grid, (z-1, 0), (x, t)),
/// i.e. a path leaving the boundary at z occupies column z. For t = 0 the
/// value is nu(x). The grid must contain sites [window_left, x] x [1, t].
LppResult lattice_last_passage_with_boundary(const LatticeBoundary& nu,
                                             const WeightGrid& grid,
                                             std::int64_t x, std::int64_t t,
                                             double margin = -1.0);

enum class ShapeModel { Continuum, Lattice };

/// Continuum: gamma * sqrt(x t). Lattice (exponential weights):
/// (sqrt(x) + sqrt(t))^2. Throws ArgumentError on negative arguments.
double shape_function(ShapeModel model, double x, double t, double gamma = 2.0);

struct GammaEstimate {
  std::int64_t n = 0;
  StatReport per_unit;  // estimate of E L(0, (n, n)) / n
};

struct GammaEstimates {
  std::vector<GammaEstimate> estimates;
  /// Every consecutive pair is nondecreasing within 2 combined standard
  /// errors.
  bool nondecreasing = true;
};

/// Monte Carlo estimate of E L(0, (n, n)) / n for each n on an intensity-one
/// Poisson environment with marks from `dist`. Replica k of size n uses
/// stream (seed, k, n).
GammaEstimates estimate_gamma(const WeightDistribution& dist,
                              std::span<const std::int64_t> n_list,
                              std::size_t replicas, std::uint64_t seed,
                              unsigned threads = 0);

/// Lattice counterpart: E G((0,0),(n,n)) / n for Exp(1) weights, whose
/// limit is shape_function(Lattice, 1, 1) = 4.
GammaEstimates estimate_lattice_shape(std::span<const std::int64_t> n_list,
                                      std::size_t replicas, std::uint64_t seed,
                                      unsigned threads = 0);

}  // namespace lpplab
