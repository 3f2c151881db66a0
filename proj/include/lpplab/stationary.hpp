#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpplab/environment.hpp"
#include "lpplab/equilibrium.hpp"
#include "lpplab/lpp.hpp"
#include "lpplab/measure.hpp"
#include "lpplab/rng.hpp"

namespace lpplab {

/// Truncation policy for the sup over z <= x. The search starts on
/// [-W, x] with W = 4 (|x| + V t + t * left_flux + 10 sqrt(t + 1)); when the
/// exit point falls within margin_multiplier * sqrt(t + 1) of -W the window
/// doubles, up to max_doublings times.
struct WindowPolicy {
  double initial_scale = 4.0;
  double margin_multiplier = 2.0;
  int max_doublings = 6;
};

double initial_window(const EquilibriumSpec& spec, double x, double t,
                      const WindowPolicy& policy = {});

/// One coupled realization of (equilibrium boundary, bulk environment) on
/// (-inf, anchor] x (0, t], materialized lazily from the anchor leftwards.
/// Extending the window continues the same random sequences, so the
/// environment restricted to [-W, anchor] does not depend on how far the
/// window was eventually pushed.
class StationaryRealization {
 public:
  StationaryRealization(const EquilibriumSpec& spec, double t, double anchor,
                        const RngStream& stream, WindowPolicy policy = {});

  const EquilibriumSpec& spec() const { return spec_; }
  double t() const { return t_; }
  double anchor() const { return anchor_; }
  /// Current left edge of the materialized window.
  double window_left() const { return left_; }

  /// Materializes the environment down to `left` (no-op if already there).
  void extend_to(double left);

  /// Boundary cumulative nu(y), extending the window if y is left of it.
  double nu(double y);

  /// L_nu(x, t) under the adaptive window policy. x must not exceed the
  /// anchor (and, on the lattice, is truncated to an integer).
  LppResult solve(double x);

  /// L_nu(x, t) on the fixed window [left, x] (after extending to it).
  LppResult solve_on_window(double x, double left);

 private:
  void build();

  EquilibriumSpec spec_;
  double t_;
  double anchor_;
  WindowPolicy policy_;
  RngStream boundary_rng_;
  RngStream bulk_rng_;
  RngStream tie_rng_;
  double left_;

  // Continuum: boundary atoms and bulk points, generated right to left.
  std::vector<double> atom_desc_;
  std::vector<WeightedPoint> point_desc_;
  double atom_cursor_;
  double point_cursor_;
  // Lattice: per-site increment and weight column, sites anchor, anchor-1, ...
  std::vector<double> increment_desc_;
  std::vector<double> column_desc_;  // t weights per site, contiguous
  std::int64_t next_site_;

  // Cached solver inputs for the current window.
  bool built_ = false;
  std::optional<AtomicMeasure> measure_;
  std::optional<PointCloud> cloud_;
  std::optional<LatticeBoundary> increments_;
  std::optional<WeightGrid> grid_;
};

}  // namespace lpplab
