#include "lpplab/stationary.hpp"

#include <algorithm>
#include <cmath>

#include "lpplab/error.hpp"

namespace lpplab {

namespace {

enum Lane : std::uint64_t { kBoundaryLane = 1, kBulkLane = 2, kTieLane = 3 };

std::int64_t lattice_index(double v) { return static_cast<std::int64_t>(std::floor(v)); }

}  // namespace

double initial_window(const EquilibriumSpec& spec, double x, double t,
                      const WindowPolicy& policy) {
  return policy.initial_scale *
         (std::abs(x) + spec.V * t + t * spec.left_flux() + 10.0 * std::sqrt(t + 1.0));
}

StationaryRealization::StationaryRealization(const EquilibriumSpec& spec, double t,
                                             double anchor, const RngStream& stream,
                                             WindowPolicy policy)
    : spec_(spec),
      t_(t),
      anchor_(spec.lattice() ? static_cast<double>(lattice_index(anchor)) : anchor),
      policy_(policy),
      boundary_rng_(stream.fork(kBoundaryLane)),
      bulk_rng_(stream.fork(kBulkLane)),
      tie_rng_(stream.fork(kTieLane)),
      left_(anchor_),
      atom_cursor_(anchor_),
      point_cursor_(anchor_),
      next_site_(lattice_index(anchor_)) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ArgumentError("realization: t must be >= 0");
  if (spec.lattice() && t != std::floor(t))
    throw ArgumentError("realization: lattice t must be an integer");
}

void StationaryRealization::extend_to(double left) {
  if (spec_.lattice()) left = static_cast<double>(lattice_index(left));
  if (left >= left_) return;
  if (spec_.lattice()) {
    const auto height = static_cast<std::size_t>(t_);
    // Sites down to `left` carry weights; increments are needed for
    // left+1 .. anchor only, but drawing one per site keeps both sequences
    // aligned with the site index.
    while (next_site_ >= lattice_index(left)) {
      increment_desc_.push_back(boundary_rng_.exponential(spec_.param));
      for (std::size_t k = 0; k < height; ++k) column_desc_.push_back(bulk_rng_.exponential(1.0));
      --next_site_;
    }
  } else {
    while (atom_cursor_ >= left) {
      const double gap = boundary_rng_.exponential(spec_.param);
      if (gap <= 0.0) continue;
      atom_cursor_ -= gap;
      atom_desc_.push_back(atom_cursor_);
    }
    const double line_rate = t_;  // unit intensity on a strip of height t
    if (line_rate > 0.0) {
      const WeightDistribution weights = spec_.bulk_weights();
      while (point_cursor_ >= left) {
        const double gap = bulk_rng_.exponential(line_rate);
        if (gap <= 0.0) continue;
        point_cursor_ -= gap;
        WeightedPoint p;
        p.x = point_cursor_;
        p.t = bulk_rng_.uniform_open0() * t_;
        p.w = weights.sample(bulk_rng_);
        point_desc_.push_back(p);
      }
    }
  }
  left_ = left;
  built_ = false;
}

void StationaryRealization::build() {
  if (built_) return;
  if (spec_.lattice()) {
    const std::int64_t wl = lattice_index(left_);
    const std::int64_t hi = lattice_index(anchor_);
    const auto sites = static_cast<std::size_t>(hi - wl + 1);  // weights on [wl, hi]
    const auto height = static_cast<std::size_t>(t_);
    std::vector<double> inc(sites - 1);  // increments on [wl+1, hi]
    for (std::size_t k = 0; k + 1 < sites; ++k) inc[sites - 2 - k] = increment_desc_[k];
    increments_.emplace(wl + 1, std::move(inc));
    if (height > 0) {
      std::vector<double> w(sites * height);
      for (std::size_t k = 0; k < sites; ++k) {
        std::copy_n(column_desc_.begin() + static_cast<std::ptrdiff_t>(k * height), height,
                    w.begin() + static_cast<std::ptrdiff_t>((sites - 1 - k) * height));
      }
      grid_.emplace(static_cast<std::int64_t>(sites), static_cast<std::int64_t>(height),
                    std::move(w), wl, 1);
    } else {
      grid_.emplace(0, 0, std::vector<double>{}, wl, 1);
    }
  } else {
    std::vector<Atom> atoms;
    atoms.reserve(atom_desc_.size());
    for (auto it = atom_desc_.rbegin(); it != atom_desc_.rend(); ++it) {
      if (*it >= left_ && *it <= anchor_) atoms.push_back({*it, 1.0});
    }
    measure_.emplace(std::move(atoms), left_, anchor_);

    // Ties are resolved on the stored points so every rebuild sees the same
    // environment.
    redraw_time_ties(point_desc_, 0.0, t_, tie_rng_);
    std::vector<WeightedPoint> pts;
    pts.reserve(point_desc_.size());
    for (auto it = point_desc_.rbegin(); it != point_desc_.rend(); ++it) {
      if (it->x > left_) pts.push_back(*it);
    }
    cloud_.emplace(std::move(pts), Rect{left_, anchor_, 0.0, t_}, 1.0);
  }
  built_ = true;
}

double StationaryRealization::nu(double y) {
  if (y > anchor_) throw CoverageError("realization: query right of the anchor");
  if (y < left_) extend_to(y);
  build();
  if (spec_.lattice()) return increments_->cumulative(lattice_index(y));
  return measure_->cumulative(y);
}

LppResult StationaryRealization::solve_on_window(double x, double left) {
  if (x > anchor_) throw CoverageError("realization: x right of the anchor");
  extend_to(left);
  // A previous extension may have gone further left than requested; the
  // solver always uses the full materialized window.
  build();
  const double margin = policy_.margin_multiplier * std::sqrt(t_ + 1.0);
  if (spec_.lattice())
    return lattice_last_passage_with_boundary(*increments_, *grid_, lattice_index(x),
                                              static_cast<std::int64_t>(t_), margin);
  return last_passage_with_boundary(*measure_, *cloud_, x, t_, margin);
}

LppResult StationaryRealization::solve(double x) {
  double width = initial_window(spec_, x, t_, policy_);
  LppResult r = solve_on_window(x, -width);
  for (int d = 0; d < policy_.max_doublings && !r.interior; ++d) {
    width *= 2.0;
    r = solve_on_window(x, -width);
  }
  return r;
}

}  // namespace lpplab
