#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpplab/rng.hpp"

namespace lpplab {

/// A mark w at space-time location (x, t).
struct WeightedPoint {
  double x = 0.0;
  double t = 0.0;
  double w = 1.0;
};

struct Rect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;

  double width() const { return x_hi - x_lo; }
  double height() const { return t_hi - t_lo; }
  double area() const { return width() * height(); }
  bool contains(double x, double t) const {
    return x >= x_lo && x <= x_hi && t >= t_lo && t <= t_hi;
  }
  bool covers(const Rect& other) const {
    return other.x_lo >= x_lo && other.x_hi <= x_hi && other.t_lo >= t_lo &&
           other.t_hi <= t_hi;
  }
};

/// Finite realization of a marked planar point process inside `window`.
///
/// Invariants (checked on construction, ArgumentError otherwise): points lie
/// in the window, marks are positive and finite, x-coordinates are pairwise
/// distinct and so are t-coordinates. Points are stored sorted by x, and the
/// rank of each point's t-coordinate among all points is cached for the
/// sweep solvers.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(std::vector<WeightedPoint> points, Rect window,
             double intensity = 1.0);

  std::span<const WeightedPoint> points() const { return points_; }
  /// t_rank()[i] is the 0-based rank of points()[i].t.
  std::span<const std::uint32_t> t_rank() const { return t_rank_; }
  const Rect& window() const { return window_; }
  double intensity() const { return intensity_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<WeightedPoint> points_;
  std::vector<std::uint32_t> t_rank_;
  Rect window_{};
  double intensity_ = 1.0;
};

/// Ranks of `values` (0-based, ties share nothing: returns false if any two
/// values are equal). Bucket-based, linear time for spread-out inputs.
bool rank_distinct(std::span<const double> values, double lo, double hi,
                   std::vector<std::uint32_t>& ranks);

/// Re-draws the t-coordinate of points involved in exact t ties (uniform on
/// (t_lo, t_hi]) until all t-coordinates are distinct.
void redraw_time_ties(std::vector<WeightedPoint>& points, double t_lo,
                      double t_hi, RngStream& rng);

/// Mark distribution F.
class WeightDistribution {
 public:
  enum class Kind { Dirac, Exponential, DiscreteTable };

  static WeightDistribution dirac(double c);
  static WeightDistribution exponential(double rate);
  static WeightDistribution table(std::vector<double> values,
                                  std::vector<double> probs);
  /// Parses "dirac:1", "exp:2", "table:1,2,5:0.2,0.3,0.5".
  static WeightDistribution parse(const std::string& text);

  Kind kind() const { return kind_; }
  double param() const { return param_; }
  std::span<const double> values() const { return values_; }
  std::span<const double> probs() const { return probs_; }

  double sample(RngStream& rng) const;
  double mean() const;
  double variance() const;
  std::string to_string() const;

  bool operator==(const WeightDistribution&) const = default;

 private:
  WeightDistribution() = default;
  Kind kind_ = Kind::Dirac;
  double param_ = 1.0;
  std::vector<double> values_;
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

/// Dense grid of lattice weights. `origin` is the (first, second) coordinate
/// of entry (0, 0); the first coordinate is the space index, the second the
/// time index. Storage is row-major with one row per space index.
class WeightGrid {
 public:
  WeightGrid(std::int64_t rows, std::int64_t cols,
             std::vector<double> weights, std::int64_t origin_row = 1,
             std::int64_t origin_col = 1);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t origin_row() const { return origin_row_; }
  std::int64_t origin_col() const { return origin_col_; }
  std::int64_t last_row() const { return origin_row_ + rows_ - 1; }
  std::int64_t last_col() const { return origin_col_ + cols_ - 1; }
  std::span<const double> weights() const { return weights_; }

  bool contains(std::int64_t i, std::int64_t j) const {
    return i >= origin_row_ && i <= last_row() && j >= origin_col_ &&
           j <= last_col();
  }
  /// Weight at absolute site (i, j); unchecked.
  double at(std::int64_t i, std::int64_t j) const {
    return weights_[static_cast<std::size_t>((i - origin_row_) * cols_ +
                                             (j - origin_col_))];
  }

 private:
  std::int64_t rows_;
  std::int64_t cols_;
  std::int64_t origin_row_;
  std::int64_t origin_col_;
  std::vector<double> weights_;
};

/// Homogeneous Poisson process of the given intensity on `window`, with
/// i.i.d. marks from `dist`. Points are generated by exponential gaps along
/// x, so the cloud comes out sorted without a sort. Exact coordinate ties
/// are re-drawn.
PointCloud sample_poisson_rect(const Rect& window, double intensity,
                               const WeightDistribution& dist, RngStream& rng);

/// True iff the distribution has a finite exponential moment for some a > 0.
/// Every supported kind has bounded support or an exponential tail.
bool check_exp_moment(const WeightDistribution& dist);

/// rows x cols grid of i.i.d. Exponential(rate) weights.
WeightGrid sample_lattice_grid(std::int64_t rows, std::int64_t cols,
                               double rate, RngStream& rng,
                               std::int64_t origin_row = 1,
                               std::int64_t origin_col = 1);

}  // namespace lpplab
