#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpplab/error.hpp"
#include "lpplab/lpp.hpp"

namespace lpplab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Candidate {
  double value = kNegInf;
  double exit = kNegInf;

  bool operator<(const Candidate& o) const {
    return value < o.value || (value == o.value && exit < o.exit);
  }
};

const Candidate& max_of(const Candidate& a, const Candidate& b) {
  return a < b ? b : a;
}

}  // namespace

double lattice_last_passage(const WeightGrid& grid, Site p, Site q) {
  if (!(p.i <= q.i && p.j <= q.j))
    throw ArgumentError("lattice_last_passage: p must be <= q coordinatewise");
  if (p.i == q.i || p.j == q.j) return 0.0;
  if (!grid.contains(p.i + 1, p.j + 1) || !grid.contains(q.i, q.j))
    throw WindowError("lattice_last_passage: box leaves the grid");
  const auto height = static_cast<std::size_t>(q.j - p.j);
  std::vector<double> col(height + 1, 0.0);  // col[0] stays 0
  for (std::int64_t i = p.i + 1; i <= q.i; ++i) {
    for (std::size_t k = 1; k <= height; ++k) {
      const double w = grid.at(i, p.j + static_cast<std::int64_t>(k));
      col[k] = w + std::max(col[k], col[k - 1]);
    }
  }
  return col[height];
}

LatticeBoundary::LatticeBoundary(std::int64_t origin, std::vector<double> increments)
    : origin_(origin), increments_(std::move(increments)) {
  prefix_.resize(increments_.size() + 1, 0.0);
  for (std::size_t k = 0; k < increments_.size(); ++k) {
    if (!(increments_[k] > 0.0) || !std::isfinite(increments_[k]))
      throw ArgumentError("LatticeBoundary: increments must be positive");
    prefix_[k + 1] = prefix_[k] + increments_[k];
  }
}

double LatticeBoundary::cumulative(std::int64_t z) const {
  if (z < window_left() || z > window_right())
    throw WindowError("LatticeBoundary: z = " + std::to_string(z) + " outside [" +
                      std::to_string(window_left()) + ", " +
                      std::to_string(window_right()) + "]");
  // prefix over sites origin..z, minus the part over sites origin..0.
  auto upto = [&](std::int64_t s) {
    const std::int64_t k = std::clamp<std::int64_t>(
        s - origin_ + 1, 0, static_cast<std::int64_t>(increments_.size()));
    return prefix_[static_cast<std::size_t>(k)];
  };
  return upto(z) - upto(0);
}

LppResult lattice_last_passage_with_boundary(const LatticeBoundary& nu,
                                             const WeightGrid& grid,
                                             std::int64_t x, std::int64_t t,
                                             double margin) {
  const std::int64_t wl = nu.window_left();
  if (x < wl) throw WindowError("lattice boundary solver: x left of the boundary window");
  if (x > nu.window_right())
    throw CoverageError("lattice boundary solver: boundary ends before x");
  if (t < 0) throw ArgumentError("lattice boundary solver: negative t");
  if (margin < 0.0) margin = default_interior_margin(static_cast<double>(t));

  Candidate overall{nu.cumulative(x), static_cast<double>(x)};
  if (t > 0) {
    if (!grid.contains(wl, 1) || !grid.contains(x, t))
      throw CoverageError("lattice boundary solver: grid does not cover [" +
                          std::to_string(wl) + ", " + std::to_string(x) + "] x [1, " +
                          std::to_string(t) + "]");
    const auto height = static_cast<std::size_t>(t);
    std::vector<Candidate> col(height + 1);  // entries 1..t; bottom = none
    for (std::int64_t i = wl; i <= x; ++i) {
      col[0] = Candidate{nu.cumulative(i), static_cast<double>(i)};
      for (std::size_t k = 1; k <= height; ++k) {
        const Candidate& prev = max_of(col[k], col[k - 1]);
        col[k] = Candidate{prev.value + grid.at(i, static_cast<std::int64_t>(k)), prev.exit};
      }
    }
    overall = max_of(overall, col[height]);
  }

  LppResult r;
  r.value = overall.value;
  r.exit_point = overall.exit;
  r.window_left_used = static_cast<double>(wl);
  r.interior = overall.exit >= static_cast<double>(wl) + margin;
  return r;
}

}  // namespace lpplab
