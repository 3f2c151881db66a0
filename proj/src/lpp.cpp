#include "lpplab/lpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpplab/error.hpp"
#include "lpplab/fenwick.hpp"
#include "lpplab/parallel.hpp"

namespace lpplab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// (value, exit) ordered lexicographically, so a max keeps the right-most
// exit among equal values.
struct Candidate {
  double value = kNegInf;
  double exit = kNegInf;

  bool operator<(const Candidate& o) const {
    return value < o.value || (value == o.value && exit < o.exit);
  }
};

}  // namespace

double default_interior_margin(double t) { return 2.0 * std::sqrt(t + 1.0); }

double last_passage(const PointCloud& cloud, Point2 p, Point2 q) {
  if (!(p.x <= q.x && p.t <= q.t))
    throw ArgumentError("last_passage: p must be <= q coordinatewise");
  const auto pts = cloud.points();
  const auto rank = cloud.t_rank();
  FenwickMax<double> best(pts.size(), 0.0);
  double overall = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const WeightedPoint& pt = pts[i];
    if (pt.x <= p.x) continue;
    if (pt.x > q.x) break;
    if (!(pt.t > p.t && pt.t <= q.t)) continue;
    const double v = pt.w + best.prefix(rank[i]);
    best.raise(rank[i], v);
    if (v > overall) overall = v;
  }
  return overall;
}

LppResult last_passage_with_boundary(const AtomicMeasure& nu,
                                     const PointCloud& cloud, double x,
                                     double t, double margin) {
  const double wl = nu.window_left();
  if (x < wl)
    throw WindowError("last_passage_with_boundary: x left of the measure window");
  if (nu.window_right() < x)
    throw CoverageError("last_passage_with_boundary: measure window ends before x");
  if (t < 0.0) throw ArgumentError("last_passage_with_boundary: negative t");
  if (!cloud.window().covers(Rect{wl, x, 0.0, t}))
    throw CoverageError("last_passage_with_boundary: cloud does not cover [" +
                        std::to_string(wl) + ", " + std::to_string(x) + "] x [0, " +
                        std::to_string(t) + "]");
  if (margin < 0.0) margin = default_interior_margin(t);

  const auto pts = cloud.points();
  const auto rank = cloud.t_rank();
  const auto atoms = nu.atoms();

  FenwickMax<Candidate> best(pts.size(), Candidate{});
  Candidate overall{nu.cumulative(x), x};

  // Two-pointer walk: `below` is the mass of atoms strictly left of the
  // current point, `last_atom` the position of the last such atom.
  std::size_t next_atom = 0;
  double below = 0.0;
  double last_atom = wl;
  // cumulative_left(p.x) == base + below, base being minus the mass of the
  // atoms in [window_left, 0].
  const double base = nu.cumulative(wl) - (atoms.empty() || atoms.front().position > wl
                                               ? 0.0
                                               : atoms.front().mass);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const WeightedPoint& pt = pts[i];
    if (pt.x <= wl) continue;
    if (pt.x > x) break;
    if (!(pt.t > 0.0 && pt.t <= t)) continue;
    while (next_atom < atoms.size() && atoms[next_atom].position < pt.x) {
      below += atoms[next_atom].mass;
      last_atom = atoms[next_atom].position;
      ++next_atom;
    }
    Candidate from_boundary{base + below, last_atom};
    Candidate from_chain = best.prefix(rank[i]);
    Candidate start = from_chain < from_boundary ? from_boundary : from_chain;
    Candidate here{start.value + pt.w, start.exit};
    best.raise(rank[i], here);
    if (overall < here) overall = here;
  }

  LppResult r;
  r.value = overall.value;
  r.exit_point = overall.exit;
  r.window_left_used = wl;
  r.interior = overall.exit >= wl + margin;
  return r;
}

}  // namespace lpplab

namespace lpplab {

namespace {

void mark_trend(GammaEstimates& out) {
  for (std::size_t i = 1; i < out.estimates.size(); ++i) {
    const auto& a = out.estimates[i - 1].per_unit;
    const auto& b = out.estimates[i].per_unit;
    const double tol = 2.0 * std::hypot(a.std_error, b.std_error);
    if (b.estimate < a.estimate - tol) out.nondecreasing = false;
  }
}

}  // namespace

double shape_function(ShapeModel model, double x, double t, double gamma) {
  if (x < 0.0 || t < 0.0) throw ArgumentError("shape_function: negative argument");
  if (model == ShapeModel::Continuum) return gamma * std::sqrt(x * t);
  const double s = std::sqrt(x) + std::sqrt(t);
  return s * s;
}

GammaEstimates estimate_gamma(const WeightDistribution& dist,
                              std::span<const std::int64_t> n_list,
                              std::size_t replicas, std::uint64_t seed,
                              unsigned threads) {
  if (n_list.empty()) throw ArgumentError("estimate_gamma: empty n list");
  GammaEstimates out;
  for (const std::int64_t n : n_list) {
    if (n < 1) throw ArgumentError("estimate_gamma: n must be positive");
    const double side = static_cast<double>(n);
    auto per_unit = parallel_map<double>(replicas, threads, [&](std::size_t k) {
      RngStream rng(seed, k, static_cast<std::uint64_t>(n));
      const PointCloud cloud = sample_poisson_rect(Rect{0.0, side, 0.0, side}, 1.0, dist, rng);
      return last_passage(cloud, {0.0, 0.0}, {side, side}) / side;
    });
    out.estimates.push_back({n, summarize(per_unit)});
  }
  mark_trend(out);
  return out;
}

GammaEstimates estimate_lattice_shape(std::span<const std::int64_t> n_list,
                                      std::size_t replicas, std::uint64_t seed,
                                      unsigned threads) {
  if (n_list.empty()) throw ArgumentError("estimate_lattice_shape: empty n list");
  GammaEstimates out;
  for (const std::int64_t n : n_list) {
    if (n < 1) throw ArgumentError("estimate_lattice_shape: n must be positive");
    auto per_unit = parallel_map<double>(replicas, threads, [&](std::size_t k) {
      RngStream rng(seed, k, static_cast<std::uint64_t>(n) + (1ULL << 40));
      const WeightGrid grid = sample_lattice_grid(n, n, 1.0, rng);
      return lattice_last_passage(grid, {0, 0}, {n, n}) / static_cast<double>(n);
    });
    out.estimates.push_back({n, summarize(per_unit)});
  }
  mark_trend(out);
  return out;
}


}  // namespace lpplab
