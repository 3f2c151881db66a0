#include "lpplab/environment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lpplab/error.hpp"

namespace lpplab {

bool rank_distinct(std::span<const double> values, double lo, double hi,
                   std::vector<std::uint32_t>& ranks) {
  const std::size_t n = values.size();
  ranks.assign(n, 0);
  if (n == 0) return true;

  // Counting sort into n buckets, then sort inside each bucket. Correct for
  // any input; linear on average when the values are spread over [lo, hi].
  std::vector<std::uint32_t> bucket_of(n);
  std::vector<std::uint32_t> start(n + 1, 0);
  const double span = hi - lo;
  const double scale = span > 0.0 ? static_cast<double>(n) / span : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double pos = (values[i] - lo) * scale;
    std::size_t b = pos <= 0.0 ? 0 : static_cast<std::size_t>(pos);
    if (b >= n) b = n - 1;
    bucket_of[i] = static_cast<std::uint32_t>(b);
    ++start[b + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::uint32_t> order(n);
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (std::size_t i = 0; i < n; ++i) order[fill[bucket_of[i]]++] = static_cast<std::uint32_t>(i);
  auto by_value = [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; };
  for (std::size_t b = 0; b < n; ++b) {
    if (start[b + 1] - start[b] > 1)
      std::sort(order.begin() + start[b], order.begin() + start[b + 1], by_value);
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && !(values[order[r - 1]] < values[order[r]])) return false;
    ranks[order[r]] = static_cast<std::uint32_t>(r);
  }
  return true;
}

PointCloud::PointCloud(std::vector<WeightedPoint> points, Rect window,
                       double intensity)
    : points_(std::move(points)), window_(window), intensity_(intensity) {
  if (!(window_.x_lo <= window_.x_hi) || !(window_.t_lo <= window_.t_hi))
    throw ArgumentError("PointCloud: window bounds out of order");
  if (!(intensity_ >= 0.0)) throw ArgumentError("PointCloud: negative intensity");
  for (const auto& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.t) || !std::isfinite(p.w))
      throw ArgumentError("PointCloud: non-finite point");
    if (!(p.w > 0.0)) throw ArgumentError("PointCloud: non-positive mark");
    if (!window_.contains(p.x, p.t))
      throw ArgumentError("PointCloud: point outside window");
  }
  auto by_x = [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; };
  if (!std::is_sorted(points_.begin(), points_.end(), by_x))
    std::sort(points_.begin(), points_.end(), by_x);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].x < points_[i].x))
      throw ArgumentError("PointCloud: duplicate x-coordinate");
  }
  std::vector<double> ts(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) ts[i] = points_[i].t;
  if (!rank_distinct(ts, window_.t_lo, window_.t_hi, t_rank_))
    throw ArgumentError("PointCloud: duplicate t-coordinate");
}

void redraw_time_ties(std::vector<WeightedPoint>& points, double t_lo,
                      double t_hi, RngStream& rng) {
  std::vector<double> ts(points.size());
  std::vector<std::uint32_t> ranks;
  for (;;) {
    for (std::size_t i = 0; i < points.size(); ++i) ts[i] = points[i].t;
    if (rank_distinct(ts, t_lo, t_hi, ranks)) return;
    std::vector<std::size_t> idx(points.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return ts[a] < ts[b]; });
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (ts[idx[k]] == ts[idx[k - 1]])
        points[idx[k]].t = t_hi - rng.uniform() * (t_hi - t_lo);
    }
  }
}

// ---------------------------------------------------------------------------

WeightDistribution WeightDistribution::dirac(double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw ParameterError("Dirac weight must be positive and finite");
  WeightDistribution d;
  d.kind_ = Kind::Dirac;
  d.param_ = c;
  return d;
}

WeightDistribution WeightDistribution::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw ParameterError("exponential rate must be positive and finite");
  WeightDistribution d;
  d.kind_ = Kind::Exponential;
  d.param_ = rate;
  return d;
}

WeightDistribution WeightDistribution::table(std::vector<double> values,
                                             std::vector<double> probs) {
  if (values.empty() || values.size() != probs.size())
    throw ParameterError("discrete table needs matching nonempty values/probs");
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]))
      throw ParameterError("discrete table values must be positive");
    if (!(probs[i] >= 0.0)) throw ParameterError("discrete table probs must be >= 0");
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ParameterError("discrete table probs must sum to 1");
  WeightDistribution d;
  d.kind_ = Kind::DiscreteTable;
  d.values_ = std::move(values);
  d.probs_ = std::move(probs);
  d.cdf_.resize(d.probs_.size());
  std::partial_sum(d.probs_.begin(), d.probs_.end(), d.cdf_.begin());
  d.cdf_.back() = 1.0;
  return d;
}

namespace {

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParameterError("bad number in weight distribution: '" + item + "'");
    }
  }
  return out;
}

}  // namespace

WeightDistribution WeightDistribution::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "dirac") return dirac(rest.empty() ? 1.0 : parse_list(rest).at(0));
  if (kind == "exp") return exponential(rest.empty() ? 1.0 : parse_list(rest).at(0));
  if (kind == "table") {
    const auto sep = rest.find(':');
    if (sep == std::string::npos) throw ParameterError("table needs values:probs");
    return table(parse_list(rest.substr(0, sep)), parse_list(rest.substr(sep + 1)));
  }
  throw ParameterError("unknown weight distribution '" + text + "'");
}

double WeightDistribution::sample(RngStream& rng) const {
  switch (kind_) {
    case Kind::Dirac:
      return param_;
    case Kind::Exponential:
      return rng.exponential(param_);
    case Kind::DiscreteTable: {
      const double u = rng.uniform();
      const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
      const auto k = std::min<std::size_t>(it - cdf_.begin(), values_.size() - 1);
      return values_[k];
    }
  }
  return param_;
}

double WeightDistribution::mean() const {
  switch (kind_) {
    case Kind::Dirac:
      return param_;
    case Kind::Exponential:
      return 1.0 / param_;
    case Kind::DiscreteTable:
      return std::inner_product(values_.begin(), values_.end(), probs_.begin(), 0.0);
  }
  return 0.0;
}

double WeightDistribution::variance() const {
  switch (kind_) {
    case Kind::Dirac:
      return 0.0;
    case Kind::Exponential:
      return 1.0 / (param_ * param_);
    case Kind::DiscreteTable: {
      const double m = mean();
      double v = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i)
        v += probs_[i] * (values_[i] - m) * (values_[i] - m);
      return v;
    }
  }
  return 0.0;
}

std::string WeightDistribution::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Dirac:
      os << "dirac:" << param_;
      break;
    case Kind::Exponential:
      os << "exp:" << param_;
      break;
    case Kind::DiscreteTable:
      os << "table:";
      for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
      os << ":";
      for (std::size_t i = 0; i < probs_.size(); ++i) os << (i ? "," : "") << probs_[i];
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

WeightGrid::WeightGrid(std::int64_t rows, std::int64_t cols,
                       std::vector<double> weights, std::int64_t origin_row,
                       std::int64_t origin_col)
    : rows_(rows),
      cols_(cols),
      origin_row_(origin_row),
      origin_col_(origin_col),
      weights_(std::move(weights)) {
  if (rows_ < 0 || cols_ < 0) throw ArgumentError("WeightGrid: negative dimension");
  if (static_cast<std::int64_t>(weights_.size()) != rows_ * cols_)
    throw ArgumentError("WeightGrid: weight array does not match dimensions");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw ArgumentError("WeightGrid: weights must be positive");
  }
}

// ---------------------------------------------------------------------------

PointCloud sample_poisson_rect(const Rect& window, double intensity,
                               const WeightDistribution& dist, RngStream& rng) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity))
    throw ParameterError("intensity must be finite and >= 0");
  if (!(window.x_lo <= window.x_hi) || !(window.t_lo <= window.t_hi))
    throw ParameterError("sampling window bounds out of order");
  std::vector<WeightedPoint> pts;
  const double line_rate = intensity * window.height();
  if (window.area() <= 0.0 || line_rate <= 0.0) return PointCloud({}, window, intensity);

  pts.reserve(static_cast<std::size_t>(intensity * window.area() * 1.1) + 16);
  double x = window.x_lo;
  for (;;) {
    const double gap = rng.exponential(line_rate);
    if (gap <= 0.0) continue;  // exact x tie with the previous point
    x += gap;
    if (x > window.x_hi) break;
    WeightedPoint p;
    p.x = x;
    p.t = window.t_lo + rng.uniform_open0() * window.height();
    p.w = dist.sample(rng);
    pts.push_back(p);
  }

  redraw_time_ties(pts, window.t_lo, window.t_hi, rng);
  return PointCloud(std::move(pts), window, intensity);
}

bool check_exp_moment(const WeightDistribution& dist) {
  switch (dist.kind()) {
    case WeightDistribution::Kind::Dirac:
    case WeightDistribution::Kind::DiscreteTable:
      return true;  // bounded support
    case WeightDistribution::Kind::Exponential:
      return dist.param() > 0.0;  // finite for a < rate
  }
  return false;
}

WeightGrid sample_lattice_grid(std::int64_t rows, std::int64_t cols,
                               double rate, RngStream& rng,
                               std::int64_t origin_row,
                               std::int64_t origin_col) {
  if (rows < 1 || cols < 1) throw ParameterError("lattice grid needs rows, cols >= 1");
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw ParameterError("lattice weight rate must be positive");
  std::vector<double> w(static_cast<std::size_t>(rows * cols));
  for (auto& v : w) v = rng.exponential(rate);
  return WeightGrid(rows, cols, std::move(w), origin_row, origin_col);
}

}  // namespace lpplab
