#pragma once

#include <cstddef>
#include <span>

namespace lpplab {

/// Neumaier-compensated running sum. Adding the same values in the same
/// order always gives the same bits.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool overlaps(const Interval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

/// Point estimate with a normal-approximation 95% interval.
struct StatReport {
  double estimate = 0.0;
  double std_error = 0.0;
  Interval ci95{};
  std::size_t n = 0;
  /// Replicas whose truncation window never cleared the interior margin.
  std::size_t interior_failures = 0;
};

/// Outcome of a hypothesis test at the fixed 1% level.
struct TestReport {
  double statistic = 0.0;
  double p_value_bound = 1.0;
  bool reject_at_1pct = false;
  std::size_t n = 0;
};

inline constexpr double kZ95 = 1.959963984540054;

StatReport make_report(double estimate, double std_error, std::size_t n);

/// Sample mean with standard error s/sqrt(n). Needs n >= 2.
StatReport summarize(std::span<const double> sample);

/// Unbiased sample variance; standard error from the delta method,
/// sqrt((m4 - m2^2) / n) with central moments m2, m4.
StatReport summarize_variance(std::span<const double> sample);

}  // namespace lpplab
