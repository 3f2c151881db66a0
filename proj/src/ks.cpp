#include <algorithm>
#include <cmath>
#include <vector>

#include "lpplab/error.hpp"
#include "lpplab/stats.hpp"

namespace lpplab {

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;  // the series converges poorly; tail is ~1 there
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestReport ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.size() < kMinKsSample || b.size() < kMinKsSample)
    throw SampleSizeError("ks_two_sample needs at least 50 values per sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double m = static_cast<double>(x.size());
  const double n = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / m - static_cast<double>(j) / n));
  }
  const double n_eff = m * n / (m + n);
  TestReport r;
  r.statistic = d;
  r.p_value_bound = kolmogorov_tail(std::sqrt(n_eff) * d);
  r.reject_at_1pct = d > kKsCritical1pct / std::sqrt(n_eff);
  r.n = x.size() + y.size();
  return r;
}

TestReport ks_normal(std::span<const double> a) {
  if (a.size() < kMinKsSample) throw SampleSizeError("ks_normal needs at least 50 values");
  std::vector<double> x(a.begin(), a.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = 0.5 * std::erfc(-x[i] / std::sqrt(2.0));
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  TestReport r;
  r.statistic = d;
  r.p_value_bound = kolmogorov_tail(std::sqrt(n) * d);
  r.reject_at_1pct = d > kKsCritical1pct / std::sqrt(n);
  r.n = x.size();
  return r;
}

}  // namespace lpplab
