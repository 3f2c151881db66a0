#include "lpplab/summary.hpp"

#include <algorithm>
#include <cmath>

#include "lpplab/error.hpp"

namespace lpplab {

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    comp_ += (sum_ - t) + v;
  else
    comp_ += (v - t) + sum_;
  sum_ = t;
}

StatReport make_report(double estimate, double std_error, std::size_t n) {
  StatReport r;
  r.estimate = estimate;
  r.std_error = std_error;
  r.ci95 = {estimate - kZ95 * std_error, estimate + kZ95 * std_error};
  r.n = n;
  return r;
}

namespace {

double mean_of(std::span<const double> xs) {
  CompensatedSum s;
  for (double v : xs) s.add(v);
  return s.value() / static_cast<double>(xs.size());
}

}  // namespace

StatReport summarize(std::span<const double> sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw SampleSizeError("summarize needs at least 2 values");
  const double m = mean_of(sample);
  CompensatedSum ss;
  for (double v : sample) ss.add((v - m) * (v - m));
  const double var = ss.value() / static_cast<double>(n - 1);
  return make_report(m, std::sqrt(var / static_cast<double>(n)), n);
}

StatReport summarize_variance(std::span<const double> sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw SampleSizeError("summarize_variance needs at least 2 values");
  const double m = mean_of(sample);
  CompensatedSum s2;
  CompensatedSum s4;
  for (double v : sample) {
    const double d2 = (v - m) * (v - m);
    s2.add(d2);
    s4.add(d2 * d2);
  }
  const double nd = static_cast<double>(n);
  const double m2 = s2.value() / nd;
  const double m4 = s4.value() / nd;
  const double var = s2.value() / (nd - 1.0);
  const double se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / nd);
  return make_report(var, se, n);
}

}  // namespace lpplab
