#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lpplab/equilibrium.hpp"
#include "lpplab/stationary.hpp"
#include "lpplab/summary.hpp"

namespace lpplab {

// --- Kolmogorov-Smirnov ----------------------------------------------------

/// Minimum sample size accepted by the KS tests.
inline constexpr std::size_t kMinKsSample = 50;
/// Asymptotic 1% critical value of sqrt(n_eff) * D.
inline constexpr double kKsCritical1pct = 1.63;

/// Limiting Kolmogorov tail P(K > lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_tail(double lambda);

/// Two-sample KS. Rejects when D > 1.63 sqrt((m + n) / (m n)); the p-value
/// is the asymptotic tail at sqrt(mn / (m + n)) D. Ties are handled by
/// stepping both empirical CDFs past equal values together.
TestReport ks_two_sample(std::span<const double> a, std::span<const double> b);

/// One-sample KS against the standard normal, rejecting when
/// D > 1.63 / sqrt(n).
TestReport ks_normal(std::span<const double> a);

// --- Monte Carlo experiments ------------------------------------------------

/// Experiment configuration. The evaluation point is either z_t = a t
/// (direction) or an explicit x; on the lattice it is truncated to an
/// integer.
struct McConfig {
  EquilibriumSpec spec;
  double t = 0.0;
  std::optional<double> a;
  std::optional<double> x;
  std::size_t replicas = 1000;
  std::uint64_t master_seed = 0;
  WindowPolicy window{};
  unsigned threads = 0;

  /// Throws ArgumentError unless replicas >= 2, t >= 0 and exactly one of
  /// a, x is set.
  void validate() const;
  double position() const;
  /// V t, truncated on the lattice.
  double characteristic_position(double V) const;
};

struct L2IdentityResult {
  StatReport lhs;  // E (L(x,t) - nu(x - V t) - psi t)^2, same realization
  StatReport rhs;  // Var L(V t, t), independent replicas
  bool compatible = false;  // 95% intervals overlap
};

L2IdentityResult mc_l2_identity(const McConfig& cfg);

struct TranslationResult {
  TestReport test;
  StatReport lhs_mean;  // L(V t, t)
  StatReport rhs_mean;  // L(x, t) - nu(x - V t)
};

/// Two-sample KS between independent draws of L(V t, t) and
/// L(x, t) - nu(x - V t). `drop_correction` omits the nu term (power check).
TranslationResult mc_translation_identity(const McConfig& cfg, double V,
                                          bool drop_correction = false);

/// Discrepancy E L(V t, t) - (V lambda t + t / lambda) (lattice:
/// V t / rho + t / (1 - rho)), which is zero under stationarity.
StatReport mc_stationary_mean(const McConfig& cfg, double V);

struct CltResult {
  StatReport var_slope;  // Var L(a t, t) / t
  double sigma2 = 0.0;   // predicted slope
  std::optional<TestReport> normality;
  StatReport mean_offset;  // E L - centering, for diagnostics
};

/// Variance slope and Gaussian fit along direction a. Along the
/// characteristic (a == V) the Gaussian limit does not hold: requesting
/// normality there throws CharacteristicDirectionError, otherwise the test
/// is skipped. For the integer-valued continuum model each value receives a
/// uniform(-1/2, 1/2) jitter before the normality test.
CltResult mc_clt(const McConfig& cfg, bool normality = true);

struct ExponentFit {
  double slope = 0.0;
  Interval ci{};
  std::vector<double> t_values;
  std::vector<StatReport> variance;  // Var L(V t, t) per t
  std::vector<double> var_over_t;
  double max_var_over_t = 0.0;
  bool strictly_decreasing = false;  // var_over_t
  std::size_t interior_failures = 0;
};

/// Least-squares slope of log Var against log t, with a 95% interval from
/// the delta-method standard errors of each log Var. Needs >= 4 distinct
/// positive t spanning at least a factor of 8.
ExponentFit fit_log_log_slope(std::span<const double> t_values,
                              std::span<const StatReport> variances);

/// Var L(V t, t) for every t, then fit_log_log_slope.
ExponentFit fit_variance_exponent(const EquilibriumSpec& spec,
                                  std::span<const double> t_list, std::size_t replicas,
                                  std::uint64_t seed, unsigned threads = 0,
                                  const WindowPolicy& window = {});

}  // namespace lpplab
