#include "lpplab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lpplab/error.hpp"
#include "lpplab/parallel.hpp"

namespace lpplab {

namespace {

// Lanes keep the replica sets of different experiments (and of the two sides
// of one experiment) independent even when they share replica indices.
enum Lane : std::uint64_t {
  kL2Lhs = 11,
  kL2Rhs = 12,
  kTranslationLhs = 21,
  kTranslationRhs = 22,
  kMean = 31,
  kClt = 41,
  kCltJitter = 42,
  kExponent = 51,
};

double lattice_floor(const EquilibriumSpec& spec, double v) {
  return spec.lattice() ? std::floor(v) : v;
}

struct Draw {
  double value = 0.0;
  bool interior = true;
};

std::size_t count_failures(const std::vector<Draw>& draws) {
  return static_cast<std::size_t>(
      std::count_if(draws.begin(), draws.end(), [](const Draw& d) { return !d.interior; }));
}

std::vector<double> values_of(const std::vector<Draw>& draws) {
  std::vector<double> v(draws.size());
  std::transform(draws.begin(), draws.end(), v.begin(), [](const Draw& d) { return d.value; });
  return v;
}

// Independent replicas of L(x, t) (plus `offset(realization)`), replica k on
// stream (seed, k, lane).
template <class Offset>
std::vector<Draw> replicate(const McConfig& cfg, std::uint64_t lane, double x, double anchor,
                            Offset&& offset) {
  return parallel_map<Draw>(cfg.replicas, cfg.threads, [&](std::size_t k) {
    StationaryRealization real(cfg.spec, cfg.t, anchor, RngStream(cfg.master_seed, k, lane),
                               cfg.window);
    const LppResult r = real.solve(x);
    return Draw{r.value + offset(real), r.interior};
  });
}

std::vector<Draw> replicate(const McConfig& cfg, std::uint64_t lane, double x) {
  return replicate(cfg, lane, x, std::max(x, 0.0), [](StationaryRealization&) { return 0.0; });
}

void check_t_list(std::span<const double> t_values) {
  const std::set<double> distinct(t_values.begin(), t_values.end());
  if (distinct.size() < 4 || *distinct.begin() <= 0.0 ||
      *distinct.rbegin() < 8.0 * *distinct.begin())
    throw ArgumentError("variance exponent fit needs >= 4 distinct positive t spanning a factor of 8");
}

}  // namespace

void McConfig::validate() const {
  if (replicas < 2) throw ArgumentError("McConfig: replicas must be >= 2");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ArgumentError("McConfig: t must be >= 0");
  if (a.has_value() == x.has_value())
    throw ArgumentError("McConfig: set exactly one of direction a or position x");
  if (a && *a < 0.0) throw ArgumentError("McConfig: direction a must be >= 0");
  if (spec.lattice() && t != std::floor(t))
    throw ArgumentError("McConfig: lattice t must be an integer");
}

double McConfig::position() const {
  return lattice_floor(spec, a ? *a * t : *x);
}

double McConfig::characteristic_position(double V) const {
  return lattice_floor(spec, V * t);
}

L2IdentityResult mc_l2_identity(const McConfig& cfg) {
  cfg.validate();
  const double x = cfg.position();
  const double xc = cfg.characteristic_position(cfg.spec.V);
  const double shift = x - xc;
  const double drift = cfg.spec.psi * cfg.t;

  // Both terms of the discrepancy come from the same realization.
  const auto lhs = replicate(cfg, kL2Lhs, x, std::max({x, shift, 0.0}),
                             [&](StationaryRealization& real) { return -real.nu(shift) - drift; });
  std::vector<double> squares(lhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) squares[k] = lhs[k].value * lhs[k].value;

  const auto rhs = replicate(cfg, kL2Rhs, xc);

  L2IdentityResult out;
  out.lhs = summarize(squares);
  out.lhs.interior_failures = count_failures(lhs);
  out.rhs = summarize_variance(values_of(rhs));
  out.rhs.interior_failures = count_failures(rhs);
  out.compatible = out.lhs.ci95.overlaps(out.rhs.ci95);
  return out;
}

TranslationResult mc_translation_identity(const McConfig& cfg, double V, bool drop_correction) {
  cfg.validate();
  const double x = cfg.position();
  const double xv = cfg.characteristic_position(V);
  const double shift = x - xv;

  const auto lhs = replicate(cfg, kTranslationLhs, xv);
  const auto rhs = replicate(cfg, kTranslationRhs, x, std::max({x, shift, 0.0}),
                             [&](StationaryRealization& real) {
                               return drop_correction ? 0.0 : -real.nu(shift);
                             });
  const auto a = values_of(lhs);
  const auto b = values_of(rhs);
  TranslationResult out;
  out.test = ks_two_sample(a, b);
  out.lhs_mean = summarize(a);
  out.lhs_mean.interior_failures = count_failures(lhs);
  out.rhs_mean = summarize(b);
  out.rhs_mean.interior_failures = count_failures(rhs);
  return out;
}

StatReport mc_stationary_mean(const McConfig& cfg, double V) {
  if (cfg.replicas < 2) throw ArgumentError("McConfig: replicas must be >= 2");
  const double xv = cfg.characteristic_position(V);
  const double predicted = clt_centering(cfg.spec, xv, cfg.t);
  const auto draws = replicate(cfg, kMean, xv);
  std::vector<double> diff(draws.size());
  for (std::size_t k = 0; k < draws.size(); ++k) diff[k] = draws[k].value - predicted;
  StatReport r = summarize(diff);
  r.interior_failures = count_failures(draws);
  return r;
}

CltResult mc_clt(const McConfig& cfg, bool normality) {
  cfg.validate();
  const double z = cfg.position();
  const double dir = cfg.a ? *cfg.a : (cfg.t > 0.0 ? z / cfg.t : 0.0);
  const bool characteristic = dir == cfg.spec.V;
  if (characteristic && normality)
    throw CharacteristicDirectionError(
        "mc_clt: the Gaussian limit does not hold along the characteristic direction");
  if (!(cfg.t > 0.0)) throw ArgumentError("mc_clt: t must be positive");

  const auto draws = replicate(cfg, kClt, z);
  const auto values = values_of(draws);
  const double t = cfg.t;

  CltResult out;
  out.sigma2 = sigma_squared(cfg.spec, dir);
  const StatReport var = summarize_variance(values);
  out.var_slope = make_report(var.estimate / t, var.std_error / t, var.n);
  out.var_slope.interior_failures = count_failures(draws);

  const double centering = clt_centering(cfg.spec, z, t);
  std::vector<double> offsets(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) offsets[k] = values[k] - centering;
  out.mean_offset = summarize(offsets);

  if (normality && !characteristic) {
    const double scale = std::sqrt(out.sigma2 * t);
    std::vector<double> standardized(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
      double v = offsets[k];
      if (!cfg.spec.lattice()) {
        RngStream jitter(cfg.master_seed, k, kCltJitter);
        v += jitter.uniform() - 0.5;
      }
      standardized[k] = v / scale;
    }
    out.normality = ks_normal(standardized);
  }
  return out;
}

ExponentFit fit_log_log_slope(std::span<const double> t_values,
                              std::span<const StatReport> variances) {
  if (t_values.size() != variances.size())
    throw ArgumentError("fit_log_log_slope: mismatched inputs");
  check_t_list(t_values);

  const std::size_t m = t_values.size();
  std::vector<double> lx(m), ly(m), sy(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(variances[i].estimate > 0.0))
      throw ArgumentError("fit_log_log_slope: variances must be positive");
    lx[i] = std::log(t_values[i]);
    ly[i] = std::log(variances[i].estimate);
    sy[i] = variances[i].std_error / variances[i].estimate;
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  double var_slope = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double c = (lx[i] - mx) / sxx;
    var_slope += c * c * sy[i] * sy[i];
  }
  const double se = std::sqrt(var_slope);
  fit.ci = {fit.slope - kZ95 * se, fit.slope + kZ95 * se};
  fit.t_values.assign(t_values.begin(), t_values.end());
  fit.variance.assign(variances.begin(), variances.end());
  fit.strictly_decreasing = true;
  for (std::size_t i = 0; i < m; ++i) {
    fit.var_over_t.push_back(variances[i].estimate / t_values[i]);
    fit.max_var_over_t = std::max(fit.max_var_over_t, fit.var_over_t.back());
    if (i > 0 && !(fit.var_over_t[i] < fit.var_over_t[i - 1])) fit.strictly_decreasing = false;
  }
  return fit;
}

ExponentFit fit_variance_exponent(const EquilibriumSpec& spec, std::span<const double> t_list,
                                  std::size_t replicas, std::uint64_t seed, unsigned threads,
                                  const WindowPolicy& window) {
  check_t_list(t_list);
  std::vector<StatReport> variances;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    McConfig cfg;
    cfg.spec = spec;
    cfg.t = t_list[i];
    cfg.a = spec.V;
    cfg.replicas = replicas;
    cfg.master_seed = seed;
    cfg.window = window;
    cfg.threads = threads;
    cfg.validate();
    const auto draws = replicate(cfg, kExponent * 1000 + i, cfg.characteristic_position(spec.V));
    variances.push_back(summarize_variance(values_of(draws)));
    failures += count_failures(draws);
  }
  ExponentFit fit = fit_log_log_slope(t_list, variances);
  fit.interior_failures = failures;
  return fit;
}

}  // namespace lpplab
