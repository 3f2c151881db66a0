#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpplab/fluid.hpp"

namespace lpplab {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);

/// One output row. Unset fields render as an empty CSV cell / JSON null.
struct Record {
  std::string run_id;
  std::string subcommand;
  std::string model;
  std::optional<double> param;
  std::optional<double> t;
  std::optional<double> a_or_x;
  std::optional<double> estimate;
  std::optional<double> std_error;
  std::optional<double> ci_lo;
  std::optional<double> ci_hi;
  std::optional<double> statistic;
  std::optional<bool> reject;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;
};

inline constexpr std::array<std::string_view, 14> kRecordColumns = {
    "run_id",    "subcommand", "model", "param",     "t",      "a_or_x", "estimate",
    "std_error", "ci_lo",      "ci_hi", "statistic", "reject", "n",      "seed"};

/// %.17g, which round-trips every finite double.
std::string format_double(double v);

/// CSV: header row plus one row per record, columns in kRecordColumns order.
/// JSON: array of flat objects with the same keys.
std::string render_records(std::span<const Record> records, OutputFormat format);

/// Trajectory layout, one row/object per state:
///   CSV  step,time,exited_left,entered_right,total_mass,atoms
///        with atoms as "pos:mass;pos:mass;..."
///   JSON {"step","time","exited_left","entered_right","total_mass",
///         "atoms":[[pos,mass],...]}
std::string render_trajectory(std::span<const FluidState> states, OutputFormat format);

/// Curves for plotting, CSV "curve,x,y".
struct CurvePoint {
  std::string curve;
  double x = 0.0;
  double y = 0.0;
};
std::string render_curves(std::span<const CurvePoint> points);

/// Writes text to `path`, or to stdout when path is "-". Throws IoError.
void write_text(const std::string& path, const std::string& text);

/// render_records + write_text.
void emit(std::span<const Record> records, OutputFormat format, const std::string& path);

}  // namespace lpplab
