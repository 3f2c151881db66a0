#include "lpplab/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpplab/error.hpp"

namespace lpplab {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + name + "' (expected csv|json)");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Cell text for each column, std::nullopt for unset.
std::array<std::optional<std::string>, kRecordColumns.size()> cells(const Record& r) {
  auto num = [](const std::optional<double>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return format_double(*v);
  };
  auto integer = [](const std::optional<std::uint64_t>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return std::to_string(*v);
  };
  std::optional<std::string> reject;
  if (r.reject) reject = *r.reject ? "true" : "false";
  return {r.run_id,      r.subcommand,   r.model,        num(r.param), num(r.t),
          num(r.a_or_x), num(r.estimate), num(r.std_error), num(r.ci_lo), num(r.ci_hi),
          num(r.statistic), reject, integer(r.n), integer(r.seed)};
}

// Columns holding text rather than numbers/booleans in JSON.
bool is_text_column(std::size_t c) { return c <= 2; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out + "\"";
}

}  // namespace

std::string render_records(std::span<const Record> records, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    for (std::size_t c = 0; c < kRecordColumns.size(); ++c)
      os << (c ? "," : "") << kRecordColumns[c];
    os << "\n";
    for (const auto& r : records) {
      const auto row = cells(r);
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << (row[c] ? csv_escape(*row[c]) : "");
      os << "\n";
    }
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto row = cells(records[i]);
    os << (i ? ",\n  {" : "\n  {");
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? ", " : "") << json_escape(std::string(kRecordColumns[c])) << ": ";
      if (!row[c])
        os << "null";
      else if (is_text_column(c))
        os << json_escape(*row[c]);
      else
        os << *row[c];
    }
    os << "}";
  }
  os << (records.empty() ? "]\n" : "\n]\n");
  return os.str();
}

std::string render_trajectory(std::span<const FluidState> states, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "step,time,exited_left,entered_right,total_mass,atoms\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& s = states[i];
      os << i << "," << format_double(s.time) << "," << format_double(s.exited_left) << ","
         << format_double(s.entered_right) << "," << format_double(s.measure.total_mass())
         << ",";
      bool first = true;
      for (const auto& a : s.measure.atoms()) {
        os << (first ? "" : ";") << format_double(a.position) << ":" << format_double(a.mass);
        first = false;
      }
      os << "\n";
    }
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    os << (i ? ",\n  {" : "\n  {") << "\"step\": " << i << ", \"time\": " << format_double(s.time)
       << ", \"exited_left\": " << format_double(s.exited_left)
       << ", \"entered_right\": " << format_double(s.entered_right)
       << ", \"total_mass\": " << format_double(s.measure.total_mass()) << ", \"atoms\": [";
    bool first = true;
    for (const auto& a : s.measure.atoms()) {
      os << (first ? "" : ", ") << "[" << format_double(a.position) << ", "
         << format_double(a.mass) << "]";
      first = false;
    }
    os << "]}";
  }
  os << (states.empty() ? "]\n" : "\n]\n");
  return os.str();
}

std::string render_curves(std::span<const CurvePoint> points) {
  std::ostringstream os;
  os << "curve,x,y\n";
  for (const auto& p : points)
    os << csv_escape(p.curve) << "," << format_double(p.x) << "," << format_double(p.y) << "\n";
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

void emit(std::span<const Record> records, OutputFormat format, const std::string& path) {
  write_text(path, render_records(records, format));
}

}  // namespace lpplab
