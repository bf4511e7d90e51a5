#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lab/config.hpp"
#include "soliton/monotone.hpp"

namespace lab {

// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

enum class Compare {
  AtMost,   // passes when measured <= gate
  AtLeast,  // passes when measured >= gate
  Above,    // passes when measured > gate (strict margins)
};

struct CheckRow {
  std::string suite;
  std::string group;
  std::string name;
  double measured = 0.0;
  double gate = 0.0;
  Compare compare = Compare::AtMost;

  bool passed() const;
};

std::string compare_symbol(Compare c);
bool all_passed(const std::vector<CheckRow>& rows);

struct SamplePoint {
  std::vector<double> x;
  double y = 0.0;
  double theta = 0.0;
  double mean_curvature_sq = 0.0;
  double det_g = 0.0;
};

struct InfoReport {
  soliton::SolitonParams params;
  soliton::SolitonScalars scalars;
  std::vector<SamplePoint> samples;
};

std::string render_checks(const std::vector<CheckRow>& rows, Format format);
std::string render_sweep(const soliton::SweepTable& table, Format format);
std::string render_info(const InfoReport& info, Format format);

// Writes to `path` through a temporary file and a rename, or to stdout when no path is given.
void write_output(const std::string& text, const std::optional<std::filesystem::path>& path);

}  // namespace lab
