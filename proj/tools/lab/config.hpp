#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "soliton/chart.hpp"
#include "soliton/jlt.hpp"

namespace lab {

// Raised for unreadable, malformed or invalid configs; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& s);
std::string format_name(Format f);

struct Tolerances {
  double quad_tol = 1e-7;   // necessary-condition integrals and the sweep
  double check_tol = 1e-10; // quadratures inside verify checks
};

// x-coordinates are sampled on x_range; y on y_range and its mirror image, half the points each.
struct Grids {
  double x_lo = -3.0;
  double x_hi = 3.0;
  double y_lo = 0.1;
  double y_hi = 4.0;
  int x_count = 20;
  int y_count = 20;
};

struct OutputSpec {
  std::optional<std::filesystem::path> path;
  Format format = Format::Csv;
};

struct ExperimentConfig {
  soliton::SolitonParams soliton;
  Tolerances tolerances;
  Grids grids;
  std::vector<double> sweep{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10};
  OutputSpec output;

  void validate() const;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

// The chart sample points described by `grids` for a soliton with n - 1 x-coordinates.
std::vector<soliton::ChartPoint> chart_grid(const Grids& grids, int nx);
std::vector<double> y_grid(const Grids& grids);

}  // namespace lab
