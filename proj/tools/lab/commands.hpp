#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lab/config.hpp"
#include "lab/report.hpp"

namespace lab {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kConfigError = 2 };

struct CommandOptions {
  std::optional<std::filesystem::path> out;  // overrides output.path
  std::optional<Format> format;              // overrides output.format
  std::string suite;
  bool null_family = false;
  double bessel_scale = 1.0;
};

InfoReport soliton_info(const ExperimentConfig& cfg);

int cmd_info(const ExperimentConfig& cfg, const CommandOptions& options);
int cmd_verify(const ExperimentConfig& cfg, const CommandOptions& options);
int cmd_sweep(const ExperimentConfig& cfg, const CommandOptions& options);

}  // namespace lab
