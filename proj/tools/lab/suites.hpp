#pragma once

#include <string>
#include <vector>

#include "lab/config.hpp"
#include "lab/report.hpp"
#include "soliton/soliton.hpp"

namespace lab {

struct SuiteOptions {
  // Multiplies every K_nu value from the representation under test; a test hook for the specfun suite.
  double bessel_scale = 1.0;
};

const std::vector<std::string>& suite_names();

// Throws ConfigError for an unknown suite name.
std::vector<CheckRow> run_suite(const std::string& name, const ExperimentConfig& cfg, const SuiteOptions& options = {});

std::vector<CheckRow> geometry_checks(const soliton::Soliton& s, const Grids& grids);
std::vector<CheckRow> bounds_checks(const std::vector<soliton::SolitonParams>& sets, double check_tol);
std::vector<CheckRow> specfun_checks(const SuiteOptions& options);
std::vector<CheckRow> monotonicity_checks(const soliton::Soliton& s, const ExperimentConfig& cfg);

// (n=2, a=1, alpha=1) and (n=3, a=(1,2), alpha=1).
std::vector<soliton::SolitonParams> reference_parameter_sets();

}  // namespace lab
