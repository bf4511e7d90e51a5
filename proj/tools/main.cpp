#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lab/commands.hpp"
#include "lab/config.hpp"
#include "lab/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for Lagrangian translating solitons"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format;
  lab::CommandOptions options;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Experiment config (JSON)")->required();
    cmd->add_option("--out", out_path, "Write the report here instead of the configured path or stdout");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* info = app.add_subcommand("info", "Soliton scalars and sample geometry");
  add_common(info);

  CLI::App* verify = app.add_subcommand("verify", "Run a check suite; exit 1 if any check fails");
  add_common(verify);
  verify->add_option("--suite", options.suite, "Suite name")->required()->check(CLI::IsMember(lab::suite_names()));
  verify->add_option("--inject-bessel-scale", options.bessel_scale, "Test hook: scale K_nu in the specfun suite")
      ->group("");

  CLI::App* sweep = app.add_subcommand("sweep", "Necessary-condition integral over the delta list");
  add_common(sweep);
  sweep->add_flag("--null-family", options.null_family, "Use f = 1 instead of f_delta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? lab::kOk : lab::kConfigError;
  }

  try {
    const lab::ExperimentConfig cfg = lab::load_config(config_path);
    if (!out_path.empty()) options.out = out_path;
    if (!format.empty()) options.format = lab::parse_format(format);
    if (*info) return lab::cmd_info(cfg, options);
    if (*verify) return lab::cmd_verify(cfg, options);
    return lab::cmd_sweep(cfg, options);
  } catch (const lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return lab::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return lab::kCheckFailure;
  }
}
