#include "lab/commands.hpp"

#include <iostream>

#include "lab/suites.hpp"
#include "soliton/jlt.hpp"
#include "soliton/monotone.hpp"
#include "soliton/soliton.hpp"

namespace lab {

namespace {

Format resolve_format(const ExperimentConfig& cfg, const CommandOptions& options) {
  return options.format.value_or(cfg.output.format);
}

std::optional<std::filesystem::path> resolve_path(const ExperimentConfig& cfg, const CommandOptions& options) {
  return options.out ? options.out : cfg.output.path;
}

}  // namespace

InfoReport soliton_info(const ExperimentConfig& cfg) {
  const soliton::Soliton s(cfg.soliton);
  InfoReport info{cfg.soliton, s.scalars(), {}};
  const auto nx = static_cast<std::size_t>(cfg.soliton.nx());
  for (double x : {0.0, 1.0}) {
    for (double y : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
      const std::vector<double> xs(nx, x);
      const soliton::ChartPoint p(xs, y);
      info.samples.push_back(SamplePoint{xs, y, s.theta(y), soliton::jlt::mean_curvature_sq(cfg.soliton, p),
                                         s.frame(p).metric.determinant()});
    }
  }
  return info;
}

int cmd_info(const ExperimentConfig& cfg, const CommandOptions& options) {
  write_output(render_info(soliton_info(cfg), resolve_format(cfg, options)), resolve_path(cfg, options));
  return kOk;
}

int cmd_verify(const ExperimentConfig& cfg, const CommandOptions& options) {
  SuiteOptions suite_options;
  suite_options.bessel_scale = options.bessel_scale;
  const std::vector<CheckRow> rows = run_suite(options.suite, cfg, suite_options);
  write_output(render_checks(rows, resolve_format(cfg, options)), resolve_path(cfg, options));
  for (const CheckRow& r : rows) {
    if (!r.passed()) {
      std::cerr << "FAIL " << r.name << ": measured " << format_double(r.measured) << ", required "
                << compare_symbol(r.compare) << ' ' << format_double(r.gate) << '\n';
    }
  }
  return all_passed(rows) ? kOk : kCheckFailure;
}

int cmd_sweep(const ExperimentConfig& cfg, const CommandOptions& options) {
  const soliton::Soliton s(cfg.soliton);
  soliton::SweepOptions sweep_options;
  sweep_options.null_family = options.null_family;
  const soliton::SweepTable table = soliton::delta_sweep(s, {}, cfg.sweep, cfg.tolerances.quad_tol, sweep_options);
  write_output(render_sweep(table, resolve_format(cfg, options)), resolve_path(cfg, options));

  using soliton::SweepVerdict;
  switch (table.verdict) {
    case SweepVerdict::None:
      return table.rows.front().converged ? kOk : kCheckFailure;
    case SweepVerdict::Divergent:
      return options.null_family ? kCheckFailure : kOk;
    case SweepVerdict::Null:
      return options.null_family ? kOk : kCheckFailure;
    case SweepVerdict::Inconclusive:
      break;
  }
  std::cerr << "sweep verdict INCONCLUSIVE (increasing: " << (table.increasing ? "yes" : "no")
            << ", ratio spread: " << format_double(table.ratio_spread) << ")\n";
  return kCheckFailure;
}

}  // namespace lab
