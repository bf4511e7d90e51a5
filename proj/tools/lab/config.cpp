#include "lab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "soliton/error.hpp"

namespace lab {

namespace {

using nlohmann::json;

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  return obj.at(key).get<T>();
}

std::pair<double, double> get_range(const json& obj, const char* key, std::pair<double, double> fallback) {
  if (!obj.contains(key)) return fallback;
  const auto v = obj.at(key).get<std::vector<double>>();
  if (v.size() != 2) throw ConfigError(std::string("grids.") + key + " must have two entries");
  return {v[0], v[1]};
}

void require_object(const json& j, const char* key) {
  if (j.contains(key) && !j.at(key).is_object()) throw ConfigError(std::string(key) + " must be an object");
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("unknown output format '" + s + "' (expected csv or json)");
}

std::string format_name(Format f) { return f == Format::Csv ? "csv" : "json"; }

void ExperimentConfig::validate() const {
  try {
    soliton.validate();
  } catch (const soliton::Error& e) {
    throw ConfigError(std::string("soliton: ") + e.what());
  }
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(tolerances.quad_tol) || !positive(tolerances.check_tol)) {
    throw ConfigError("tolerances must be positive");
  }
  if (!(grids.x_lo < grids.x_hi)) throw ConfigError("grids.x_range must be nonempty");
  if (!(grids.y_lo > 0.0 && grids.y_lo < grids.y_hi)) throw ConfigError("grids.y_range must satisfy 0 < lo < hi");
  if (grids.x_count < 1 || grids.y_count < 2 || grids.y_count % 2 != 0) {
    throw ConfigError("grids.counts must be [x >= 1, y >= 2 and even]");
  }
  if (sweep.empty()) throw ConfigError("sweep must list at least one delta");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    if (!(sweep[i] > 0.0 && sweep[i] < 1.0)) throw ConfigError("sweep deltas must lie in (0, 1)");
    if (i > 0 && !(sweep[i] < sweep[i - 1])) throw ConfigError("sweep deltas must be strictly decreasing");
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const char* key : {"soliton", "tolerances", "grids", "output"}) require_object(j, key);

    if (j.contains("soliton")) {
      const json& s = j.at("soliton");
      cfg.soliton.n = get_or(s, "n", cfg.soliton.n);
      cfg.soliton.alpha = get_or(s, "alpha", cfg.soliton.alpha);
      if (!s.contains("a")) throw ConfigError("soliton.a is required");
      cfg.soliton.a = s.at("a").get<std::vector<double>>();
    }
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      cfg.tolerances.quad_tol = get_or(t, "quad_tol", cfg.tolerances.quad_tol);
      cfg.tolerances.check_tol = get_or(t, "check_tol", cfg.tolerances.check_tol);
    }
    if (j.contains("grids")) {
      const json& g = j.at("grids");
      std::tie(cfg.grids.x_lo, cfg.grids.x_hi) = get_range(g, "x_range", {cfg.grids.x_lo, cfg.grids.x_hi});
      std::tie(cfg.grids.y_lo, cfg.grids.y_hi) = get_range(g, "y_range", {cfg.grids.y_lo, cfg.grids.y_hi});
      if (g.contains("counts")) {
        const auto c = g.at("counts").get<std::vector<int>>();
        if (c.size() != 2) throw ConfigError("grids.counts must have two entries");
        cfg.grids.x_count = c[0];
        cfg.grids.y_count = c[1];
      }
    }
    if (j.contains("sweep")) cfg.sweep = j.at("sweep").get<std::vector<double>>();
    if (j.contains("output")) {
      const json& o = j.at("output");
      if (o.contains("path")) cfg.output.path = o.at("path").get<std::string>();
      if (o.contains("format")) cfg.output.format = parse_format(o.at("format").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<double> y_grid(const Grids& grids) {
  const std::vector<double> positive = linspace(grids.y_lo, grids.y_hi, grids.y_count / 2);
  std::vector<double> out;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

std::vector<soliton::ChartPoint> chart_grid(const Grids& grids, int nx) {
  const std::vector<double> xs = linspace(grids.x_lo, grids.x_hi, grids.x_count);
  const std::vector<double> ys = y_grid(grids);
  std::vector<soliton::ChartPoint> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(nx), 0);
  std::vector<double> x(static_cast<std::size_t>(nx));
  while (true) {
    for (std::size_t k = 0; k < idx.size(); ++k) x[k] = xs[idx[k]];
    for (double y : ys) out.emplace_back(std::span<const double>(x), y);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == xs.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace lab
