#include "lab/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <json.hpp>

namespace lab {

namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("float formatting failed");
  return std::string(buf.data(), end);
}

bool CheckRow::passed() const {
  if (!std::isfinite(measured)) return false;
  switch (compare) {
    case Compare::AtMost:
      return measured <= gate;
    case Compare::AtLeast:
      return measured >= gate;
    case Compare::Above:
      return measured > gate;
  }
  return false;
}

std::string compare_symbol(Compare c) {
  switch (c) {
    case Compare::AtMost:
      return "<=";
    case Compare::AtLeast:
      return ">=";
    case Compare::Above:
      return ">";
  }
  return "?";
}

bool all_passed(const std::vector<CheckRow>& rows) {
  for (const CheckRow& r : rows) {
    if (!r.passed()) return false;
  }
  return true;
}

std::string render_checks(const std::vector<CheckRow>& rows, Format format) {
  if (format == Format::Json) {
    ordered_json checks = ordered_json::array();
    for (const CheckRow& r : rows) {
      checks.push_back({{"suite", r.suite},
                        {"group", r.group},
                        {"check", r.name},
                        {"measured", r.measured},
                        {"gate", r.gate},
                        {"compare", compare_symbol(r.compare)},
                        {"status", r.passed() ? "PASS" : "FAIL"}});
    }
    ordered_json out = {{"passed", all_passed(rows)}, {"checks", checks}};
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "suite,group,check,measured,compare,gate,status\n";
  for (const CheckRow& r : rows) {
    out << csv_field(r.suite) << ',' << csv_field(r.group) << ',' << csv_field(r.name) << ','
        << format_double(r.measured) << ',' << compare_symbol(r.compare) << ','
        << format_double(r.gate) << ',' << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

std::string render_sweep(const soliton::SweepTable& table, Format format) {
  const bool has_verdict = table.verdict != soliton::SweepVerdict::None;
  if (format == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (const soliton::SweepRow& r : table.rows) {
      rows.push_back({{"delta", r.delta},
                      {"lhs", r.lhs},
                      {"lhs_error", r.lhs_error},
                      {"log_log_weight", r.log_log_weight},
                      {"ratio", r.ratio},
                      {"epsilon", r.epsilon},
                      {"converged", r.converged}});
    }
    ordered_json out = {{"rows", rows}};
    out["verdict"] = has_verdict ? ordered_json(soliton::verdict_name(table.verdict)) : ordered_json(nullptr);
    out["increasing"] = table.increasing;
    out["ratio_spread"] = table.ratio_spread;
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "delta,lhs,lhs_error,log_log_weight,ratio\n";
  for (const soliton::SweepRow& r : table.rows) {
    out << format_double(r.delta) << ',' << format_double(r.lhs) << ',' << format_double(r.lhs_error) << ','
        << format_double(r.log_log_weight) << ',' << format_double(r.ratio) << '\n';
  }
  if (has_verdict) out << "# verdict: " << soliton::verdict_name(table.verdict) << '\n';
  return out.str();
}

std::string render_info(const InfoReport& info, Format format) {
  const soliton::SolitonScalars& s = info.scalars;
  if (format == Format::Json) {
    ordered_json samples = ordered_json::array();
    for (const SamplePoint& p : info.samples) {
      samples.push_back({{"x", p.x},
                         {"y", p.y},
                         {"theta", p.theta},
                         {"mean_curvature_sq", p.mean_curvature_sq},
                         {"det_g", p.det_g}});
    }
    ordered_json out = {
        {"soliton", {{"n", info.params.n}, {"alpha", info.params.alpha}, {"a", info.params.a}}},
        {"phi_bar", s.phi_bar},
        {"theta_inf", s.theta_inf},
        {"theta_sup", s.theta_sup},
        {"oscillation", s.oscillation},
        {"s0", s.s0},
        {"samples", samples},
    };
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "quantity,value\n";
  for (std::size_t j = 0; j < s.phi_bar.size(); ++j) out << "phi_bar_" << j + 1 << ',' << format_double(s.phi_bar[j]) << '\n';
  out << "theta_inf," << format_double(s.theta_inf) << '\n';
  out << "theta_sup," << format_double(s.theta_sup) << '\n';
  out << "oscillation," << format_double(s.oscillation) << '\n';
  out << "s0," << format_double(s.s0) << '\n';
  out << '\n';
  for (std::size_t j = 0; j < static_cast<std::size_t>(info.params.nx()); ++j) out << 'x' << j + 1 << ',';
  out << "y,theta,mean_curvature_sq,det_g\n";
  for (const SamplePoint& p : info.samples) {
    for (double x : p.x) out << format_double(x) << ',';
    out << format_double(p.y) << ',' << format_double(p.theta) << ',' << format_double(p.mean_curvature_sq) << ','
        << format_double(p.det_g) << '\n';
  }
  return out.str();
}

void write_output(const std::string& text, const std::optional<std::filesystem::path>& path) {
  if (!path) {
    std::cout << text << std::flush;
    return;
  }
  std::filesystem::path tmp = *path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, *path);
}

}  // namespace lab
