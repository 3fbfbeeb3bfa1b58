// Copyright 2026 The disentangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disentangle/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "disentangle/errors.hpp"

namespace disentangle {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw RangeError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  return value;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw RangeError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  return value;
}

void validate_axis(const GridAxis& axis, std::string_view name, double lo, bool lo_open, double hi) {
  auto inside = [&](double x) { return (lo_open ? x > lo : x >= lo) && x <= hi; };
  if (axis.steps < 1) throw RangeError(std::string(name) + " grid needs at least one step");
  if (!inside(axis.min) || !inside(axis.max) || axis.min > axis.max)
    throw RangeError(std::string(name) + " grid [" + format_number(axis.min) + ", " +
                     format_number(axis.max) + "] is outside the valid range");
}

}  // namespace

double GridAxis::at(int index) const {
  if (steps == 1 || index == 0) return min;
  if (index == steps - 1) return max;
  return min + index * ((max - min) / (steps - 1));
}

GridAxis GridAxis::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
    throw RangeError("grid axis must look like min:max:steps, got '" + std::string(text) + "'");
  GridAxis axis;
  axis.min = parse_double(text.substr(0, first), "grid minimum");
  axis.max = parse_double(text.substr(first + 1, second - first - 1), "grid maximum");
  axis.steps = parse_int(text.substr(second + 1), "grid steps");
  return axis;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw RangeError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

void SweepConfig::set_grid(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw RangeError("grid must look like a2min:a2max:steps,emin:emax:steps");
  alpha2_grid = GridAxis::parse(text.substr(0, comma));
  eta_grid = GridAxis::parse(text.substr(comma + 1));
}

void SweepConfig::validate() const {
  validate_axis(alpha2_grid, "alpha2", 0.0, false, 1.0);
  validate_axis(eta_grid, "eta", 0.0, true, kOptimalEta + kEtaSnapTol);
}

Alpha2Window analytic_window(Scheme scheme, double eta) {
  return scheme == Scheme::single_clone ? split_inseparable_window(eta) : broadcast_nonlocal_window(eta);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.alpha2_grid.steps) *
               static_cast<std::size_t>(config.eta_grid.steps));
  for (int i = 0; i < config.alpha2_grid.steps; ++i)
    for (int j = 0; j < config.eta_grid.steps; ++j) {
      const double alpha2 = config.alpha2_grid.at(i);
      const double eta = config.eta_grid.at(j);
      const SchemeReport report = run_scheme(config.scheme, alpha2, eta);
      SweepRow row;
      row.alpha2 = alpha2;
      row.eta = eta;
      row.verdict = report.verdict(report.nonlocal_outputs.front());
      row.disentangled = report.disentangled;
      row.window = analytic_window(config.scheme, eta);
      rows.push_back(row);
    }
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_number(r.alpha2) + ',' + format_number(r.eta) + ',' +
           format_number(r.verdict.min_pt_eigenvalue) + ',' + format_number(r.verdict.negativity) + ',' +
           (r.verdict.separable ? "true" : "false") + ',' + (r.disentangled ? "true" : "false") + ',';
    if (!r.window.empty) out += format_number(r.window.lower);
    out += ',';
    if (!r.window.empty) out += format_number(r.window.upper);
    out += '\n';
  }
  return out;
}

std::string format_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr.dump(2) + '\n';
}

std::string format_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
  return format == OutputFormat::csv ? format_csv(rows) : format_json(rows);
}

void write_sweep(const SweepConfig& config) {
  const std::string body = format_sweep(run_sweep(config), config.output_format);
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + config.output_path + "' for writing");
  file << body;
  file.close();
  if (!file) throw IoError("failed writing '" + config.output_path + "'");
}

ThresholdResult find_threshold(Scheme scheme, double lower, double upper, double width) {
  lower = checked_cloner_eta(lower);
  upper = checked_cloner_eta(upper);
  if (!(lower < upper)) throw RangeError("threshold bracket must satisfy lower < upper");
  if (!(width > 0.0)) throw RangeError("threshold width must be positive");

  auto disentangles = [&](double eta) { return run_scheme(scheme, kWorstCaseAlpha2, eta).disentangled; };
  if (!disentangles(lower) || disentangles(upper))
    throw NonBracketingError("threshold predicate does not change over [" + format_number(lower) + ", " +
                             format_number(upper) + "]");

  ThresholdResult result;
  result.scheme = scheme;
  while (upper - lower > width) {
    const double mid = 0.5 * (lower + upper);
    (disentangles(mid) ? lower : upper) = mid;
    ++result.iterations;
  }
  result.bracket = {lower, upper};
  result.value = 0.5 * (lower + upper);

  // Locate the zero of the smallest PT eigenvalue by a secant step across the final bracket.
  auto min_pt = [&](double eta) {
    const auto report = run_scheme(scheme, kWorstCaseAlpha2, eta);
    double m = std::numeric_limits<double>::infinity();
    for (const auto& name : report.nonlocal_outputs) m = std::min(m, report.verdict(name).min_pt_eigenvalue);
    return m;
  };
  const double g_lower = min_pt(lower);
  const double g_upper = min_pt(upper);
  if (g_lower != g_upper) {
    const double root = lower + g_lower * (upper - lower) / (g_lower - g_upper);
    if (root >= lower - width && root <= upper + width) result.value = root;
  }
  result.fidelity = fidelity_from_eta(result.value);
  return result;
}

nlohmann::json to_json(const ComplexMatrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"real", std::move(re)}, {"imag", std::move(im)}};
}

nlohmann::json to_json(const SeparabilityVerdict& v) {
  return {{"min_pt_eigenvalue", v.min_pt_eigenvalue}, {"negativity", v.negativity}, {"separable", v.separable}};
}

nlohmann::json to_json(const Alpha2Window& w) {
  if (w.empty) return {{"empty", true}, {"lower", nullptr}, {"upper", nullptr}};
  return {{"empty", false}, {"lower", w.lower}, {"upper", w.upper}};
}

nlohmann::json to_json(const SchemeReport& report) {
  nlohmann::json states = nlohmann::json::object();
  for (const auto& s : report.output_states) states[s.name] = to_json(s.value);
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& v : report.verdicts) verdicts[v.name] = to_json(v.value);
  nlohmann::json recovered = nlohmann::json::object();
  for (const auto& r : report.recovered_eta)
    recovered[r.name] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  return {{"scheme", to_string(report.scheme)},
          {"input_alpha2", report.input_alpha2},
          {"eta", report.eta},
          {"output_states", std::move(states)},
          {"verdicts", std::move(verdicts)},
          {"recovered_eta", std::move(recovered)},
          {"nonlocal_outputs", report.nonlocal_outputs},
          {"copy_symmetry_deviation", report.copy_symmetry_deviation},
          {"disentangled", report.disentangled}};
}

namespace {

nlohmann::json to_json(const SchemeThreshold& t) {
  return {{"scheme", to_string(t.scheme)},
          {"eta_all_alpha", t.eta_all_alpha},
          {"fidelity_all_alpha", t.fidelity_all_alpha},
          {"eta_for_alpha2", t.eta_for_alpha2},
          {"fidelity_for_alpha2", t.fidelity_for_alpha2}};
}

}  // namespace

nlohmann::json to_json(const SchemeComparison& cmp) {
  nlohmann::json ordering = nlohmann::json::array();
  for (const auto& o : cmp.fidelity_ordering) ordering.push_back({{"name", o.name}, {"fidelity", o.value}});
  return {{"alpha2", cmp.alpha2},
          {"single_clone", to_json(cmp.single_clone)},
          {"double_clone", to_json(cmp.double_clone)},
          {"one_to_three_fidelity", cmp.one_to_three_fidelity},
          {"fidelity_ordering", std::move(ordering)}};
}

nlohmann::json to_json(const ThresholdResult& result) {
  return {{"scheme", to_string(result.scheme)},
          {"quantity", result.quantity},
          {"value", result.value},
          {"bracket", {result.bracket.first, result.bracket.second}},
          {"iterations", result.iterations},
          {"fidelity", result.fidelity}};
}

nlohmann::json to_json(const SweepRow& row) {
  nlohmann::json j = {{"alpha2", row.alpha2},
                      {"eta", row.eta},
                      {"min_pt_eigenvalue", row.verdict.min_pt_eigenvalue},
                      {"negativity", row.verdict.negativity},
                      {"separable", row.verdict.separable},
                      {"disentangled", row.disentangled}};
  j["window_lower"] = row.window.empty ? nlohmann::json(nullptr) : nlohmann::json(row.window.lower);
  j["window_upper"] = row.window.empty ? nlohmann::json(nullptr) : nlohmann::json(row.window.upper);
  return j;
}

}  // namespace disentangle
