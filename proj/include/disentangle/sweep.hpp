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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "disentangle/schemes.hpp"
#include "disentangle/separability.hpp"

namespace disentangle {

/// Inclusive, evenly spaced axis. steps == 1 yields only `min`.
struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  double at(int index) const;
  /// Parses "min:max:steps".
  static GridAxis parse(std::string_view text);
};

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(std::string_view name);

struct SweepConfig {
  GridAxis alpha2_grid{0.0, 1.0, 11};
  GridAxis eta_grid{0.1, kOptimalEta, 7};
  Scheme scheme = Scheme::double_clone;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;  // empty: caller decides (the CLI writes stdout)

  /// Parses "a2min:a2max:steps,emin:emax:steps" into both axes.
  void set_grid(std::string_view text);
  /// Throws RangeError when an axis leaves alpha2 in [0, 1] / eta in (0, 2/3] or steps < 1.
  void validate() const;
};

struct SweepRow {
  double alpha2 = 0.0;
  double eta = 0.0;
  SeparabilityVerdict verdict;  // of the first nonlocal output
  bool disentangled = false;
  Alpha2Window window;          // analytic inseparability window at this eta
};

/// Inseparability window used for the sweep's analytic columns.
Alpha2Window analytic_window(Scheme scheme, double eta);

/// One row per grid point, alpha2-major.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr std::string_view kCsvHeader =
    "alpha2,eta,min_pt_eigenvalue,negativity,separable,disentangled,window_lower,window_upper";

std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_json(const std::vector<SweepRow>& rows);
std::string format_sweep(const std::vector<SweepRow>& rows, OutputFormat format);

/// Writes the formatted sweep to config.output_path. Throws IoError.
void write_sweep(const SweepConfig& config);

struct ThresholdResult {
  Scheme scheme = Scheme::single_clone;
  std::string quantity = "eta_all_alpha";
  double value = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  int iterations = 0;
  double fidelity = 0.0;
};

/// alpha^2 at which every PT-negativity condition is tightest.
inline constexpr double kWorstCaseAlpha2 = 0.5;
inline constexpr double kThresholdWidth = 1e-9;

/**
 * Bisects on eta for the boundary of "the scheme disentangles the worst-case
 * input", using the full dilation + PPT pipeline. The predicate must hold at
 * `lower` and fail at `upper`; otherwise NonBracketingError. The reported
 * value is the secant zero of the smallest PT eigenvalue across the final bracket.
 */
ThresholdResult find_threshold(Scheme scheme, double lower = 1e-3, double upper = kOptimalEta,
                               double width = kThresholdWidth);

nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const SeparabilityVerdict& v);
nlohmann::json to_json(const Alpha2Window& w);
nlohmann::json to_json(const SchemeReport& report);
nlohmann::json to_json(const SchemeComparison& cmp);
nlohmann::json to_json(const ThresholdResult& result);
nlohmann::json to_json(const SweepRow& row);

}  // namespace disentangle
