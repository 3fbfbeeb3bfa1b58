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

// disentangle: evaluate local-cloning disentanglement schemes from the shell.
//
//   disentangle check --scheme split --alpha2 0.5 --eta 0.3
//   disentangle sweep --scheme broadcast --grid 0:1:11,0.1:0.6666666667:7 --out grid.csv
//   disentangle threshold --scheme broadcast
//   disentangle compare --alpha2 0.05
//
// Exit status: 0 success, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "disentangle/errors.hpp"
#include "disentangle/schemes.hpp"
#include "disentangle/sweep.hpp"

namespace {

using namespace disentangle;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void print_report(const SchemeReport& report) {
  std::cout << "scheme=" << to_string(report.scheme) << " alpha2=" << format_number(report.input_alpha2)
            << " eta=" << format_number(report.eta) << '\n';
  for (const auto& v : report.verdicts)
    std::cout << "  " << v.name << ": min_pt_eigenvalue=" << format_number(v.value.min_pt_eigenvalue)
              << " negativity=" << format_number(v.value.negativity)
              << " separable=" << (v.value.separable ? "true" : "false") << '\n';
  for (const auto& r : report.recovered_eta)
    std::cout << "  recovered_eta[" << r.name << "]=" << (r.value ? format_number(*r.value) : "none")
              << '\n';
  std::cout << "disentangled=" << (report.disentangled ? "true" : "false") << '\n';
}

void print_threshold(const ThresholdResult& t) {
  std::cout << "scheme=" << to_string(t.scheme) << " " << t.quantity << "=" << format_number(t.value)
            << " bracket=[" << format_number(t.bracket.first) << ", " << format_number(t.bracket.second)
            << "] iterations=" << t.iterations << " fidelity=" << format_number(t.fidelity) << '\n';
}

void print_comparison(const SchemeComparison& c) {
  std::cout << "alpha2=" << format_number(c.alpha2) << '\n';
  for (const auto* t : {&c.single_clone, &c.double_clone})
    std::cout << "  " << to_string(t->scheme) << ": eta_all_alpha=" << format_number(t->eta_all_alpha)
              << " (F=" << format_number(t->fidelity_all_alpha) << ")"
              << " eta_for_alpha2=" << format_number(t->eta_for_alpha2)
              << " (F=" << format_number(t->fidelity_for_alpha2) << ")\n";
  std::cout << "  one_to_three: F=" << format_number(c.one_to_three_fidelity) << '\n';
  std::cout << "ordering:";
  for (std::size_t i = 0; i < c.fidelity_ordering.size(); ++i)
    std::cout << (i ? " > " : " ") << c.fidelity_ordering[i].name << "("
              << format_number(c.fidelity_ordering[i].value) << ")";
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disentanglement of two-qubit pure states by local isotropic cloning"};
  app.require_subcommand(1);

  const std::vector<std::string> schemes{"split", "broadcast"};
  std::string scheme_name;
  double alpha2 = 0.0;
  double eta = 0.0;
  std::string report_format = "text";

  auto* check = app.add_subcommand("check", "Run one scheme at a single (alpha2, eta) point");
  check->add_option("--scheme", scheme_name, "split or broadcast")->required()->check(CLI::IsMember(schemes));
  check->add_option("--alpha2", alpha2, "Squared Schmidt coefficient in [0, 1]")->required();
  check->add_option("--eta", eta, "Cloner reduction factor in (0, 2/3]")->required();
  check->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string grid;
  std::string sweep_format = "csv";
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a scheme over an (alpha2, eta) grid");
  sweep->add_option("--scheme", scheme_name, "split or broadcast")->required()->check(CLI::IsMember(schemes));
  sweep->add_option("--grid", grid, "a2min:a2max:steps,emin:emax:steps")->required();
  sweep->add_option("--format", sweep_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "Output file (stdout when omitted)");

  double lower = 1e-3;
  double upper = kOptimalEta;
  auto* threshold = app.add_subcommand("threshold", "Bisect the largest eta that disentangles every input");
  threshold->add_option("--scheme", scheme_name, "split or broadcast")->required()->check(CLI::IsMember(schemes));
  threshold->add_option("--lower", lower, "Lower end of the eta bracket");
  threshold->add_option("--upper", upper, "Upper end of the eta bracket");
  threshold->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* compare = app.add_subcommand("compare", "Compare the schemes' admissible fidelities for one input");
  compare->add_option("--alpha2", alpha2, "Squared Schmidt coefficient in [0, 1]")->required();
  compare->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool json = report_format == "json";
  try {
    if (check->parsed()) {
      const SchemeReport report = run_scheme(parse_scheme(scheme_name), alpha2, eta);
      if (json)
        std::cout << to_json(report).dump(2) << '\n';
      else
        print_report(report);
    } else if (sweep->parsed()) {
      SweepConfig config;
      config.scheme = parse_scheme(scheme_name);
      config.set_grid(grid);
      config.output_format = parse_output_format(sweep_format);
      config.output_path = out_path;
      if (out_path.empty() || out_path == "-") {
        std::cout << format_sweep(run_sweep(config), config.output_format);
      } else {
        write_sweep(config);
      }
    } else if (threshold->parsed()) {
      const ThresholdResult result = find_threshold(parse_scheme(scheme_name), lower, upper);
      if (json)
        std::cout << to_json(result).dump(2) << '\n';
      else
        print_threshold(result);
    } else if (compare->parsed()) {
      const SchemeComparison cmp = compare_schemes(alpha2);
      if (json)
        std::cout << to_json(cmp).dump(2) << '\n';
      else
        print_comparison(cmp);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
