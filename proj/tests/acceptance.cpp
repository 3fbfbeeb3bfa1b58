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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "disentangle/cloning.hpp"
#include "disentangle/linalg.hpp"
#include "disentangle/schemes.hpp"
#include "disentangle/separability.hpp"
#include "disentangle/states.hpp"
#include "disentangle/sweep.hpp"
#include "test_support.hpp"

namespace {

using namespace disentangle;
using testing::linspace;

constexpr double kTwoThirds = 2.0 / 3.0;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// Cloner eta grids exclude eta = 0, which is not a cloner.
std::vector<double> eta_grid(int steps) { return linspace(kTwoThirds / steps, kTwoThirds, steps); }

const std::vector<double> kAlpha21 = linspace(0.0, 1.0, 21);
const std::vector<double> kEta13 = eta_grid(13);
const std::vector<double> kAlpha101 = linspace(0.0, 1.0, 101);
const std::vector<double> kEta67 = eta_grid(67);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

Outcome splitting_threshold() {
  Outcome o;
  const auto t = find_threshold(Scheme::single_clone);
  o.require(std::abs(t.value - 1.0 / 3.0) <= 1e-9, "eta off");
  o.require(std::abs(t.fidelity - 2.0 / 3.0) <= 1e-12, "fidelity off");
  o.require(std::abs(fidelity_from_eta(1.0 / 3.0) - 2.0 / 3.0) <= 1e-12, "F(1/3) off");
  o.detail << "eta=" << format_number(t.value) << " F=" << format_number(t.fidelity);
  return o;
}

Outcome broadcasting_threshold() {
  Outcome o;
  const auto t = find_threshold(Scheme::double_clone);
  const double f_expected = (std::sqrt(3.0) + 1.0) / (2.0 * std::sqrt(3.0));
  o.require(std::abs(t.value - kInvSqrt3) <= 1e-9, "eta off");
  o.require(std::abs(t.fidelity - f_expected) <= 1e-9, "fidelity off");
  o.detail << "eta=" << format_number(t.value) << " F=" << format_number(t.fidelity);
  return o;
}

Outcome optimal_cloner_window() {
  Outcome o;
  const auto w = broadcast_nonlocal_window(kTwoThirds);
  const double r = std::sqrt(39.0) / 16.0;
  o.require(!w.empty, "window empty; ");
  o.require(std::abs(w.lower - (0.5 - r)) <= 1e-9 && std::abs(w.upper - (0.5 + r)) <= 1e-9, "endpoints off; ");

  std::vector<double> flips;
  bool previous = ppt_test(broadcast_nonlocal_closed_form(0.0, kTwoThirds)).separable;
  for (int i = 1; i <= 10000; ++i) {
    const double a2 = i * 1e-4;
    const bool separable = ppt_test(broadcast_nonlocal_closed_form(a2, kTwoThirds)).separable;
    if (separable != previous) flips.push_back(a2 - 0.5e-4);
    previous = separable;
  }
  o.require(flips.size() == 2, "expected two flips; ");
  if (flips.size() == 2)
    o.require(std::abs(flips[0] - w.lower) <= 1e-4 && std::abs(flips[1] - w.upper) <= 1e-4, "flip off endpoint; ");
  o.detail << "window=[" << format_number(w.lower) << ", " << format_number(w.upper) << "] flips=" << flips.size();
  return o;
}

Outcome dilation_oracle() {
  Outcome o;
  double worst = 0.0;
  for (double a2 : kAlpha21)
    for (double eta : kEta13) {
      const auto spec = ClonerSpec::from_eta(eta);
      const auto split = split_via_dilation(a2, spec);
      const auto split_cf = split_output_closed_form(a2, eta);
      worst = std::max({worst, split.clone1_partner.max_abs_diff(split_cf), split.clone2_partner.max_abs_diff(split_cf)});
      const auto bc = broadcast_via_dilation(a2, spec);
      const auto local_cf = broadcast_local_closed_form(a2, eta);
      const auto nonlocal_cf = broadcast_nonlocal_closed_form(a2, eta);
      worst = std::max({worst, bc.local_a1b1.max_abs_diff(local_cf), bc.local_a2b2.max_abs_diff(local_cf),
                        bc.nonlocal_a1b2.max_abs_diff(nonlocal_cf), bc.nonlocal_b1a2.max_abs_diff(nonlocal_cf)});
    }
  o.require(worst <= 1e-12, "closed form deviates; ");
  o.detail << "max deviation=" << worst;
  return o;
}

Outcome channel_composition() {
  Outcome o;
  double worst = 0.0;
  for (double a2 : kAlpha21)
    for (double eta : kEta13) {
      const auto input = density_matrix(PureBipartiteState::from_alpha2(a2));
      worst = std::max(worst, broadcast_nonlocal_closed_form(a2, eta).max_abs_diff(
                                  testing::depolarize_both_qubits(input, eta)));
    }
  o.require(worst <= 1e-12, "channel composition deviates; ");
  o.detail << "max deviation=" << worst;
  return o;
}

Outcome reduced_state_contracts() {
  Outcome o;
  double partner_dev = 0.0;
  double eta_dev = 0.0;
  double degenerate_dev = 0.0;
  int fitted = 0;
  const auto half = 0.5 * ComplexMatrix::identity(2);
  for (double a2 : kAlpha21)
    for (double eta : kEta13) {
      const auto input = reduced_pair(density_matrix(PureBipartiteState::from_alpha2(a2)));
      const auto split = split_via_dilation(a2, ClonerSpec::from_eta(eta));
      const auto after = reduced_pair(split.clone1_partner);
      partner_dev = std::max(partner_dev, after.rho_2.max_abs_diff(input.rho_2));

      const auto single = disentangle_by_single_cloning(a2, eta);
      const auto dbl = disentangle_by_double_cloning(a2, eta);
      const std::vector<std::optional<double>> fits{single.recovered("x"), dbl.recovered("a1"),
                                                    dbl.recovered("a2")};
      for (const auto& fit : fits) {
        if (fit) {
          eta_dev = std::max(eta_dev, std::abs(*fit - eta));
          ++fitted;
        }
      }
      // A maximally mixed input marginal fixes no eta; the output must stay maximally mixed.
      if (!fits[0]) degenerate_dev = std::max(degenerate_dev, after.rho_1.max_abs_diff(half));
    }
  o.require(partner_dev <= 1e-12, "partner marginal changed; ");
  o.require(eta_dev <= 1e-10, "isotropy fit off; ");
  o.require(degenerate_dev <= 1e-12, "degenerate marginal not mixed; ");
  o.require(fitted > 0, "no fits; ");
  o.detail << "partner dev=" << partner_dev << " eta dev=" << eta_dev << " fits=" << fitted;
  return o;
}

Outcome ppt_vs_analytic() {
  Outcome o;
  int compared = 0;
  int disagreements = 0;
  auto on_boundary = [](const SeparabilityVerdict& v) { return std::abs(v.min_pt_eigenvalue) <= kSeparabilityTol; };
  for (double a2 : kAlpha101)
    for (double eta : kEta67) {
      const auto split = ppt_test(split_output_closed_form(a2, eta));
      if (!on_boundary(split)) {
        ++compared;
        disagreements += split_inseparability_predicate(a2, eta) == split.separable;
      }
      const auto nonlocal = ppt_test(broadcast_nonlocal_closed_form(a2, eta));
      if (!on_boundary(nonlocal)) {
        ++compared;
        disagreements += broadcast_nonlocal_window(eta).contains_interior(a2) == nonlocal.separable;
      }
    }
  // The full dilation pipeline on the coarser grid.
  for (double a2 : kAlpha21)
    for (double eta : kEta13) {
      const auto single = disentangle_by_single_cloning(a2, eta);
      if (!on_boundary(single.verdict("x1_y"))) {
        ++compared;
        disagreements += split_inseparability_predicate(a2, eta) == single.disentangled;
      }
      const auto dbl = disentangle_by_double_cloning(a2, eta);
      if (!on_boundary(dbl.verdict("a1_b2"))) {
        ++compared;
        disagreements += broadcast_nonlocal_window(eta).contains_interior(a2) == dbl.disentangled;
      }
    }
  o.require(disagreements == 0, "disagreements found; ");
  o.detail << "compared=" << compared << " disagreements=" << disagreements;
  return o;
}

Outcome local_nonlocal_containment() {
  Outcome o;
  std::vector<double> etas;
  for (const auto* grid : {&kEta13, &kEta67})
    for (double eta : *grid)
      if (eta >= kInvSqrt3) etas.push_back(eta);
  etas.push_back(kInvSqrt3);
  int checked = 0;
  for (double eta : etas) {
    const auto nonlocal = broadcast_nonlocal_window(eta);
    const auto local = broadcast_local_separable_window(eta);
    o.require(!nonlocal.empty && local.contains(nonlocal), "containment fails; ");
    ++checked;
  }
  o.detail << "eta values=" << checked;
  return o;
}

Outcome fidelity_ordering() {
  Outcome o;
  const auto f3 = optimal_cloning_fidelity_exact(3);
  o.require(f3.numerator == 7 && f3.denominator == 9, "F(3) is not 7/9; ");
  const double f_double = (std::sqrt(3.0) + 1.0) / (2.0 * std::sqrt(3.0));
  o.require(f_double > 7.0 / 9.0 && 7.0 / 9.0 > 2.0 / 3.0, "ordering fails; ");
  const auto c = compare_schemes(0.5);
  o.require(c.fidelity_ordering.size() == 3 && c.fidelity_ordering[0].name == "double_clone" &&
                c.fidelity_ordering[1].name == "one_to_three" && c.fidelity_ordering[2].name == "single_clone",
            "compare_schemes ordering fails; ");
  o.detail << "F(3)=" << f3.numerator << "/" << f3.denominator << " double=" << format_number(f_double);
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  int states = 0;
  int isometries = 0;
  auto check_state = [&](const ComplexMatrix& rho) {
    ++states;
    o.require(rho.is_hermitian(1e-10) && rho.is_unit_trace(1e-10) && rho.is_psd(1e-10), "invalid state; ");
  };
  auto sweep_grid = [&](const std::vector<double>& alphas, const std::vector<double>& etas, bool dilate) {
    for (double a2 : alphas) {
      check_state(density_matrix(PureBipartiteState::from_alpha2(a2)));
      for (double eta : etas) {
        check_state(split_output_closed_form(a2, eta));
        check_state(broadcast_local_closed_form(a2, eta));
        check_state(broadcast_nonlocal_closed_form(a2, eta));
        if (!dilate) continue;
        const auto spec = ClonerSpec::from_eta(eta);
        const auto split = split_via_dilation(a2, spec);
        check_state(split.three_qubit);
        check_state(split.clone1_partner);
        check_state(split.clone2_partner);
        const auto bc = broadcast_via_dilation(a2, spec);
        check_state(bc.four_qubit);
        for (const auto* m : {&bc.local_a1b1, &bc.local_a2b2, &bc.nonlocal_a1b2, &bc.nonlocal_b1a2}) check_state(*m);
      }
    }
  };
  sweep_grid(kAlpha21, kEta13, true);
  sweep_grid(kAlpha101, kEta67, false);

  double worst = 0.0;
  for (const auto* grid : {&kEta13, &kEta67})
    for (double eta : *grid) {
      worst = std::max(worst, build_dilation(ClonerSpec::from_eta(eta)).gram().max_abs_diff(ComplexMatrix::identity(2)));
      ++isometries;
    }
  o.require(worst <= 1e-12, "isometry fails; ");
  o.detail << "states=" << states << " isometries=" << isometries << " max |V^H V - I|=" << worst;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"splitting threshold", splitting_threshold},
      {"broadcasting threshold", broadcasting_threshold},
      {"optimal-cloner inseparability window", optimal_cloner_window},
      {"dilation-oracle equivalence", dilation_oracle},
      {"channel-composition oracle", channel_composition},
      {"reduced-state contracts", reduced_state_contracts},
      {"PPT-vs-analytic agreement", ppt_vs_analytic},
      {"local/nonlocal containment", local_nonlocal_containment},
      {"fidelity ordering", fidelity_ordering},
      {"structural invariants", structural_invariants},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string status;
    std::string detail;
    try {
      Outcome o = criteria[i].second();
      status = o.pass ? "PASS" : "FAIL";
      detail = o.detail.str();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    failures += status == "FAIL";
    std::printf("[%s] %2zu %s: %s\n", status.c_str(), i + 1, criteria[i].first.c_str(), detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
