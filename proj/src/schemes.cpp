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

#include "disentangle/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"
#include "disentangle/states.hpp"

namespace disentangle {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::single_clone:
      return "single_clone";
    case Scheme::double_clone:
      return "double_clone";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "split" || name == "single_clone") return Scheme::single_clone;
  if (name == "broadcast" || name == "double_clone") return Scheme::double_clone;
  throw RangeError("unknown scheme '" + std::string(name) + "' (expected split or broadcast)");
}

namespace {

template <class T>
const T& find_named(const std::vector<Named<T>>& items, std::string_view name) {
  const auto it = std::find_if(items.begin(), items.end(), [&](const auto& n) { return n.name == name; });
  if (it == items.end()) throw RangeError("no report entry named '" + std::string(name) + "'");
  return it->value;
}

std::optional<double> fit_or_empty(const ComplexMatrix& after, const ComplexMatrix& before) {
  try {
    return isotropy_fit(after, before).eta;
  } catch (const DegenerateInputError&) {
    return std::nullopt;
  }
}

void record(SchemeReport& report, std::string name, ComplexMatrix state) {
  report.verdicts.push_back({name, ppt_test(state)});
  report.output_states.push_back({std::move(name), std::move(state)});
}

bool all_nonlocal_separable(const SchemeReport& report) {
  return std::all_of(report.nonlocal_outputs.begin(), report.nonlocal_outputs.end(),
                     [&](const std::string& n) { return report.verdict(n).separable; });
}

}  // namespace

const ComplexMatrix& SchemeReport::state(std::string_view name) const {
  return find_named(output_states, name);
}

const SeparabilityVerdict& SchemeReport::verdict(std::string_view name) const {
  return find_named(verdicts, name);
}

std::optional<double> SchemeReport::recovered(std::string_view name) const {
  return find_named(recovered_eta, name);
}

SplitDilationOutput split_via_dilation(double alpha2, const ClonerSpec& spec) {
  const ComplexMatrix input = density_matrix(PureBipartiteState::from_alpha2(alpha2));
  const SubsystemDims input_dims{2, 2};
  // (x, y) -> (x1, x2, anc, y)
  const ComplexMatrix global = clone_qubit_via_dilation(input, input_dims, 0, spec);
  const SubsystemDims global_dims = cloned_dims(input_dims, 0);

  SplitDilationOutput out;
  out.three_qubit = partial_trace(global, global_dims, 2);
  const SubsystemDims three{2, 2, 2};
  out.clone1_partner = partial_trace(out.three_qubit, three, 1);
  out.clone2_partner = partial_trace(out.three_qubit, three, 0);
  return out;
}

BroadcastDilationOutput broadcast_via_dilation(double alpha2, const ClonerSpec& spec) {
  const ComplexMatrix input = density_matrix(PureBipartiteState::from_alpha2(alpha2));
  const SubsystemDims input_dims{2, 2};
  // (a1, a2) -> (a1, b1, anc1, a2) -> (a1, b1, anc1, a2, b2, anc2)
  const ComplexMatrix first = clone_qubit_via_dilation(input, input_dims, 0, spec);
  const SubsystemDims first_dims = cloned_dims(input_dims, 0);
  const ComplexMatrix second = clone_qubit_via_dilation(first, first_dims, 3, spec);
  const SubsystemDims second_dims = cloned_dims(first_dims, 3);

  BroadcastDilationOutput out;
  out.four_qubit = partial_trace(second, second_dims, {2, 5});
  const SubsystemDims four{2, 2, 2, 2};
  out.local_a1b1 = partial_trace(out.four_qubit, four, {2, 3});
  out.local_a2b2 = partial_trace(out.four_qubit, four, {0, 1});
  out.nonlocal_a1b2 = partial_trace(out.four_qubit, four, {1, 2});
  out.nonlocal_b1a2 = partial_trace(out.four_qubit, four, {0, 3});
  return out;
}

SchemeReport disentangle_by_single_cloning(double alpha2, double eta) {
  const ClonerSpec spec = ClonerSpec::from_eta(eta);
  const ReducedPair before = reduced_pair(density_matrix(PureBipartiteState::from_alpha2(alpha2)));
  SplitDilationOutput out = split_via_dilation(alpha2, spec);

  SchemeReport report;
  report.scheme = Scheme::single_clone;
  report.input_alpha2 = alpha2;
  report.eta = spec.eta();
  report.copy_symmetry_deviation = out.clone1_partner.max_abs_diff(out.clone2_partner);

  const ReducedPair after = reduced_pair(out.clone1_partner);
  report.recovered_eta.push_back({"x", fit_or_empty(after.rho_1, before.rho_1)});
  report.recovered_eta.push_back({"y", fit_or_empty(after.rho_2, before.rho_2)});

  record(report, "x1_y", std::move(out.clone1_partner));
  report.nonlocal_outputs = {"x1_y"};
  report.disentangled = all_nonlocal_separable(report);
  return report;
}

SchemeReport disentangle_by_double_cloning(double alpha2, double eta) {
  const ClonerSpec spec = ClonerSpec::from_eta(eta);
  const ReducedPair before = reduced_pair(density_matrix(PureBipartiteState::from_alpha2(alpha2)));
  BroadcastDilationOutput out = broadcast_via_dilation(alpha2, spec);

  SchemeReport report;
  report.scheme = Scheme::double_clone;
  report.input_alpha2 = alpha2;
  report.eta = spec.eta();
  report.copy_symmetry_deviation = out.nonlocal_a1b2.max_abs_diff(out.nonlocal_b1a2);

  const ComplexMatrix a1 = reduced_pair(out.local_a1b1).rho_1;
  const ComplexMatrix a2 = reduced_pair(out.local_a2b2).rho_1;
  report.recovered_eta.push_back({"a1", fit_or_empty(a1, before.rho_1)});
  report.recovered_eta.push_back({"a2", fit_or_empty(a2, before.rho_2)});

  record(report, "a1_b2", std::move(out.nonlocal_a1b2));
  record(report, "b1_a2", std::move(out.nonlocal_b1a2));
  record(report, "a1_b1", std::move(out.local_a1b1));
  record(report, "a2_b2", std::move(out.local_a2b2));
  report.nonlocal_outputs = {"a1_b2", "b1_a2"};
  report.disentangled = all_nonlocal_separable(report);
  return report;
}

SchemeReport run_scheme(Scheme scheme, double alpha2, double eta) {
  return scheme == Scheme::single_clone ? disentangle_by_single_cloning(alpha2, eta)
                                        : disentangle_by_double_cloning(alpha2, eta);
}

SchemeComparison compare_schemes(double alpha2) {
  const PureBipartiteState psi = PureBipartiteState::from_alpha2(alpha2);
  const double schmidt_product = psi.alpha() * psi.beta();

  SchemeComparison cmp;
  cmp.alpha2 = alpha2;

  auto fill = [](SchemeThreshold& t, double all, double here) {
    t.eta_all_alpha = all;
    t.fidelity_all_alpha = fidelity_from_eta(all);
    t.eta_for_alpha2 = here;
    t.fidelity_for_alpha2 = fidelity_from_eta(here);
  };

  cmp.single_clone.scheme = Scheme::single_clone;
  fill(cmp.single_clone, 1.0 / 3.0, psi.is_entangled() ? 1.0 / 3.0 : kOptimalEta);

  // The cross-pair PT eigenvalue (1 - eta^2)/4 - alpha*beta*eta^2 vanishes at
  // eta = 1/sqrt(1 + 4 alpha beta); below it the pair is separable.
  cmp.double_clone.scheme = Scheme::double_clone;
  const double boundary = 1.0 / std::sqrt(1.0 + 4.0 * schmidt_product);
  fill(cmp.double_clone, 1.0 / std::sqrt(3.0), std::min(kOptimalEta, boundary));

  cmp.one_to_three_fidelity = optimal_cloning_fidelity(3);
  cmp.fidelity_ordering = {{"double_clone", cmp.double_clone.fidelity_for_alpha2},
                           {"one_to_three", cmp.one_to_three_fidelity},
                           {"single_clone", cmp.single_clone.fidelity_for_alpha2}};
  std::stable_sort(cmp.fidelity_ordering.begin(), cmp.fidelity_ordering.end(),
                   [](const auto& x, const auto& y) { return x.value > y.value; });
  return cmp;
}

}  // namespace disentangle
