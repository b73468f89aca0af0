// Copyright 2026 The arpq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arpq/circuit.hpp"
#include "arpq/formulation.hpp"
#include "arpq/qaoa.hpp"

namespace arpq {

enum class FormVariant { qubo, hubo, hubo_factored };

std::string to_string(FormVariant v);
FormVariant parse_form_variant(std::string_view text);
FormKind form_kind(FormVariant v);
bool is_factored(FormVariant v);

struct StatsRow {
  std::string test;
  FormVariant form = FormVariant::hubo;
  std::size_t qubits = 0;
  std::size_t unpruned_variables = 0;
  std::size_t depth = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t gates = 0;
  std::size_t terms = 0;
};

/// Builds the formulation and its p-layer ansatz and measures it.
StatsRow circuit_stats(const std::string& test, const ProblemInstance& instance, FormVariant form,
                       GadgetStyle style = GadgetStyle::ladder, std::size_t layers = 1);

struct SolveConfig {
  std::size_t repeats = 10;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  std::size_t layers = 1;
  GadgetStyle style = GadgetStyle::ladder;
  std::size_t max_qubits = kDefaultMaxQubits;
  std::size_t max_evaluations = 150;
  SimulationPath path = SimulationPath::diagonal;
  /// 0 picks the hardware concurrency.
  std::size_t workers = 0;
};

/// One optimisation run. Costs are on the route-objective scale (the dropped
/// constant is added back).
struct BenchRow {
  std::string test;
  FormVariant form = FormVariant::hubo;
  std::size_t repeat = 0;
  std::uint64_t seed = 0;
  std::size_t qubits = 0;
  std::size_t depth = 0;
  std::size_t two_qubit_gates = 0;
  double found_cost = 0.0;
  double optimal_cost = 0.0;
  bool feasible = false;
  std::string route;  // decoded best measurement, empty when infeasible
};

/// Seed of repeat r. Does not depend on the form.
std::uint64_t repeat_seed(std::uint64_t seed, std::size_t repeat);

/// Runs cfg.repeats independent QAOA loops. Throws WidthCapExceeded when the
/// formulation is too wide to simulate and InfeasibleInstance when no route
/// exists.
std::vector<BenchRow> solve(const std::string& test, const ProblemInstance& instance, FormVariant form,
                            const SolveConfig& cfg);

bool hits_optimum(const BenchRow& row);

struct Aggregate {
  std::string test;
  FormVariant form = FormVariant::hubo;
  std::size_t repeats = 0;
  double optimal_cost = 0.0;
  std::optional<double> mean_nd;  // undefined when the optimum is 0
  double found_mean = 0.0;
  double found_stddev = 0.0;  // population standard deviation
  std::size_t optimum_hits = 0;
  std::size_t feasible_count = 0;
  std::size_t qubits = 0;
  std::size_t depth = 0;
  std::size_t two_qubit_gates = 0;
};

/// One aggregate per (test, form), in order of first appearance.
std::vector<Aggregate> aggregate(const std::vector<BenchRow>& rows);

std::string rows_to_json(const std::vector<BenchRow>& rows);
std::vector<BenchRow> rows_from_json(const std::string& text);

/// `test,repeat,circuit_depth,two_qubit_gates,found_solution` with the test
/// column written as "<test>:<form>".
std::string rows_to_csv(const std::vector<BenchRow>& rows);
std::string aggregates_to_json(const std::vector<Aggregate>& aggs);

/// Keeps rows whose test and form match (empty filter values match all).
std::vector<BenchRow> filter_rows(const std::vector<BenchRow>& rows, const std::string& test,
                                  const std::string& form);

/// Writes report.csv, aggregate.json, depth.dat, two_qubit_gates.dat and
/// nd.dat into `dir`. Throws InvalidInput for an empty row set.
void write_report(const std::vector<BenchRow>& rows, const std::filesystem::path& dir);

}  // namespace arpq
