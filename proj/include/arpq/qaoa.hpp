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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arpq/circuit.hpp"
#include "arpq/formulation.hpp"
#include "arpq/sim.hpp"

namespace arpq {

enum class SimulationPath {
  diagonal,  // cost layers as phases from the energy table
  gates,     // gate-by-gate through the ansatz circuit
};

struct OptimizerConfig {
  std::size_t max_evaluations = 150;
  /// Empty means 0.01 for every one of the 2p parameters.
  std::vector<double> initial_params;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  bool use_exact_expectation = false;
  double initial_step = 0.1;
  std::size_t max_qubits = kDefaultMaxQubits;
  SimulationPath path = SimulationPath::diagonal;
};

struct SampledAssignment {
  std::uint64_t bits = 0;
  std::uint64_t count = 0;
  double cost = 0.0;
  friend bool operator==(const SampledAssignment&, const SampledAssignment&) = default;
};

struct IterationRecord {
  std::vector<double> params;
  double cost_signal = 0.0;
  std::vector<SampledAssignment> samples;  // ascending bits
  bool final = false;                      // sampled at the returned parameters
};

struct BestMeasurement {
  std::uint64_t bits = 0;
  double cost = 0.0;
  std::size_t iteration = 0;
};

/// Trace of one optimisation run. The last iteration is always the final
/// distribution at `final_params`.
struct RunRecord {
  std::uint64_t seed = 0;
  std::size_t qubits = 0;
  std::vector<IterationRecord> iterations;
  BestMeasurement best;
  std::vector<double> final_params;
  bool converged = false;

  std::string to_json() const;
};

/// Runs the derivative-free outer loop. Each evaluation prepares the ansatz
/// state, samples `shots` bitstrings, uses their mean cost (or the exact
/// expectation) as the signal and keeps the lowest-cost sample seen so far.
/// The ansatz must have been built from `cost`'s spin form.
RunRecord optimize(const Circuit& ansatz, const PBPoly& cost, std::size_t qubits, const OptimizerConfig& cfg);
RunRecord optimize(const Circuit& ansatz, const Formulation& f, const OptimizerConfig& cfg);

/// Lowest-cost sample over the whole record (earliest iteration, then
/// smallest bitstring, on ties). Throws InvalidInput for an empty record.
std::pair<std::uint64_t, double> best_measurement(const RunRecord& record);

/// Most frequent bitstring of the final distribution (smallest on ties).
std::pair<std::uint64_t, double> final_mode(const RunRecord& record);

/// mean_i |x_i - x_opt| / |x_opt|. Throws InvalidInput when x_opt is 0 or the
/// list is empty.
double normalized_distance(std::span<const double> found, double optimal);

}  // namespace arpq
