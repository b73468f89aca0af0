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

#include "arpq/qaoa.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "arpq/error.hpp"
#include "arpq/optimizer.hpp"

namespace arpq {

RunRecord optimize(const Circuit& ansatz, const PBPoly& cost, std::size_t qubits, const OptimizerConfig& cfg) {
  const std::size_t nparams = ansatz.parameters().size();
  if (nparams < 2 || nparams % 2 != 0) throw InvalidInput("ansatz must expose 2p parameters");
  if (ansatz.width() != qubits) throw InvalidInput("ansatz width does not match the cost function");
  if (cfg.shots < 1) throw InvalidInput("shots must be at least 1");
  if (cfg.max_evaluations < 1) throw InvalidInput("max_evaluations must be at least 1");
  if (qubits > cfg.max_qubits)
    throw WidthCapExceeded("instance too large for simulation: " + std::to_string(qubits) +
                           " qubits exceeds the cap of " + std::to_string(cfg.max_qubits));
  std::vector<double> start = cfg.initial_params;
  if (start.empty()) start.assign(nparams, 0.01);
  if (start.size() != nparams) throw InvalidInput("initial_params must hold 2p values");

  const std::vector<double> energies = energy_table(cost, qubits);
  const double offset = to_spin(cost, qubits).constant_term();
  const CompiledPoly evaluate_cost(cost);

  RunRecord record;
  record.seed = cfg.seed;
  record.qubits = qubits;
  record.best.cost = std::numeric_limits<double>::infinity();

  auto evaluate = [&](std::span<const double> params, bool final) {
    StateVector state = cfg.path == SimulationPath::diagonal
                            ? run_qaoa_diagonal(energies, offset, qubits, params, cfg.max_qubits)
                            : run(ansatz, params, cfg.max_qubits);
    const std::size_t index = record.iterations.size();
    const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(index));
    SampleSet shots = sample(state, cfg.shots, seed);
    IterationRecord it;
    it.params.assign(params.begin(), params.end());
    it.final = final;
    double total = 0.0;
    for (const auto& [bits, count] : shots.counts) {
      const double c = evaluate_cost(bits);
      it.samples.push_back({bits, count, c});
      total += static_cast<double>(count) * c;
      if (c < record.best.cost) record.best = {bits, c, index};
    }
    it.cost_signal = cfg.use_exact_expectation ? exact_expectation(state, energies)
                                               : total / static_cast<double>(shots.shots);
    record.iterations.push_back(std::move(it));
    return record.iterations.back().cost_signal;
  };

  NelderMeadOptions options;
  options.max_evaluations = cfg.max_evaluations;
  options.initial_step = cfg.initial_step;
  NelderMeadResult result =
      nelder_mead([&](std::span<const double> p) { return evaluate(p, false); }, start, options);
  record.final_params = result.x;
  record.converged = result.converged;
  evaluate(record.final_params, true);
  return record;
}

RunRecord optimize(const Circuit& ansatz, const Formulation& f, const OptimizerConfig& cfg) {
  return optimize(ansatz, f.poly(), f.qubit_count(), cfg);
}

std::pair<std::uint64_t, double> best_measurement(const RunRecord& record) {
  std::optional<std::pair<std::uint64_t, double>> best;
  for (const auto& it : record.iterations)
    for (const auto& s : it.samples)
      if (!best || s.cost < best->second) best = std::make_pair(s.bits, s.cost);
  if (!best) throw InvalidInput("run record holds no samples");
  return *best;
}

std::pair<std::uint64_t, double> final_mode(const RunRecord& record) {
  if (record.iterations.empty() || record.iterations.back().samples.empty())
    throw InvalidInput("run record holds no final distribution");
  const auto& samples = record.iterations.back().samples;
  const SampledAssignment* mode = &samples.front();
  for (const auto& s : samples)
    if (s.count > mode->count) mode = &s;
  return {mode->bits, mode->cost};
}

double normalized_distance(std::span<const double> found, double optimal) {
  if (found.empty()) throw InvalidInput("normalized distance needs at least one found value");
  if (optimal == 0.0) throw InvalidInput("undefined normalization: optimal value is zero");
  double sum = 0.0;
  for (double x : found) sum += std::abs(x - optimal) / std::abs(optimal);
  return sum / static_cast<double>(found.size());
}

std::string RunRecord::to_json() const {
  using nlohmann::json;
  json doc;
  doc["seed"] = seed;
  doc["qubits"] = qubits;
  doc["converged"] = converged;
  doc["final_params"] = final_params;
  doc["best"] = {{"bitstring", bitstring(best.bits, qubits)}, {"cost", best.cost}, {"iteration", best.iteration}};
  doc["iterations"] = json::array();
  for (const auto& it : iterations) {
    json j{{"params", it.params}, {"cost_signal", it.cost_signal}, {"final", it.final}};
    j["samples"] = json::array();
    for (const auto& s : it.samples)
      j["samples"].push_back({{"bitstring", bitstring(s.bits, qubits)}, {"count", s.count}, {"cost", s.cost}});
    doc["iterations"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace arpq
