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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "arpq/circuit.hpp"
#include "arpq/formulation.hpp"

namespace arpq {

inline constexpr std::size_t kDefaultMaxQubits = 24;

using Amplitude = std::complex<double>;

/// Dense 2^n statevector. Basis index bit q is qubit q.
class StateVector {
 public:
  /// |0...0>. Throws WidthCapExceeded when width > max_qubits.
  static StateVector zero(std::size_t width, std::size_t max_qubits = kDefaultMaxQubits);
  /// Uniform superposition H^n |0...0>.
  static StateVector plus(std::size_t width, std::size_t max_qubits = kDefaultMaxQubits);

  std::size_t width() const { return width_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t b) const { return amps_[b]; }

  void apply(const Gate& g, std::span<const double> params = {});
  /// |b> -> exp(-i gamma (energies[b] - offset)) |b>.
  void apply_phases(std::span<const double> energies, double gamma, double offset = 0.0);
  void apply_rx_all(double theta);

  double norm() const;
  std::vector<double> probabilities() const;

 private:
  StateVector(std::size_t width, std::vector<Amplitude> amps) : width_(width), amps_(std::move(amps)) {}

  std::size_t width_;
  std::vector<Amplitude> amps_;
};

/// Gate-by-gate simulation from |0...0>.
StateVector run(const Circuit& c, std::span<const double> params = {},
                std::size_t max_qubits = kDefaultMaxQubits);

/// Same state as run(build_ansatz(...)) but with every cost layer applied as a
/// diagonal phase from a precomputed energy table. `offset` is the constant of
/// the spin polynomial (a global phase in the gate-level circuit).
StateVector run_qaoa_diagonal(std::span<const double> energies, double offset, std::size_t width,
                              std::span<const double> params, std::size_t max_qubits = kDefaultMaxQubits);

struct SampleSet {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

/// Multinomial draw of `shots` basis states from |amplitude|^2; deterministic
/// for a given seed.
SampleSet sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed);

/// sum_b |amp(b)|^2 * cost(b).
double exact_expectation(const StateVector& s, std::span<const double> energies);
double exact_expectation(const StateVector& s, const Formulation& f);

/// sum_b counts(b) * cost(b) / shots. Throws InvalidInput for an empty set.
double sample_cost_mean(const SampleSet& samples, const CompiledPoly& cost);
double sample_cost_mean(const SampleSet& samples, const Formulation& f);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace arpq
