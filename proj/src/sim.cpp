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

#include "arpq/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "arpq/error.hpp"

namespace arpq {

namespace {

void check_width(std::size_t width, std::size_t max_qubits) {
  if (width > max_qubits)
    throw WidthCapExceeded("instance too large for simulation: " + std::to_string(width) +
                           " qubits exceeds the cap of " + std::to_string(max_qubits));
  if (width > 30) throw WidthCapExceeded("statevector simulation is limited to 30 qubits");
}

}  // namespace

StateVector StateVector::zero(std::size_t width, std::size_t max_qubits) {
  check_width(width, max_qubits);
  std::vector<Amplitude> amps(std::size_t{1} << width, Amplitude{0.0, 0.0});
  amps[0] = 1.0;
  return StateVector(width, std::move(amps));
}

StateVector StateVector::plus(std::size_t width, std::size_t max_qubits) {
  check_width(width, max_qubits);
  const std::size_t size = std::size_t{1} << width;
  const double a = 1.0 / std::sqrt(static_cast<double>(size));
  return StateVector(width, std::vector<Amplitude>(size, Amplitude{a, 0.0}));
}

void StateVector::apply(const Gate& g, std::span<const double> params) {
  if (g.target >= width_ || (g.kind == GateKind::cx && g.control >= width_))
    throw InvalidInput("gate acts outside the statevector");
  const std::size_t size = amps_.size();
  const std::size_t tbit = std::size_t{1} << g.target;
  switch (g.kind) {
    case GateKind::h: {
      const double r = 1.0 / std::sqrt(2.0);
      for (std::size_t b = 0; b < size; ++b)
        if (!(b & tbit)) {
          const Amplitude a0 = amps_[b], a1 = amps_[b | tbit];
          amps_[b] = r * (a0 + a1);
          amps_[b | tbit] = r * (a0 - a1);
        }
      break;
    }
    case GateKind::rz: {
      const double half = 0.5 * g.angle.value(params);
      const Amplitude p0 = std::polar(1.0, -half), p1 = std::polar(1.0, half);
      for (std::size_t b = 0; b < size; ++b) amps_[b] *= (b & tbit) ? p1 : p0;
      break;
    }
    case GateKind::rx: {
      const double half = 0.5 * g.angle.value(params);
      const double c = std::cos(half), s = std::sin(half);
      const Amplitude mis{0.0, -s};
      for (std::size_t b = 0; b < size; ++b)
        if (!(b & tbit)) {
          const Amplitude a0 = amps_[b], a1 = amps_[b | tbit];
          amps_[b] = c * a0 + mis * a1;
          amps_[b | tbit] = mis * a0 + c * a1;
        }
      break;
    }
    case GateKind::cx: {
      const std::size_t cbit = std::size_t{1} << g.control;
      for (std::size_t b = 0; b < size; ++b)
        if ((b & cbit) && !(b & tbit)) std::swap(amps_[b], amps_[b | tbit]);
      break;
    }
  }
}

void StateVector::apply_phases(std::span<const double> energies, double gamma, double offset) {
  if (energies.size() != amps_.size()) throw InvalidInput("energy table size does not match the statevector");
  for (std::size_t b = 0; b < amps_.size(); ++b) amps_[b] *= std::polar(1.0, -gamma * (energies[b] - offset));
}

void StateVector::apply_rx_all(double theta) {
  for (std::uint32_t q = 0; q < width_; ++q) apply(Gate::rx(q, Angle::literal(theta)));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t b = 0; b < amps_.size(); ++b) p[b] = std::norm(amps_[b]);
  return p;
}

StateVector run(const Circuit& c, std::span<const double> params, std::size_t max_qubits) {
  StateVector s = StateVector::zero(c.width(), max_qubits);
  for (const Gate& g : c.gates()) s.apply(g, params);
  return s;
}

StateVector run_qaoa_diagonal(std::span<const double> energies, double offset, std::size_t width,
                              std::span<const double> params, std::size_t max_qubits) {
  if (params.empty() || params.size() % 2 != 0) throw InvalidInput("QAOA needs 2p parameters");
  const std::size_t layers = params.size() / 2;
  StateVector s = StateVector::plus(width, max_qubits);
  for (std::size_t l = 0; l < layers; ++l) {
    s.apply_phases(energies, params[l], offset);
    s.apply_rx_all(2.0 * params[layers + l]);
  }
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SampleSet sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InvalidInput("at least one shot is required");
  std::vector<double> cdf = s.probabilities();
  for (std::size_t b = 1; b < cdf.size(); ++b) cdf[b] += cdf[b - 1];
  const double total = cdf.back();
  std::mt19937_64 rng(seed);
  SampleSet out;
  out.shots = shots;
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t b = static_cast<std::size_t>(it - cdf.begin());
    if (b >= cdf.size()) b = cdf.size() - 1;
    // Never land on a zero-probability state sitting on a plateau.
    while (b > 0 && cdf[b] == cdf[b - 1]) --b;
    ++out.counts[b];
  }
  return out;
}

double exact_expectation(const StateVector& s, std::span<const double> energies) {
  if (energies.size() != s.amplitudes().size()) throw InvalidInput("width mismatch between state and cost");
  double sum = 0.0;
  for (std::size_t b = 0; b < energies.size(); ++b) sum += std::norm(s[b]) * energies[b];
  return sum;
}

double exact_expectation(const StateVector& s, const Formulation& f) {
  if (s.width() != f.qubit_count()) throw InvalidInput("width mismatch between state and formulation");
  return exact_expectation(s, energy_table(f.poly(), f.qubit_count()));
}

double sample_cost_mean(const SampleSet& samples, const CompiledPoly& cost) {
  if (samples.shots == 0 || samples.counts.empty()) throw InvalidInput("empty sample set");
  double sum = 0.0;
  for (const auto& [bits, count] : samples.counts) sum += static_cast<double>(count) * cost(bits);
  return sum / static_cast<double>(samples.shots);
}

double sample_cost_mean(const SampleSet& samples, const Formulation& f) {
  return sample_cost_mean(samples, CompiledPoly(f.poly()));
}

}  // namespace arpq
