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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arpq/poly.hpp"

namespace arpq {

/// Rotation angle: `scale * parameter[param]`, or the literal `scale` when no
/// parameter is attached.
struct Angle {
  double scale = 0.0;
  std::optional<std::size_t> param;

  static Angle literal(double value) { return {value, std::nullopt}; }
  static Angle symbol(std::size_t index, double multiplier = 1.0) { return {multiplier, index}; }

  double value(std::span<const double> params) const;
  Angle scaled(double factor) const { return {scale * factor, param}; }
  friend bool operator==(const Angle&, const Angle&) = default;
};

enum class GateKind { h, rz, rx, cx };

struct Gate {
  GateKind kind = GateKind::h;
  std::uint32_t target = 0;
  std::uint32_t control = 0;  // CNOT only
  Angle angle;                // RZ / RX only

  static Gate h(std::uint32_t q) { return {GateKind::h, q, 0, {}}; }
  static Gate rz(std::uint32_t q, Angle a) { return {GateKind::rz, q, 0, a}; }
  static Gate rx(std::uint32_t q, Angle a) { return {GateKind::rx, q, 0, a}; }
  static Gate cx(std::uint32_t control, std::uint32_t target) { return {GateKind::cx, target, control, {}}; }

  bool is_two_qubit() const { return kind == GateKind::cx; }
  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(std::size_t width = 0, std::vector<std::string> parameters = {})
      : width_(width), parameters_(std::move(parameters)) {}

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  /// Throws InvalidInput for out-of-range or repeated qubits and unknown
  /// parameter indices.
  void add(const Gate& g);
  void append(std::span<const Gate> gates);

  /// Same gates with every angle resolved to a literal.
  Circuit bind(std::span<const double> params) const;
  bool is_bound() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  std::vector<std::string> parameters_;
  std::vector<Gate> gates_;
};

enum class GadgetStyle { ladder, tree };

GadgetStyle parse_gadget_style(std::string_view text);
std::string to_string(GadgetStyle style);

/// exp(-i * param * coeff * prod_{q in term} z_q) with z_q = 2 b_q - 1, built
/// from 2(|term| - 1) CNOTs around one RZ. A ladder chains the parity through
/// consecutive qubits; a tree combines pairs with logarithmic depth.
std::vector<Gate> synth_phase_gadget(const Monomial& term, double coeff, Angle param,
                                     GadgetStyle style = GadgetStyle::ladder);

/// Terms S_1 ⊂ S_2 ⊂ ... ⊂ S_m, smallest first.
struct GadgetGroup {
  std::vector<Monomial> chain;
  std::vector<double> coefficients;
};

/// Greedy subset-chain grouping of the non-constant terms: repeatedly start a
/// chain from the longest unassigned term and extend it with the longest
/// unassigned strict subset of the most recently added term. Ties go to the
/// lexicographically greatest index set.
std::vector<GadgetGroup> factor_terms(const SpinPoly& spin);

/// One shared CNOT fan-in for the whole chain: 2(|S_m| - 1) CNOTs. A singleton
/// group is synthesized exactly like synth_phase_gadget.
std::vector<Gate> synth_group(const GadgetGroup& group, Angle param,
                              GadgetStyle style = GadgetStyle::ladder);

/// Cost layer only (all gadgets for one parameter).
std::vector<Gate> cost_layer(const SpinPoly& spin, Angle param, bool factored,
                             GadgetStyle style = GadgetStyle::ladder);

/// H on every qubit followed by p rounds of cost layer (gamma_l) and RX(2
/// beta_l) mixer. Parameters are ordered gamma_1..gamma_p, beta_1..beta_p.
Circuit build_ansatz(const SpinPoly& spin, std::size_t layers, bool factored,
                     GadgetStyle style = GadgetStyle::ladder);

struct CircuitMetrics {
  std::size_t depth = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t qubits = 0;
  std::size_t gates = 0;
};

/// ASAP depth with unit gate duration and per-qubit exclusivity.
CircuitMetrics metrics(const Circuit& c);

}  // namespace arpq
