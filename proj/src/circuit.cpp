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

#include "arpq/circuit.hpp"

#include <algorithm>

#include "arpq/error.hpp"

namespace arpq {

double Angle::value(std::span<const double> params) const {
  if (!param) return scale;
  if (*param >= params.size()) throw InvalidInput("unbound circuit parameter " + std::to_string(*param));
  return scale * params[*param];
}

void Circuit::add(const Gate& g) {
  if (g.target >= width_) throw InvalidInput("gate target out of range");
  if (g.kind == GateKind::cx) {
    if (g.control >= width_) throw InvalidInput("gate control out of range");
    if (g.control == g.target) throw InvalidInput("CNOT control and target must differ");
  }
  if ((g.kind == GateKind::rz || g.kind == GateKind::rx) && g.angle.param &&
      *g.angle.param >= parameters_.size())
    throw InvalidInput("gate references unknown parameter");
  gates_.push_back(g);
}

void Circuit::append(std::span<const Gate> gates) {
  for (const Gate& g : gates) add(g);
}

Circuit Circuit::bind(std::span<const double> params) const {
  if (params.size() < parameters_.size()) throw InvalidInput("not every circuit parameter is bound");
  Circuit out(width_);
  out.gates_ = gates_;
  for (Gate& g : out.gates_)
    if (g.kind == GateKind::rz || g.kind == GateKind::rx) g.angle = Angle::literal(g.angle.value(params));
  return out;
}

bool Circuit::is_bound() const {
  return std::none_of(gates_.begin(), gates_.end(), [](const Gate& g) {
    return (g.kind == GateKind::rz || g.kind == GateKind::rx) && g.angle.param.has_value();
  });
}

GadgetStyle parse_gadget_style(std::string_view text) {
  if (text == "ladder") return GadgetStyle::ladder;
  if (text == "tree") return GadgetStyle::tree;
  throw InvalidInput("unknown gadget style '" + std::string(text) + "' (expected ladder or tree)");
}

std::string to_string(GadgetStyle style) { return style == GadgetStyle::ladder ? "ladder" : "tree"; }

namespace {

// RZ(theta) on the parity qubit applies exp(-i theta/2 * prod Z). Since
// z = 2b - 1 = -Z on basis states, prod z = (-1)^k prod Z.
Angle gadget_angle(std::size_t order, double coeff, Angle param) {
  const double sign = order % 2 == 1 ? -1.0 : 1.0;
  return param.scaled(2.0 * coeff * sign);
}

void mirror(std::vector<Gate>& out, std::size_t first_cnot, std::size_t end_cnot) {
  for (std::size_t k = end_cnot; k > first_cnot; --k) out.push_back(out[k - 1]);
}

}  // namespace

std::vector<Gate> synth_phase_gadget(const Monomial& term, double coeff, Angle param, GadgetStyle style) {
  if (term.empty()) throw InvalidInput("phase gadget needs at least one qubit");
  Monomial qubits = term;
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end())
    throw InvalidInput("phase gadget qubits must be distinct");

  std::vector<Gate> out;
  std::uint32_t root = qubits.back();
  if (style == GadgetStyle::ladder) {
    for (std::size_t k = 0; k + 1 < qubits.size(); ++k) out.push_back(Gate::cx(qubits[k], qubits[k + 1]));
  } else {
    std::vector<std::uint32_t> active(qubits.begin(), qubits.end());
    while (active.size() > 1) {
      std::vector<std::uint32_t> next;
      for (std::size_t k = 0; k + 1 < active.size(); k += 2) {
        out.push_back(Gate::cx(active[k + 1], active[k]));
        next.push_back(active[k]);
      }
      if (active.size() % 2 == 1) next.push_back(active.back());
      active = std::move(next);
    }
    root = active.front();
  }
  const std::size_t cnots = out.size();
  out.push_back(Gate::rz(root, gadget_angle(qubits.size(), coeff, param)));
  mirror(out, 0, cnots);
  return out;
}

std::vector<GadgetGroup> factor_terms(const SpinPoly& spin) {
  // Longest first; among equal lengths the lexicographically greatest set.
  std::vector<std::pair<Monomial, double>> pool(spin.terms().begin(), spin.terms().end());
  std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
    return x.first > y.first;
  });
  std::vector<bool> used(pool.size(), false);
  std::vector<GadgetGroup> groups;
  for (std::size_t seed = 0; seed < pool.size(); ++seed) {
    if (used[seed]) continue;
    used[seed] = true;
    std::vector<std::size_t> chain{seed};
    for (;;) {
      const Monomial& last = pool[chain.back()].first;
      std::optional<std::size_t> pick;
      for (std::size_t k = 0; k < pool.size() && !pick; ++k) {
        if (used[k]) continue;
        const Monomial& cand = pool[k].first;
        if (cand.size() < last.size() && std::includes(last.begin(), last.end(), cand.begin(), cand.end()))
          pick = k;
      }
      if (!pick) break;
      used[*pick] = true;
      chain.push_back(*pick);
    }
    GadgetGroup g;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      g.chain.push_back(pool[*it].first);
      g.coefficients.push_back(pool[*it].second);
    }
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(),
            [](const GadgetGroup& x, const GadgetGroup& y) { return x.chain.back() < y.chain.back(); });
  return groups;
}

std::vector<Gate> synth_group(const GadgetGroup& group, Angle param, GadgetStyle style) {
  if (group.chain.empty() || group.chain.size() != group.coefficients.size())
    throw InvalidInput("gadget group must hold one coefficient per term");
  for (std::size_t k = 0; k < group.chain.size(); ++k) {
    const Monomial& s = group.chain[k];
    if (s.empty() || !std::is_sorted(s.begin(), s.end()))
      throw InvalidInput("gadget group terms must be non-empty sorted index sets");
    if (k > 0) {
      const Monomial& prev = group.chain[k - 1];
      if (prev.size() >= s.size() || !std::includes(s.begin(), s.end(), prev.begin(), prev.end()))
        throw InvalidInput("gadget group is not a strict subset chain");
    }
  }
  if (group.chain.size() == 1) return synth_phase_gadget(group.chain[0], group.coefficients[0], param, style);

  std::vector<Gate> out;
  const std::uint32_t target = group.chain.front().front();
  Monomial covered{target};
  for (std::size_t k = 0; k < group.chain.size(); ++k) {
    for (std::uint32_t q : group.chain[k])
      if (!std::binary_search(covered.begin(), covered.end(), q)) out.push_back(Gate::cx(q, target));
    covered = group.chain[k];
    out.push_back(Gate::rz(target, gadget_angle(covered.size(), group.coefficients[k], param)));
  }
  std::vector<Gate> undo;
  for (auto it = out.rbegin(); it != out.rend(); ++it)
    if (it->kind == GateKind::cx) undo.push_back(*it);
  out.insert(out.end(), undo.begin(), undo.end());
  return out;
}

std::vector<Gate> cost_layer(const SpinPoly& spin, Angle param, bool factored, GadgetStyle style) {
  std::vector<Gate> out;
  if (factored) {
    for (const GadgetGroup& g : factor_terms(spin)) {
      auto gates = synth_group(g, param, style);
      out.insert(out.end(), gates.begin(), gates.end());
    }
  } else {
    for (const auto& [term, coeff] : spin.terms()) {
      auto gates = synth_phase_gadget(term, coeff, param, style);
      out.insert(out.end(), gates.begin(), gates.end());
    }
  }
  return out;
}

Circuit build_ansatz(const SpinPoly& spin, std::size_t layers, bool factored, GadgetStyle style) {
  if (layers < 1) throw InvalidInput("QAOA needs at least one layer");
  std::vector<std::string> names;
  for (std::size_t l = 1; l <= layers; ++l) names.push_back("gamma_" + std::to_string(l));
  for (std::size_t l = 1; l <= layers; ++l) names.push_back("beta_" + std::to_string(l));
  Circuit c(spin.width(), std::move(names));
  for (std::uint32_t q = 0; q < spin.width(); ++q) c.add(Gate::h(q));
  for (std::size_t l = 0; l < layers; ++l) {
    c.append(cost_layer(spin, Angle::symbol(l), factored, style));
    for (std::uint32_t q = 0; q < spin.width(); ++q) c.add(Gate::rx(q, Angle::symbol(layers + l, 2.0)));
  }
  return c;
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics m;
  m.qubits = c.width();
  m.gates = c.gates().size();
  std::vector<std::size_t> level(c.width(), 0);
  for (const Gate& g : c.gates()) {
    if (g.is_two_qubit()) {
      ++m.two_qubit_gates;
      const std::size_t t = std::max(level[g.control], level[g.target]) + 1;
      level[g.control] = level[g.target] = t;
    } else {
      ++level[g.target];
    }
  }
  for (std::size_t l : level) m.depth = std::max(m.depth, l);
  return m;
}

}  // namespace arpq
