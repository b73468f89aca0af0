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

#include "arpq/formulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "arpq/error.hpp"

namespace arpq {

namespace {

std::string edge_var_name(const ProblemInstance& inst, NodeIndex u, NodeIndex v, int i) {
  return "x[" + inst.name(u) + "," + inst.name(v) + "," + std::to_string(i) + "]";
}

std::string node_var_name(const ProblemInstance& inst, NodeIndex u, int i) {
  return "x[" + inst.name(u) + "," + std::to_string(i) + "]";
}

std::string slack_name(int j) { return "z[" + std::to_string(j) + "]"; }

PBPoly square_minus_one(const PBPoly& sum) {
  PBPoly d = sum - PBPoly::constant(1.0, sum.registry());
  return d * d;
}

void require_feasible(const ProblemInstance& inst, double alpha) {
  if (!(alpha > 0.0)) throw InvalidInput("penalty alpha must be positive");
  DistanceTable dist = shortest_paths(inst);
  if (!has_feasible_route(inst, dist))
    throw InfeasibleInstance("instance infeasible: end node not reachable within the deadline");
}

}  // namespace

std::string to_string(FormKind kind) { return kind == FormKind::qubo ? "qubo" : "hubo"; }

FormKind parse_form_kind(std::string_view text) {
  if (text == "qubo") return FormKind::qubo;
  if (text == "hubo") return FormKind::hubo;
  throw InvalidInput("unknown formulation '" + std::string(text) + "' (expected qubo or hubo)");
}

std::string Formulation::part_label(std::size_t k) const {
  return (kind_ == FormKind::qubo ? "Q" : "H") + std::to_string(k);
}

RouteCheck is_feasible(const Route& route, const ProblemInstance& inst) {
  RouteCheck check;
  auto fail = [&](std::string what, std::string detail) {
    check.feasible = false;
    check.violations.push_back({std::move(what), std::move(detail)});
  };
  const auto& p = route.path;
  const std::size_t expected = static_cast<std::size_t>(inst.deadline()) + 1;
  if (p.size() != expected)
    fail("length", "route has " + std::to_string(p.size()) + " positions, expected " +
                       std::to_string(expected));
  if (p.empty()) return check;
  for (NodeIndex u : p)
    if (u >= inst.node_count()) {
      fail("edge", "unknown node index " + std::to_string(u));
      return check;
    }
  if (p.front() != inst.start()) fail("start", "route does not begin at " + inst.name(inst.start()));
  if (p.back() != inst.end()) fail("end", "route does not finish at " + inst.name(inst.end()));
  long total = 0;
  std::set<NodeIndex> visited;
  for (std::size_t i = 1; i < p.size(); ++i) {
    auto t = inst.edge_time(p[i - 1], p[i]);
    if (!t) {
      fail("edge", "no edge " + inst.name(p[i - 1]) + "-" + inst.name(p[i]) + " at step " + std::to_string(i));
    } else {
      total += *t;
    }
    if (p[i] == inst.start()) fail("revisit-start", "start node revisited at step " + std::to_string(i));
    if (p[i - 1] == inst.end() && p[i] != inst.end())
      fail("leave-end", "route leaves the end node at step " + std::to_string(i));
    if (inst.is_internal(p[i]) && !visited.insert(p[i]).second)
      fail("visit-once", "node " + inst.name(p[i]) + " visited more than once");
  }
  if (total > inst.deadline())
    fail("time", "route takes " + std::to_string(total) + " > deadline " + std::to_string(inst.deadline()));
  return check;
}

double route_objective(const Route& route, const ProblemInstance& inst) {
  RouteCheck check = is_feasible(route, inst);
  if (!check.feasible)
    throw InvalidInput("route is infeasible (" + check.violations.front().constraint + ": " +
                       check.violations.front().detail + ")");
  double value = 0.0;
  std::set<NodeIndex> seen;
  for (NodeIndex u : route.path)
    if (inst.is_internal(u) && seen.insert(u).second) value -= inst.asset_value(u);
  return value;
}

Route pad_route(std::vector<NodeIndex> path, const ProblemInstance& inst) {
  while (path.size() < static_cast<std::size_t>(inst.deadline()) + 1) path.push_back(inst.end());
  return Route{std::move(path)};
}

std::string route_to_string(const Route& route, const ProblemInstance& inst) {
  std::string out;
  for (std::size_t i = 0; i < route.path.size(); ++i) {
    if (i) out += " -> ";
    out += inst.name(route.path[i]);
  }
  return out;
}

double default_penalty(const ProblemInstance& inst) {
  if (inst.internal_count() == 0) throw InvalidInput("instance has no internal nodes");
  double best = 0.0;
  for (NodeIndex u : inst.internal_nodes()) best = std::max(best, inst.asset_value(u));
  return best == 0.0 ? 1.0 : 0.75 * best;
}

std::size_t unpruned_variable_count(const ProblemInstance& inst, FormKind kind) {
  const std::size_t t = static_cast<std::size_t>(inst.deadline());
  const std::size_t n = inst.node_count();
  if (kind == FormKind::qubo) return n * n * t + t + 1;
  return (inst.internal_count() + 1) * (t - 1) + t + 1;
}

Formulation build_qubo(const ProblemInstance& inst, const FeasibilityMask& mask, double alpha) {
  require_feasible(inst, alpha);
  if (mask.qubo_allowed.empty()) throw InfeasibleInstance("instance infeasible: every variable was pruned");
  const int deadline = inst.deadline();

  std::vector<std::tuple<int, NodeIndex, NodeIndex>> ordered;
  for (const auto& [u, v, i] : mask.qubo_allowed) ordered.emplace_back(i, u, v);
  std::sort(ordered.begin(), ordered.end());

  auto reg = std::make_shared<VarRegistry>();
  for (const auto& [i, u, v] : ordered) reg->add(VarId::edge(u, v, i), edge_var_name(inst, u, v, i));
  for (int j = 0; j <= deadline; ++j) reg->add(VarId::slack(j), slack_name(j));
  RegistryPtr registry = reg;

  auto x = [&](std::uint32_t q) { return PBPoly::variable(q, registry); };
  PBPoly zero(registry);

  PBPoly objective = zero, time_sum = zero, slack_sum = zero, weighted_slack = zero;
  std::map<NodeIndex, PBPoly> arrivals;          // internal v -> sum over steps of x_{.,v}
  std::map<int, PBPoly> per_step;                // i -> sum of x at step i
  std::map<std::pair<NodeIndex, int>, PBPoly> into, out_of;  // (v, i)
  for (const auto& [i, u, v] : ordered) {
    const std::uint32_t q = *registry->find(VarId::edge(u, v, i));
    const int t = *inst.edge_time(u, v);
    if (inst.is_internal(v)) {
      objective.add_term({q}, -inst.asset_value(v));
      arrivals.try_emplace(v, zero).first->second += x(q);
    }
    per_step.try_emplace(i, zero).first->second += x(q);
    if (t != 0) time_sum.add_term({q}, t);
    into.try_emplace({v, i}, zero).first->second += x(q);
    out_of.try_emplace({u, i}, zero).first->second += x(q);
  }
  for (int j = 0; j <= deadline; ++j) {
    const std::uint32_t q = *registry->find(VarId::slack(j));
    slack_sum += x(q);
    if (j != 0) weighted_slack.add_term({q}, j);
  }

  PBPoly visit_once = zero;
  for (const auto& [v, s] : arrivals) visit_once += s * s - s;

  PBPoly one_edge = zero;
  for (int i = 1; i <= deadline; ++i) {
    auto it = per_step.find(i);
    one_edge += square_minus_one(it == per_step.end() ? zero : it->second);
  }

  PBPoly time_limit = time_sum + weighted_slack - PBPoly::constant(deadline, registry);
  time_limit = time_limit * time_limit;

  PBPoly continuity = zero;
  for (int i = 2; i <= deadline; ++i)
    for (NodeIndex v = 1; v < inst.node_count(); ++v) {
      auto in = into.find({v, i - 1});
      auto out = out_of.find({v, i});
      PBPoly diff = (in == into.end() ? zero : in->second) - (out == out_of.end() ? zero : out->second);
      continuity += diff * diff;
    }

  PBPoly one_slack = square_minus_one(slack_sum);

  Formulation f;
  f.kind_ = FormKind::qubo;
  f.parts_ = {objective, visit_once, one_edge, time_limit, continuity, one_slack};
  PBPoly full = objective;
  for (std::size_t k = 1; k < Formulation::kParts; ++k) full += alpha * f.parts_[k];
  auto [dropped, constant] = drop_constant(full);
  f.poly_ = std::move(dropped);
  f.dropped_constant_ = constant;
  f.registry_ = registry;
  f.alpha_ = alpha;
  f.instance_ = std::make_shared<const ProblemInstance>(inst);
  return f;
}

Formulation build_hubo(const ProblemInstance& inst, const FeasibilityMask& mask, double alpha) {
  require_feasible(inst, alpha);
  const int deadline = inst.deadline();
  const NodeIndex a = inst.start();
  const NodeIndex b = inst.end();

  std::vector<std::pair<int, NodeIndex>> ordered;
  for (const auto& [u, i] : mask.hubo_allowed) ordered.emplace_back(i, u);
  std::sort(ordered.begin(), ordered.end());

  auto reg = std::make_shared<VarRegistry>();
  for (const auto& [i, u] : ordered) reg->add(VarId::node(u, i), node_var_name(inst, u, i));
  for (int j = 0; j <= deadline; ++j) reg->add(VarId::slack(j), slack_name(j));
  RegistryPtr registry = reg;
  PBPoly zero(registry);

  // Position indicator with the boundary fixed: start at step 0, end at step T.
  auto pos = [&](NodeIndex u, int i) -> PBPoly {
    if (i == 0) return PBPoly::constant(u == a ? 1.0 : 0.0, registry);
    if (i == deadline) return PBPoly::constant(u == b ? 1.0 : 0.0, registry);
    if (auto q = registry->find(VarId::node(u, i))) return PBPoly::variable(*q, registry);
    return zero;
  };

  PBPoly objective = zero;
  for (const auto& [i, u] : ordered)
    if (inst.is_internal(u)) objective += -inst.asset_value(u) * pos(u, i);

  PBPoly visit_once = zero;
  for (NodeIndex u : inst.internal_nodes()) {
    PBPoly s = zero;
    for (int i = 1; i <= deadline - 1; ++i) s += pos(u, i);
    visit_once += s * s - s;
  }

  PBPoly one_position = zero;
  for (int i = 1; i <= deadline - 1; ++i) {
    PBPoly s = zero;
    for (NodeIndex u = 1; u < inst.node_count(); ++u) s += pos(u, i);
    one_position += square_minus_one(s);
  }

  PBPoly time_sum = zero;
  for (int i = 1; i <= deadline; ++i)
    for (NodeIndex u = 0; u < inst.node_count(); ++u) {
      PBPoly from = pos(u, i - 1);
      if (from.is_zero()) continue;
      for (NodeIndex v = 0; v < inst.node_count(); ++v) {
        if (u == v) continue;
        auto t = inst.edge_time(u, v);
        if (!t) continue;
        PBPoly to = pos(v, i);
        if (to.is_zero()) continue;
        time_sum += static_cast<double>(*t) * (from * to);
      }
    }
  PBPoly slack_sum = zero, weighted_slack = zero;
  for (int j = 0; j <= deadline; ++j) {
    const std::uint32_t q = *registry->find(VarId::slack(j));
    slack_sum += PBPoly::variable(q, registry);
    if (j != 0) weighted_slack.add_term({q}, j);
  }
  PBPoly time_limit = time_sum + weighted_slack - PBPoly::constant(deadline, registry);
  time_limit = time_limit * time_limit;

  PBPoly adjacency = zero;
  for (int i = 2; i <= deadline; ++i)
    for (NodeIndex u = 1; u < inst.node_count(); ++u)
      for (NodeIndex v = 1; v < inst.node_count(); ++v)
        if (u != v && !inst.has_edge(u, v)) adjacency += pos(u, i - 1) * pos(v, i);
  for (int i = 1; i <= deadline - 2; ++i)
    for (NodeIndex u = 1; u < inst.node_count(); ++u)
      if (u != b) adjacency += pos(b, i) * pos(u, i + 1);

  PBPoly one_slack = square_minus_one(slack_sum);

  Formulation f;
  f.kind_ = FormKind::hubo;
  f.parts_ = {objective, visit_once, one_position, time_limit, adjacency, one_slack};
  PBPoly full = objective;
  for (std::size_t k = 1; k < Formulation::kParts; ++k) full += alpha * f.parts_[k];
  auto [dropped, constant] = drop_constant(full);
  f.poly_ = std::move(dropped);
  f.dropped_constant_ = constant;
  f.registry_ = registry;
  f.alpha_ = alpha;
  f.instance_ = std::make_shared<const ProblemInstance>(inst);
  return f;
}

Formulation build_formulation(const ProblemInstance& instance, FormKind kind, std::optional<double> alpha) {
  DistanceTable dist = shortest_paths(instance);
  ProblemInstance completed = complete_internal_graph(instance, dist);
  FeasibilityMask mask = prune_variables(completed, dist);
  const double penalty = alpha ? *alpha : default_penalty(instance);
  return kind == FormKind::qubo ? build_qubo(completed, mask, penalty) : build_hubo(completed, mask, penalty);
}

namespace {

void add_violation(DecodeResult& r, std::string c, std::string detail) {
  r.violations.push_back({std::move(c), std::move(detail)});
}

std::optional<int> decode_slack(std::span<const std::uint8_t> bits, const Formulation& f,
                                DecodeResult& result, const std::string& label) {
  std::vector<int> on;
  for (int j = 0; j <= f.instance().deadline(); ++j)
    if (bits[*f.registry().find(VarId::slack(j))]) on.push_back(j);
  if (on.size() != 1) {
    add_violation(result, label, std::to_string(on.size()) + " slack variables set, expected exactly one");
    return std::nullopt;
  }
  return on.front();
}

DecodeResult decode_qubo(std::span<const std::uint8_t> bits, const Formulation& f) {
  const auto& inst = f.instance();
  const int deadline = inst.deadline();
  DecodeResult result;
  std::vector<std::vector<std::pair<NodeIndex, NodeIndex>>> steps(deadline + 1);
  for (std::uint32_t q = 0; q < f.qubit_count(); ++q) {
    const VarId& id = f.registry().id(q);
    if (id.kind == VarKind::qubo_edge && bits[q]) steps[id.step].push_back({id.u, id.v});
  }
  bool one_edge = true;
  for (int i = 1; i <= deadline; ++i)
    if (steps[i].size() != 1) {
      add_violation(result, "Q2", "step " + std::to_string(i) + " traverses " +
                                      std::to_string(steps[i].size()) + " edges");
      one_edge = false;
    }
  // Flow conservation at every node between consecutive steps.
  bool flow = true;
  for (int i = 2; i <= deadline; ++i)
    for (NodeIndex v = 1; v < inst.node_count(); ++v) {
      long in = 0, out = 0;
      for (auto [a, c] : steps[i - 1]) in += c == v;
      for (auto [a, c] : steps[i]) out += a == v;
      if (in != out) {
        add_violation(result, "Q4", "flow into " + inst.name(v) + " at step " + std::to_string(i - 1) +
                                        " differs from flow out at step " + std::to_string(i));
        flow = false;
      }
    }
  for (NodeIndex v : inst.internal_nodes()) {
    long arrivals = 0;
    for (int i = 1; i <= deadline; ++i)
      for (auto [a, c] : steps[i]) arrivals += c == v;
    if (arrivals > 1) add_violation(result, "Q1", "node " + inst.name(v) + " entered " + std::to_string(arrivals) + " times");
  }
  auto slack = decode_slack(bits, f, result, "Q5");
  long total = 0;
  for (int i = 1; i <= deadline; ++i)
    for (auto [u, v] : steps[i]) total += *inst.edge_time(u, v);
  if (slack && total + *slack != deadline)
    add_violation(result, "Q3", "route time " + std::to_string(total) + " plus slack " +
                                    std::to_string(*slack) + " differs from deadline");
  if (!slack && total > deadline)
    add_violation(result, "Q3", "route time " + std::to_string(total) + " exceeds deadline");
  if (!result.violations.empty() || !one_edge || !flow) return result;

  std::vector<NodeIndex> path{steps[1].front().first};
  for (int i = 1; i <= deadline; ++i) path.push_back(steps[i].front().second);
  Route route{std::move(path)};
  RouteCheck check = is_feasible(route, inst);
  if (!check.feasible) {
    for (auto& v : check.violations) result.violations.push_back(std::move(v));
    return result;
  }
  result.route = std::move(route);
  return result;
}

DecodeResult decode_hubo(std::span<const std::uint8_t> bits, const Formulation& f) {
  const auto& inst = f.instance();
  const int deadline = inst.deadline();
  DecodeResult result;
  std::vector<std::vector<NodeIndex>> at(deadline + 1);
  at[0].push_back(inst.start());
  at[deadline].push_back(inst.end());
  for (std::uint32_t q = 0; q < f.qubit_count(); ++q) {
    const VarId& id = f.registry().id(q);
    if (id.kind == VarKind::hubo_node && bits[q]) at[id.step].push_back(id.u);
  }
  for (int i = 1; i <= deadline - 1; ++i)
    if (at[i].size() != 1)
      add_violation(result, "H2", "step " + std::to_string(i) + " has " + std::to_string(at[i].size()) +
                                      " positions");
  for (int i = 1; i <= deadline; ++i)
    for (NodeIndex u : at[i - 1])
      for (NodeIndex v : at[i]) {
        if (u != v && !inst.has_edge(u, v))
          add_violation(result, "H4", "no edge " + inst.name(u) + "-" + inst.name(v) + " at step " + std::to_string(i));
        if (u == inst.end() && v != inst.end() && i < deadline)
          add_violation(result, "H4", "route leaves " + inst.name(u) + " at step " + std::to_string(i));
      }
  for (NodeIndex u : inst.internal_nodes()) {
    long visits = 0;
    for (int i = 1; i <= deadline - 1; ++i) visits += std::count(at[i].begin(), at[i].end(), u);
    if (visits > 1) add_violation(result, "H1", "node " + inst.name(u) + " visited " + std::to_string(visits) + " times");
  }
  auto slack = decode_slack(bits, f, result, "H5");
  long total = 0;
  for (int i = 1; i <= deadline; ++i)
    for (NodeIndex u : at[i - 1])
      for (NodeIndex v : at[i])
        if (u != v)
          if (auto t = inst.edge_time(u, v)) total += *t;
  if (slack && total + *slack != deadline)
    add_violation(result, "H3", "route time " + std::to_string(total) + " plus slack " +
                                    std::to_string(*slack) + " differs from deadline");
  if (!slack && total > deadline)
    add_violation(result, "H3", "route time " + std::to_string(total) + " exceeds deadline");
  if (!result.violations.empty()) return result;

  std::vector<NodeIndex> path;
  for (int i = 0; i <= deadline; ++i) path.push_back(at[i].front());
  Route route{std::move(path)};
  RouteCheck check = is_feasible(route, inst);
  if (!check.feasible) {
    for (auto& v : check.violations) result.violations.push_back(std::move(v));
    return result;
  }
  result.route = std::move(route);
  return result;
}

}  // namespace

DecodeResult decode(std::span<const std::uint8_t> bits, const Formulation& f) {
  if (bits.size() != f.qubit_count())
    throw InvalidInput("assignment has " + std::to_string(bits.size()) + " bits, expected " +
                       std::to_string(f.qubit_count()));
  DecodeResult r = f.kind() == FormKind::qubo ? decode_qubo(bits, f) : decode_hubo(bits, f);
  // Report in the documented constraint order.
  const std::string p = f.kind() == FormKind::qubo ? "Q" : "H";
  const std::vector<std::string> order{p + "2", p + "4", p + "1", p + "5", p + "3"};
  std::stable_sort(r.violations.begin(), r.violations.end(), [&](const Violation& x, const Violation& y) {
    auto rank = [&](const Violation& v) {
      auto it = std::find(order.begin(), order.end(), v.constraint);
      return it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
    };
    return rank(x) < rank(y);
  });
  return r;
}

DecodeResult decode(std::uint64_t bits, const Formulation& f) {
  auto assignment = to_assignment(bits, f.qubit_count());
  return decode(assignment, f);
}

std::optional<std::vector<std::uint8_t>> encode(const Route& route, const Formulation& f) {
  const auto& inst = f.instance();
  RouteCheck check = is_feasible(route, inst);
  if (!check.feasible) return std::nullopt;
  std::vector<std::uint8_t> bits(f.qubit_count(), 0);
  const auto& p = route.path;
  const int deadline = inst.deadline();
  long total = 0;
  for (int i = 1; i <= deadline; ++i) {
    total += *inst.edge_time(p[i - 1], p[i]);
    if (f.kind() == FormKind::qubo) {
      auto q = f.registry().find(VarId::edge(p[i - 1], p[i], i));
      if (!q) return std::nullopt;
      bits[*q] = 1;
    } else if (i < deadline) {
      auto q = f.registry().find(VarId::node(p[i], i));
      if (!q) return std::nullopt;
      bits[*q] = 1;
    }
  }
  bits[*f.registry().find(VarId::slack(static_cast<int>(deadline - total)))] = 1;
  return bits;
}

std::string registry_json(const Formulation& f) {
  using nlohmann::json;
  json doc;
  doc["kind"] = to_string(f.kind());
  doc["alpha"] = f.alpha();
  doc["dropped_constant"] = f.dropped_constant();
  doc["qubits"] = f.qubit_count();
  doc["variables"] = json::array();
  const auto& inst = f.instance();
  for (std::uint32_t q = 0; q < f.qubit_count(); ++q) {
    const VarId& id = f.registry().id(q);
    json v{{"index", q}, {"name", f.registry().name(q)}};
    switch (id.kind) {
      case VarKind::qubo_edge:
        v["type"] = "edge";
        v["u"] = inst.name(id.u);
        v["v"] = inst.name(id.v);
        v["step"] = id.step;
        break;
      case VarKind::hubo_node:
        v["type"] = "position";
        v["node"] = inst.name(id.u);
        v["step"] = id.step;
        break;
      case VarKind::slack:
        v["type"] = "slack";
        v["j"] = id.step;
        break;
    }
    doc["variables"].push_back(std::move(v));
  }
  return doc.dump(2) + "\n";
}

}  // namespace arpq
