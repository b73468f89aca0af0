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

#include "arpq/problem.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "arpq/error.hpp"

namespace arpq {

namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == '[' ||
           c == ']' || c == '*';
  });
}

constexpr int kUnreachable = std::numeric_limits<int>::max();

}  // namespace

ProblemInstance ProblemInstance::create(const std::vector<NodeSpec>& nodes,
                                        std::string_view start, std::string_view end,
                                        const std::vector<EdgeSpec>& edges, int deadline) {
  if (start == end) throw InvalidInput("start and end must be distinct nodes");
  ProblemInstance inst;
  const NodeSpec* start_spec = nullptr;
  const NodeSpec* end_spec = nullptr;
  std::vector<const NodeSpec*> internal;
  for (const auto& node : nodes) {
    if (!valid_id(node.id)) throw InvalidInput("invalid node id '" + node.id + "'");
    for (const auto& other : nodes)
      if (&other != &node && other.id == node.id)
        throw InvalidInput("duplicate node id '" + node.id + "'");
    if (node.id == start) {
      start_spec = &node;
    } else if (node.id == end) {
      end_spec = &node;
    } else {
      internal.push_back(&node);
    }
  }
  if (start_spec == nullptr) throw InvalidInput("start node '" + std::string(start) + "' not listed");
  if (end_spec == nullptr) throw InvalidInput("end node '" + std::string(end) + "' not listed");

  inst.names_.push_back(start_spec->id);
  inst.values_.push_back(start_spec->asset_value);
  for (const NodeSpec* n : internal) {
    inst.names_.push_back(n->id);
    inst.values_.push_back(n->asset_value);
  }
  inst.names_.push_back(end_spec->id);
  inst.values_.push_back(end_spec->asset_value);

  const std::size_t n = inst.names_.size();
  inst.times_.assign(n * n, 0);
  for (const auto& e : edges) {
    auto u = inst.find(e.u);
    auto v = inst.find(e.v);
    if (!u) throw InvalidInput("edge references unknown node '" + e.u + "'");
    if (!v) throw InvalidInput("edge references unknown node '" + e.v + "'");
    if (*u == *v) throw InvalidInput("self-loop on node '" + e.u + "' is not allowed");
    if (e.time < 1)
      throw InvalidInput("edge " + e.u + "-" + e.v + " must have a positive integer time");
    int& slot = inst.times_[*u * n + *v];
    if (slot != 0) throw InvalidInput("duplicate edge " + e.u + "-" + e.v);
    slot = e.time;
    inst.times_[*v * n + *u] = e.time;
  }
  inst.deadline_ = deadline;
  inst.validate();
  return inst;
}

void ProblemInstance::validate() const {
  if (deadline_ < 1) throw InvalidInput("deadline must be a positive integer");
  if (values_.front() != 0.0 || values_.back() != 0.0)
    throw InvalidInput("start and end nodes must have asset value 0");
  for (std::size_t u = 0; u < values_.size(); ++u)
    if (!(values_[u] >= 0.0)) throw InvalidInput("asset value of '" + names_[u] + "' is negative");
  // Connectivity.
  const std::size_t n = node_count();
  std::vector<bool> seen(n, false);
  std::vector<NodeIndex> stack{start()};
  seen[start()] = true;
  while (!stack.empty()) {
    NodeIndex u = stack.back();
    stack.pop_back();
    for (NodeIndex v = 0; v < n; ++v)
      if (!seen[v] && times_[u * n + v] > 0) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  for (NodeIndex v = 0; v < n; ++v)
    if (!seen[v]) throw InvalidInput("graph is disconnected: unreachable node '" + names_[v] + "'");
}

std::vector<NodeIndex> ProblemInstance::internal_nodes() const {
  std::vector<NodeIndex> out;
  for (NodeIndex u = 1; u + 1 < node_count(); ++u) out.push_back(u);
  return out;
}

std::optional<NodeIndex> ProblemInstance::find(std::string_view id) const {
  for (NodeIndex u = 0; u < names_.size(); ++u)
    if (names_[u] == id) return u;
  return std::nullopt;
}

double ProblemInstance::max_asset_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

std::optional<int> ProblemInstance::edge_time(NodeIndex u, NodeIndex v) const {
  const std::size_t n = node_count();
  if (u >= n || v >= n) return std::nullopt;
  if (u == v) {
    if (u == end()) return 0;
    return std::nullopt;
  }
  int t = times_[u * n + v];
  if (t == 0) return std::nullopt;
  return t;
}

std::vector<Edge> ProblemInstance::edges() const {
  std::vector<Edge> out;
  const std::size_t n = node_count();
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = u + 1; v < n; ++v)
      if (times_[u * n + v] > 0) out.push_back({u, v, times_[u * n + v]});
  return out;
}

ProblemInstance ProblemInstance::with_deadline(int deadline) const {
  ProblemInstance copy = *this;
  copy.deadline_ = deadline;
  copy.validate();
  return copy;
}

ProblemInstance ProblemInstance::with_edges(const std::vector<Edge>& edges) const {
  ProblemInstance copy = *this;
  const std::size_t n = node_count();
  std::fill(copy.times_.begin(), copy.times_.end(), 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v || e.time < 1)
      throw InvalidInput("invalid edge in replacement edge set");
    copy.times_[e.u * n + e.v] = e.time;
    copy.times_[e.v * n + e.u] = e.time;
  }
  copy.validate();
  return copy;
}

DistanceTable shortest_paths(const ProblemInstance& instance) {
  const std::size_t n = instance.node_count();
  std::vector<int> dist(n * n, kUnreachable);
  using Item = std::pair<int, NodeIndex>;
  for (NodeIndex src = 0; src < n; ++src) {
    int* row = &dist[src * n];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    row[src] = 0;
    queue.push({0, src});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > row[u]) continue;
      for (NodeIndex v = 0; v < n; ++v) {
        if (v == u) continue;
        auto t = instance.edge_time(u, v);
        if (!t) continue;
        if (d + *t < row[v]) {
          row[v] = d + *t;
          queue.push({row[v], v});
        }
      }
    }
    for (NodeIndex v = 0; v < n; ++v)
      if (row[v] == kUnreachable)
        throw InvalidInput("unreachable node '" + instance.name(v) + "' from '" +
                           instance.name(src) + "'");
  }
  return DistanceTable(n, std::move(dist));
}

ProblemInstance complete_internal_graph(const ProblemInstance& instance,
                                        const DistanceTable& dist) {
  std::vector<Edge> edges;
  const std::size_t n = instance.node_count();
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = u + 1; v < n; ++v) {
      int t = dist(u, v);
      if (auto existing = instance.edge_time(u, v)) t = std::min(t, *existing);
      edges.push_back({u, v, t});
    }
  return instance.with_edges(edges);
}

bool has_feasible_route(const ProblemInstance& instance, const DistanceTable& dist) {
  return dist(instance.start(), instance.end()) <= instance.deadline();
}

FeasibilityMask prune_variables(const ProblemInstance& instance, const DistanceTable& dist) {
  FeasibilityMask mask;
  const int deadline = instance.deadline();
  const NodeIndex a = instance.start();
  const NodeIndex b = instance.end();
  const int internal = static_cast<int>(instance.internal_count());
  if (!has_feasible_route(instance, dist)) return mask;

  // Being at u after i hops means at least i time units and at least
  // dist(A, u) have elapsed, and the i-1 earlier positions were distinct
  // internal nodes.
  auto position_ok = [&](NodeIndex u, int i) {
    if (i < 1 || i > deadline - 1) return false;
    if (i == 1 && !instance.has_edge(a, u)) return false;
    if (u == b) return true;
    if (!instance.is_internal(u) || i > internal) return false;
    return std::max(i, dist(a, u)) + dist(u, b) <= deadline;
  };

  for (NodeIndex u = 1; u < instance.node_count(); ++u)
    for (int i = 1; i <= deadline - 1; ++i)
      if (position_ok(u, i)) mask.hubo_allowed.insert({u, i});

  for (int i = 1; i <= deadline; ++i) {
    if (i >= 2 && position_ok(b, i - 1)) mask.qubo_allowed.insert({b, b, i});
    for (NodeIndex u = 0; u < instance.node_count(); ++u) {
      if (u == b) continue;
      if (i == 1 ? u != a : !position_ok(u, i - 1)) continue;
      for (NodeIndex v = 1; v < instance.node_count(); ++v) {
        if (v == u) continue;
        auto t = instance.edge_time(u, v);
        if (!t) continue;
        if (v != b && !position_ok(v, i)) continue;
        if (std::max(i - 1, dist(a, u)) + *t + dist(v, b) > deadline) continue;
        mask.qubo_allowed.insert({u, v, i});
      }
    }
  }
  return mask;
}

}  // namespace arpq
