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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace arpq {

using NodeIndex = std::size_t;

struct NodeSpec {
  std::string id;
  double asset_value = 0.0;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  int time = 0;
};

struct Edge {
  NodeIndex u;
  NodeIndex v;
  int time;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An asset retrieval instance: an undirected graph with a start node, an end
/// node, asset-bearing internal nodes, integer traversal times and a deadline.
///
/// Nodes are indexed densely: the start is 0, internal nodes are 1..n in the
/// order they were given, and the end is n+1. The end node carries an
/// implicit zero-time self-loop for waiting.
class ProblemInstance {
 public:
  /// Validates and builds an instance. Throws InvalidInput on duplicate or
  /// unknown node ids, non-positive edge times, non-zero start/end values,
  /// negative asset values, a non-positive deadline or a disconnected graph.
  static ProblemInstance create(const std::vector<NodeSpec>& nodes,
                                std::string_view start, std::string_view end,
                                const std::vector<EdgeSpec>& edges,
                                int deadline);

  std::size_t node_count() const { return names_.size(); }
  std::size_t internal_count() const { return names_.size() - 2; }
  NodeIndex start() const { return 0; }
  NodeIndex end() const { return names_.size() - 1; }
  bool is_internal(NodeIndex u) const { return u > 0 && u + 1 < names_.size(); }
  std::vector<NodeIndex> internal_nodes() const;

  const std::string& name(NodeIndex u) const { return names_.at(u); }
  std::optional<NodeIndex> find(std::string_view id) const;
  double asset_value(NodeIndex u) const { return values_.at(u); }
  double max_asset_value() const;
  int deadline() const { return deadline_; }

  /// Traversal time of the undirected edge {u, v}; 0 for the end self-loop.
  std::optional<int> edge_time(NodeIndex u, NodeIndex v) const;
  bool has_edge(NodeIndex u, NodeIndex v) const { return edge_time(u, v).has_value(); }
  /// Edges with u < v; the end self-loop is not listed.
  std::vector<Edge> edges() const;

  ProblemInstance with_deadline(int deadline) const;
  ProblemInstance with_edges(const std::vector<Edge>& edges) const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  ProblemInstance() = default;
  void validate() const;

  std::vector<std::string> names_;
  std::vector<double> values_;
  std::vector<int> times_;  // row-major node_count x node_count, 0 = no edge
  int deadline_ = 0;
};

/// All-pairs shortest traversal times.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}
  int operator()(NodeIndex u, NodeIndex v) const { return dist_.at(u * n_ + v); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<int> dist_;
};

/// Variables that survive the reachability pruning. Steps are hop indices.
struct FeasibilityMask {
  std::set<std::pair<NodeIndex, int>> hubo_allowed;             // (u, i)
  std::set<std::tuple<NodeIndex, NodeIndex, int>> qubo_allowed;  // (u, v, i)

  bool allows(NodeIndex u, int step) const { return hubo_allowed.count({u, step}) > 0; }
  bool allows(NodeIndex u, NodeIndex v, int step) const {
    return qubo_allowed.count({u, v, step}) > 0;
  }
};

/// Dijkstra from every node. Throws InvalidInput naming an unreachable node.
DistanceTable shortest_paths(const ProblemInstance& instance);

/// Metric closure: every pair of distinct nodes gets an edge whose time is the
/// shortest-path time between them.
ProblemInstance complete_internal_graph(const ProblemInstance& instance,
                                        const DistanceTable& dist);

/// Removes (node, step) and (edge, step) variables that no route meeting the
/// deadline can use. Expects a completed instance.
FeasibilityMask prune_variables(const ProblemInstance& instance, const DistanceTable& dist);

/// Whether the end node is reachable within the deadline at all.
bool has_feasible_route(const ProblemInstance& instance, const DistanceTable& dist);

}  // namespace arpq
