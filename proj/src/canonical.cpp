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

#include "arpq/canonical.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arpq/error.hpp"

namespace arpq {

namespace {

// Integer draws by rejection sampling on raw mt19937_64 output.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

std::vector<NodeSpec> node_specs(const std::vector<double>& internal_values) {
  std::vector<NodeSpec> nodes{{"A", 0}};
  for (std::size_t k = 0; k < internal_values.size(); ++k)
    nodes.push_back({std::to_string(k + 1), internal_values[k]});
  nodes.push_back({"B", 0});
  return nodes;
}

std::optional<ProblemInstance> attempt(const GenParams& g, std::uint64_t seed) {
  Draw draw(seed);
  const int n = g.internal_nodes;
  const int total = n + 2;
  std::vector<double> values;
  for (int k = 0; k < n; ++k) values.push_back(draw.integer(g.value_min, g.value_max));
  auto name = [&](int u) { return u == 0 ? std::string("A") : u == total - 1 ? std::string("B") : std::to_string(u); };

  // Random spanning tree over a random ordering with A first, then extra edges.
  std::vector<int> order{0};
  std::vector<int> rest;
  for (int u = 1; u < total; ++u) rest.push_back(u);
  while (!rest.empty()) {
    const auto k = static_cast<std::size_t>(draw.integer(0, static_cast<int>(rest.size()) - 1));
    order.push_back(rest[k]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::vector<std::vector<bool>> joined(total, std::vector<bool>(total, false));
  std::vector<EdgeSpec> edges;
  auto join = [&](int u, int v) {
    joined[u][v] = joined[v][u] = true;
    edges.push_back({name(u), name(v), draw.integer(g.time_min, g.time_max)});
  };
  for (std::size_t k = 1; k < order.size(); ++k) {
    int parent = order[static_cast<std::size_t>(draw.integer(0, static_cast<int>(k) - 1))];
    const int child = order[k];
    if ((parent == 0 && child == total - 1) || (parent == total - 1 && child == 0)) parent = order[k - 1];
    if ((parent == 0 && child == total - 1) || (parent == total - 1 && child == 0)) return std::nullopt;
    join(parent, child);
  }
  for (int u = 0; u < total; ++u)
    for (int v = u + 1; v < total; ++v) {
      if (joined[u][v] || (u == 0 && v == total - 1)) continue;
      if (draw.unit() < g.edge_probability) join(u, v);
    }

  ProblemInstance inst = ProblemInstance::create(node_specs(values), "A", "B", edges, g.deadline);
  if (!has_feasible_route(inst, shortest_paths(inst))) return std::nullopt;
  return inst;
}

struct Canonical {
  std::vector<double> values;
  std::vector<EdgeSpec> edges;
  int deadline;
};

const Canonical kCanonical[kCanonicalCount] = {
    {{40, 60},
     {{"A", "1", 1}, {"A", "2", 2}, {"1", "2", 1}, {"1", "B", 2}, {"2", "B", 1}},
     4},
    {{30, 50, 70},
     {{"A", "1", 1}, {"A", "2", 2}, {"1", "2", 1}, {"2", "3", 2}, {"1", "3", 3}, {"3", "B", 1}, {"2", "B", 2}},
     5},
    {{30, 50, 70},
     {{"A", "1", 1}, {"A", "2", 2}, {"1", "2", 1}, {"2", "3", 2}, {"1", "3", 3}, {"3", "B", 1}, {"2", "B", 2}},
     6},
    {{20, 45, 60, 80},
     {{"A", "1", 1}, {"1", "2", 1}, {"2", "3", 1}, {"3", "4", 1}, {"4", "B", 2}, {"A", "3", 3}, {"2", "B", 4}},
     6},
};

}  // namespace

ProblemInstance generate_instance(const GenParams& g) {
  if (g.internal_nodes < 1) throw InvalidInput("internal_nodes must be at least 1");
  if (g.deadline < 1) throw InvalidInput("deadline must be at least 1");
  if (g.value_min < 0 || g.value_max < g.value_min) throw InvalidInput("invalid value range");
  if (g.time_min < 1 || g.time_max < g.time_min) throw InvalidInput("invalid time range");
  if (!(g.edge_probability >= 0.0 && g.edge_probability <= 1.0))
    throw InvalidInput("edge_probability must lie in [0, 1]");
  std::uint64_t seed = g.seed;
  for (int tries = 0; tries < 1000; ++tries) {
    if (auto inst = attempt(g, seed)) return *std::move(inst);
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  }
  throw InfeasibleInstance("no generated instance reaches the end within the deadline");
}

ProblemInstance canonical_instance(int index) {
  if (index < 1 || index > kCanonicalCount)
    throw InvalidInput("canonical instances are numbered 1.." + std::to_string(kCanonicalCount));
  const Canonical& c = kCanonical[index - 1];
  return ProblemInstance::create(node_specs(c.values), "A", "B", c.edges, c.deadline);
}

}  // namespace arpq
