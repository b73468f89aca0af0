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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "arpq/formulation.hpp"
#include "arpq/poly.hpp"
#include "arpq/problem.hpp"

namespace arpq::testing {

struct E {
  std::string u, v;
  int t;
};

// Nodes "A", "1".."n", "B"; values are for the internal nodes.
inline ProblemInstance make_instance(const std::vector<double>& values, const std::vector<E>& edges, int deadline) {
  std::vector<NodeSpec> nodes{{"A", 0}};
  for (std::size_t k = 0; k < values.size(); ++k) nodes.push_back({std::to_string(k + 1), values[k]});
  nodes.push_back({"B", 0});
  std::vector<EdgeSpec> es;
  for (const auto& e : edges) es.push_back({e.u, e.v, e.t});
  return ProblemInstance::create(nodes, "A", "B", es, deadline);
}

inline ProblemInstance completed(const ProblemInstance& inst) {
  return complete_internal_graph(inst, shortest_paths(inst));
}

// All-pairs shortest times by Floyd-Warshall over the raw edge list.
inline std::vector<std::vector<long>> floyd_warshall(const ProblemInstance& inst) {
  const std::size_t n = inst.node_count();
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t u = 0; u < n; ++u) d[u][u] = 0;
  for (const auto& e : inst.edges()) d[e.u][e.v] = d[e.v][e.u] = std::min<long>(d[e.u][e.v], e.time);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Every node sequence of length T+1 accepted by is_feasible, found by
// exhaustive enumeration of |N|^(T+1) sequences.
inline std::vector<Route> all_routes_naive(const ProblemInstance& inst) {
  const std::size_t n = inst.node_count();
  const auto len = static_cast<std::size_t>(inst.deadline()) + 1;
  std::vector<Route> out;
  std::vector<NodeIndex> path(len, 0);
  while (true) {
    Route r{path};
    if (is_feasible(r, inst).feasible) out.push_back(r);
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++path[k] < n) break;
      path[k] = 0;
      if (k == 0) return out;
    }
  }
}

// Direct term-by-term evaluation without masks or tables.
inline double naive_eval(const PBPoly& p, std::uint64_t bits) {
  double v = p.constant_term();
  for (const auto& [mono, c] : p.terms()) {
    double prod = c;
    for (auto q : mono) prod *= static_cast<double>((bits >> q) & 1);
    v += prod;
  }
  return v;
}

inline PBPoly random_poly(std::mt19937_64& rng, std::size_t n, std::size_t max_degree, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> deg(1, max_degree);
  std::uniform_int_distribution<std::uint32_t> var(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  PBPoly p;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m;
    const std::size_t d = std::min(deg(rng), n);
    while (m.size() < d) {
      const auto q = var(rng);
      if (std::find(m.begin(), m.end(), q) == m.end()) m.push_back(q);
    }
    p.add_term(m, coeff(rng));
  }
  p.add_constant(coeff(rng));
  return p;
}

// A-1-2-B path with a detour, two internal nodes.
inline ProblemInstance small_instance() {
  return make_instance({5, 7}, {{"A", "1", 1}, {"1", "2", 1}, {"2", "B", 1}, {"A", "2", 2}}, 3);
}

}  // namespace arpq::testing
