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

#include "arpq/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "arpq/error.hpp"

namespace arpq {

namespace {

constexpr double kTie = 1e-9;
constexpr std::uint64_t kResync = 1ULL << 16;

struct Term {
  std::uint64_t others;
  double coeff;
};

}  // namespace

OracleResult brute_force_min(const PBPoly& p, std::size_t width) {
  if (width > kBruteForceMaxQubits)
    throw WidthCapExceeded("brute force limited to " + std::to_string(kBruteForceMaxQubits) +
                           " qubits, got " + std::to_string(width));
  if (p.variable_bound() > width) throw InvalidInput("polynomial uses variables beyond the width");
  const CompiledPoly exact(p);

  std::vector<std::vector<Term>> touching(width);
  for (const auto& [mono, coeff] : p.terms()) {
    std::uint64_t mask = 0;
    for (auto q : mono) mask |= 1ULL << q;
    for (auto q : mono) touching[q].push_back({mask & ~(1ULL << q), coeff});
  }

  std::uint64_t state = 0;
  double value = exact(0);
  OracleResult r;
  r.assignment = 0;
  r.value = value;
  r.tie_count = 1;
  r.feasible = true;

  const std::uint64_t total = 1ULL << width;
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto q = static_cast<std::size_t>(std::countr_zero(k));
    double delta = 0.0;
    for (const Term& t : touching[q])
      if ((state & t.others) == t.others) delta += t.coeff;
    state ^= 1ULL << q;
    value += (state >> q & 1) ? delta : -delta;
    if (k % kResync == 0) value = exact(state);

    if (value <= r.value + 1e-6) {
      const double v = exact(state);
      if (v < r.value - kTie) {
        r.value = v;
        r.assignment = state;
        r.tie_count = 1;
      } else if (std::abs(v - r.value) <= kTie) {
        ++r.tie_count;
        if (state < *r.assignment) r.assignment = state;
      }
      value = v;
    }
  }
  return r;
}

OracleResult brute_force_min(const Formulation& f) {
  OracleResult r = brute_force_min(f.poly(), f.qubit_count());
  DecodeResult d = decode(*r.assignment, f);
  r.feasible = d.feasible();
  r.route = d.route;
  r.violations = std::move(d.violations);
  return r;
}

namespace {

void extend(const ProblemInstance& g, std::vector<NodeIndex>& path, std::vector<bool>& visited, int time,
            std::vector<Route>& out) {
  const NodeIndex end = g.end();
  const int deadline = g.deadline();
  const NodeIndex u = path.back();
  const auto hops = static_cast<int>(path.size()) - 1;
  if (hops >= deadline) return;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (v == g.start() || v == u) continue;
    const auto t = g.edge_time(u, v);
    if (!t || time + *t > deadline) continue;
    if (v == end) {
      std::vector<NodeIndex> full = path;
      full.push_back(end);
      out.push_back(pad_route(std::move(full), g));
      continue;
    }
    if (visited[v]) continue;
    visited[v] = true;
    path.push_back(v);
    extend(g, path, visited, time + *t, out);
    path.pop_back();
    visited[v] = false;
  }
}

}  // namespace

std::vector<Route> feasible_routes(const ProblemInstance& completed) {
  std::vector<Route> out;
  std::vector<NodeIndex> path{completed.start()};
  std::vector<bool> visited(completed.node_count(), false);
  extend(completed, path, visited, 0, out);
  return out;
}

OracleResult enumerate_routes(const ProblemInstance& completed) {
  OracleResult r;
  for (Route& route : feasible_routes(completed)) {
    const double v = route_objective(route, completed);
    if (!r.feasible || v < r.value - kTie) {
      r.feasible = true;
      r.value = v;
      r.route = std::move(route);
      r.tie_count = 1;
    } else if (std::abs(v - r.value) <= kTie) {
      ++r.tie_count;
    }
  }
  return r;
}

}  // namespace arpq
