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

#include <cstdint>

#include "arpq/problem.hpp"

namespace arpq {

struct GenParams {
  int internal_nodes = 2;
  int deadline = 4;
  std::uint64_t seed = 0;
  int value_min = 1;
  int value_max = 100;
  int time_min = 1;
  int time_max = 3;
  /// Chance of each non-tree edge between two nodes (the start-end pair is
  /// never joined directly).
  double edge_probability = 0.5;
};

/// Random connected instance with nodes "A", "1".."n", "B". Redraws (with a
/// derived seed) until the end is reachable within the deadline; throws
/// InfeasibleInstance after 1000 attempts and InvalidInput for bad ranges.
/// Output depends only on the parameters.
ProblemInstance generate_instance(const GenParams& params);

inline constexpr int kCanonicalCount = 4;

/// Shipped benchmark instances 1..4 with (internal nodes, deadline) shapes
/// (2, 4), (3, 5), (3, 6) and (4, 6).
ProblemInstance canonical_instance(int index);

}  // namespace arpq
