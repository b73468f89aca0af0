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
#include <optional>
#include <vector>

#include "arpq/formulation.hpp"
#include "arpq/poly.hpp"
#include "arpq/problem.hpp"

namespace arpq {

/// Widest polynomial brute_force_min accepts.
inline constexpr std::size_t kBruteForceMaxQubits = 24;

struct OracleResult {
  std::optional<std::uint64_t> assignment;  // bitstring searches only
  std::optional<Route> route;
  double value = 0.0;
  bool feasible = false;
  std::uint64_t tie_count = 0;
  std::vector<Violation> violations;  // decoding failures of the minimiser
};

/// Exact minimum of `p` over all 2^width assignments. `assignment` is the
/// smallest minimising bitstring; `feasible` is always true. Throws
/// WidthCapExceeded above kBruteForceMaxQubits.
OracleResult brute_force_min(const PBPoly& p, std::size_t width);

/// Minimises f.poly() (constant dropped) and decodes the minimiser.
/// `feasible` reports whether it decodes to a valid route.
OracleResult brute_force_min(const Formulation& f);

/// Every feasible route of a completed instance in lexicographic order.
std::vector<Route> feasible_routes(const ProblemInstance& completed);

/// Best route by route_objective (lexicographically smallest among ties).
/// When no route exists `feasible` is false and `route` is empty.
OracleResult enumerate_routes(const ProblemInstance& completed);

}  // namespace arpq
