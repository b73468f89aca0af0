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

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arpq/poly.hpp"
#include "arpq/problem.hpp"

namespace arpq {

enum class FormKind { qubo, hubo };

std::string to_string(FormKind kind);
FormKind parse_form_kind(std::string_view text);

/// A route p_0 .. p_T with exactly deadline + 1 positions; time spent waiting
/// at the end node is free.
struct Route {
  std::vector<NodeIndex> path;
  friend bool operator==(const Route&, const Route&) = default;
};

struct Violation {
  std::string constraint;  // "Q1".."Q5", "H1".."H5", or a route rule name
  std::string detail;
};

struct RouteCheck {
  bool feasible = true;
  std::vector<Violation> violations;
};

/// Structural route check on the (completed) instance: starts at the start
/// node, ends at the end node, uses existing edges, never returns to the start,
/// never leaves the end, visits each internal node at most once and finishes
/// within the deadline. Violation names: "length", "start", "end", "edge",
/// "revisit-start", "leave-end", "visit-once", "time".
RouteCheck is_feasible(const Route& route, const ProblemInstance& instance);

/// Minus the total asset value of the distinct internal nodes visited.
/// Throws InvalidInput for infeasible routes.
double route_objective(const Route& route, const ProblemInstance& instance);

/// Pads a route that reaches the end node early with waits at the end node.
Route pad_route(std::vector<NodeIndex> path, const ProblemInstance& instance);
std::string route_to_string(const Route& route, const ProblemInstance& instance);

/// 0.75 * max internal asset value, or 1.0 when every asset value is zero.
double default_penalty(const ProblemInstance& instance);

/// A QUBO or HUBO for one instance. `poly()` is the full penalised objective
/// with its constant removed; `dropped_constant()` holds that constant so that
/// poly(b) + dropped_constant() equals the undropped value. The six labelled
/// parts (objective and five constraints) are kept unscaled and with their
/// constants for diagnostics.
class Formulation {
 public:
  static constexpr std::size_t kParts = 6;

  FormKind kind() const { return kind_; }
  const PBPoly& poly() const { return poly_; }
  const PBPoly& part(std::size_t k) const { return parts_.at(k); }
  std::string part_label(std::size_t k) const;
  const VarRegistry& registry() const { return *registry_; }
  const RegistryPtr& registry_ptr() const { return registry_; }
  double alpha() const { return alpha_; }
  double dropped_constant() const { return dropped_constant_; }
  const ProblemInstance& instance() const { return *instance_; }
  std::size_t qubit_count() const { return registry_->size(); }

 private:
  friend Formulation build_qubo(const ProblemInstance&, const FeasibilityMask&, double);
  friend Formulation build_hubo(const ProblemInstance&, const FeasibilityMask&, double);

  FormKind kind_ = FormKind::qubo;
  PBPoly poly_;
  std::array<PBPoly, kParts> parts_;
  RegistryPtr registry_;
  double alpha_ = 0.0;
  double dropped_constant_ = 0.0;
  std::shared_ptr<const ProblemInstance> instance_;
};

/// Edge-per-step formulation over the masked variables. Expects a completed
/// instance. Throws InfeasibleInstance when no route meets the deadline.
Formulation build_qubo(const ProblemInstance& completed, const FeasibilityMask& mask, double alpha);
/// Node-per-step formulation with quartic time terms. Same preconditions.
Formulation build_hubo(const ProblemInstance& completed, const FeasibilityMask& mask, double alpha);

/// Shortest paths, completion, pruning and construction in one call. Uses
/// default_penalty() when alpha is not given.
Formulation build_formulation(const ProblemInstance& instance, FormKind kind,
                              std::optional<double> alpha = std::nullopt);

/// Counts of variables before any reachability pruning:
///   QUBO: T * |N|^2 edge slots (ordered pairs, self-loops included) + T + 1 slacks
///   HUBO: (|I_n| + 1) * (T - 1) position slots + T + 1 slacks
std::size_t unpruned_variable_count(const ProblemInstance& instance, FormKind kind);

struct DecodeResult {
  std::optional<Route> route;
  std::vector<Violation> violations;

  bool feasible() const { return route.has_value(); }
  const Violation* first_violation() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

/// Reads a route back out of an assignment. When the assignment breaks a
/// constraint the result names every violated constraint, checked in the
/// order Q2/H2, Q4/H4, Q1/H1, Q5/H5, Q3/H3.
DecodeResult decode(std::span<const std::uint8_t> bits, const Formulation& f);
DecodeResult decode(std::uint64_t bits, const Formulation& f);

/// The assignment representing `route`, or nullopt if the route needs a
/// variable that was pruned. Slack z_j is set for j = T - route time.
std::optional<std::vector<std::uint8_t>> encode(const Route& route, const Formulation& f);

/// JSON registry: kind, alpha, dropped constant and one entry per qubit.
std::string registry_json(const Formulation& f);

}  // namespace arpq
