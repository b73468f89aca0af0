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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arpq/problem.hpp"

namespace arpq {

enum class VarKind { qubo_edge, hubo_node, slack };

/// Identity of a binary decision variable.
///   qubo_edge: traverse edge (u, v) at hop `step`
///   hubo_node: be at node u after hop `step`
///   slack:     one-hot slack z_j with j = `step`
struct VarId {
  VarKind kind = VarKind::slack;
  NodeIndex u = 0;
  NodeIndex v = 0;
  int step = 0;

  static VarId edge(NodeIndex u, NodeIndex v, int step) { return {VarKind::qubo_edge, u, v, step}; }
  static VarId node(NodeIndex u, int step) { return {VarKind::hubo_node, u, 0, step}; }
  static VarId slack(int j) { return {VarKind::slack, 0, 0, j}; }

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Dense bijection between registered variables and qubit indices 0..n-1.
class VarRegistry {
 public:
  std::uint32_t add(const VarId& id, std::string name);
  std::optional<std::uint32_t> find(const VarId& id) const;
  std::optional<std::uint32_t> find(std::string_view name) const;
  const VarId& id(std::uint32_t q) const { return ids_.at(q); }
  const std::string& name(std::uint32_t q) const { return names_.at(q); }
  std::size_t size() const { return ids_.size(); }

 private:
  std::vector<VarId> ids_;
  std::vector<std::string> names_;
  std::map<VarId, std::uint32_t> by_id_;
  std::map<std::string, std::uint32_t, std::less<>> by_name_;
};

using Monomial = std::vector<std::uint32_t>;  // strictly increasing variable indices
using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Multilinear pseudo-Boolean polynomial. x^2 = x is applied on insertion and
/// zero coefficients are never stored. The constant is kept apart from the
/// term map so it can be dropped and tracked.
class PBPoly {
 public:
  PBPoly() = default;
  explicit PBPoly(RegistryPtr registry) : registry_(std::move(registry)) {}

  static PBPoly constant(double c, RegistryPtr registry = nullptr);
  static PBPoly variable(std::uint32_t q, RegistryPtr registry = nullptr);

  /// Adds c * prod(vars). Repeated or unsorted indices are normalised.
  void add_term(Monomial vars, double c);
  void add_constant(double c) { constant_ += c; }

  const std::map<Monomial, double>& terms() const { return terms_; }
  double constant_term() const { return constant_; }
  double coefficient(const Monomial& m) const;
  std::size_t degree() const;
  bool is_zero() const { return terms_.empty() && constant_ == 0.0; }
  /// One past the largest variable index referenced (0 for constants).
  std::size_t variable_bound() const;
  const RegistryPtr& registry() const { return registry_; }

  PBPoly& operator+=(const PBPoly& other);
  PBPoly& operator-=(const PBPoly& other);
  PBPoly& operator*=(double c);
  friend PBPoly operator+(PBPoly a, const PBPoly& b) { return a += b; }
  friend PBPoly operator-(PBPoly a, const PBPoly& b) { return a -= b; }
  friend PBPoly operator*(PBPoly a, double c) { return a *= c; }
  friend PBPoly operator*(double c, PBPoly a) { return a *= c; }
  friend PBPoly operator*(const PBPoly& a, const PBPoly& b);
  friend bool operator==(const PBPoly& a, const PBPoly& b) {
    return a.terms_ == b.terms_ && a.constant_ == b.constant_;
  }

 private:
  friend RegistryPtr merged_registry(const PBPoly& a, const PBPoly& b);

  RegistryPtr registry_;
  std::map<Monomial, double> terms_;
  double constant_ = 0.0;
};

PBPoly add(const PBPoly& p, const PBPoly& q);
PBPoly scale(const PBPoly& p, double c);
PBPoly multiply(const PBPoly& p, const PBPoly& q);
/// Returns p without its constant, and the constant that was removed.
std::pair<PBPoly, double> drop_constant(const PBPoly& p);
/// Fixes variable q to `bit` and eliminates it.
PBPoly substitute(const PBPoly& p, std::uint32_t q, bool bit);
/// Exact evaluation; assignment[q] is the value of variable q. Throws
/// InvalidInput if a referenced variable is missing.
double evaluate(const PBPoly& p, std::span<const std::uint8_t> assignment);

/// Ising form over z_i = 2 x_i - 1 in {-1, +1}.
class SpinPoly {
 public:
  SpinPoly() = default;
  explicit SpinPoly(std::size_t width) : width_(width) {}

  void add_term(Monomial qubits, double c);
  void add_constant(double c) { constant_ += c; }
  const std::map<Monomial, double>& terms() const { return terms_; }
  double constant_term() const { return constant_; }
  std::size_t degree() const;
  std::size_t width() const { return width_; }

  friend bool operator==(const SpinPoly&, const SpinPoly&) = default;

 private:
  std::size_t width_ = 0;
  std::map<Monomial, double> terms_;
  double constant_ = 0.0;
};

/// Substitutes x_i = (1 + z_i) / 2 and reduces with z_i^2 = 1. `width` is the
/// qubit count; it defaults to the polynomial's variable bound.
SpinPoly to_spin(const PBPoly& p, std::optional<std::size_t> width = std::nullopt);
/// spins[q] must be -1 or +1.
double evaluate_spin(const SpinPoly& s, std::span<const std::int8_t> spins);

/// Term list with bit masks for fast evaluation on integer bitstrings
/// (bit q of the integer is variable q). Limited to 64 variables.
class CompiledPoly {
 public:
  explicit CompiledPoly(const PBPoly& p);
  double operator()(std::uint64_t bits) const;
  std::span<const std::pair<std::uint64_t, double>> terms() const { return terms_; }
  double constant_term() const { return constant_; }

 private:
  std::vector<std::pair<std::uint64_t, double>> terms_;
  double constant_;
};

/// E[b] = p(b) for every b in [0, 2^width), via a subset-sum transform.
std::vector<double> energy_table(const PBPoly& p, std::size_t width);

/// Bit q of `bits` as an assignment vector of length `width`.
std::vector<std::uint8_t> to_assignment(std::uint64_t bits, std::size_t width);
std::uint64_t from_assignment(std::span<const std::uint8_t> assignment);
/// Most significant qubit first, so qubit 0 is the last character.
std::string bitstring(std::uint64_t bits, std::size_t width);

/// One term per line, "coeff * name1 name2 ...", constant as a bare number.
/// Names come from the registry, or "q<i>" for registry-free polynomials.
std::string to_text(const PBPoly& p);
PBPoly parse_poly_text(std::string_view text, RegistryPtr registry = nullptr);

}  // namespace arpq
