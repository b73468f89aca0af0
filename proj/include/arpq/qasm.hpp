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

#include <span>
#include <string>
#include <string_view>

#include "arpq/circuit.hpp"

namespace arpq {

/// OpenQASM 2.0 text using h, rz, rx and cx on a single register q. Every
/// parameter must be bound through `params`. Qubit 0 is the least significant
/// bit of a measured bitstring.
std::string export_qasm(const Circuit& c, std::span<const double> params = {});

/// Reads the subset written by export_qasm (comments, `creg`, `barrier` and
/// `measure` lines are skipped). Angles are decimal literals, optionally
/// written as multiples or fractions of `pi`.
Circuit parse_qasm(std::string_view text);

}  // namespace arpq
