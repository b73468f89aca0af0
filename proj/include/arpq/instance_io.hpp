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

#include <filesystem>
#include <string>

#include "arpq/problem.hpp"

namespace arpq {

/// Parses the JSON instance format:
///   {"nodes": [{"id": "A", "asset_value": 0}, ...], "start": "A", "end": "B",
///    "edges": [{"u": "A", "v": "1", "time": 2}, ...], "deadline": 4}
/// Unknown keys are rejected.
ProblemInstance parse_instance(const std::string& text);
ProblemInstance load_instance(const std::filesystem::path& path);

/// Serializes the instance as given (start first, then internal nodes, then
/// end; edges with u < v). Output is stable for identical instances.
std::string dump_instance(const ProblemInstance& instance);
void save_instance(const ProblemInstance& instance, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace arpq
