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
#include <functional>
#include <span>
#include <vector>

namespace arpq {

struct NelderMeadOptions {
  std::size_t max_evaluations = 150;
  double initial_step = 0.1;
  /// Stop once |f_k - f_{k-1}| / |f_{k-1}| stays below this for
  /// `stall_window` consecutive evaluations.
  double relative_tolerance = 1e-4;
  std::size_t stall_window = 5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Downhill simplex minimisation. Deterministic: the only source of variation
/// is the objective itself. Never calls the objective more than
/// `max_evaluations` times.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace arpq
