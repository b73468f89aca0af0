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

#include "arpq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "arpq/error.hpp"

namespace arpq {

namespace {

class Budget {
 public:
  Budget(const std::function<double(std::span<const double>)>& f, const NelderMeadOptions& opt)
      : f_(f), opt_(opt) {}

  std::optional<double> operator()(const std::vector<double>& x) {
    if (stopped()) return std::nullopt;
    const double v = f_(x);
    ++count_;
    if (count_ > 1) {
      const double scale = std::max(std::abs(last_), std::numeric_limits<double>::min());
      stall_ = std::abs(v - last_) / scale < opt_.relative_tolerance ? stall_ + 1 : 0;
    }
    last_ = v;
    if (v < best_value_) {
      best_value_ = v;
      best_x_ = x;
    }
    return v;
  }

  bool exhausted() const { return count_ >= opt_.max_evaluations; }
  bool stalled() const { return stall_ >= opt_.stall_window; }
  bool stopped() const { return exhausted() || stalled(); }
  std::size_t count() const { return count_; }
  const std::vector<double>& best_x() const { return best_x_; }
  double best_value() const { return best_value_; }

 private:
  const std::function<double(std::span<const double>)>& f_;
  const NelderMeadOptions& opt_;
  std::size_t count_ = 0;
  std::size_t stall_ = 0;
  double last_ = 0.0;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_x_;
};

std::vector<double> affine(const std::vector<double>& a, const std::vector<double>& b, double t) {
  // a + t (b - a)
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + t * (b[k] - a[k]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options) {
  if (start.empty()) throw InvalidInput("optimizer needs at least one parameter");
  if (options.max_evaluations < 1) throw InvalidInput("max_evaluations must be at least 1");
  const std::size_t dim = start.size();
  Budget eval(objective, options);

  std::vector<std::vector<double>> simplex{start};
  std::vector<double> values;
  if (auto v = eval(start)) values.push_back(*v);
  for (std::size_t k = 0; k < dim && !eval.stopped(); ++k) {
    std::vector<double> vertex = start;
    vertex[k] += options.initial_step;
    simplex.push_back(vertex);
    values.push_back(*eval(vertex));
  }

  while (simplex.size() == dim + 1 && !eval.stopped()) {
    std::vector<std::size_t> order(simplex.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<std::vector<double>> s;
      std::vector<double> v;
      for (std::size_t k : order) {
        s.push_back(simplex[k]);
        v.push_back(values[k]);
      }
      simplex = std::move(s);
      values = std::move(v);
    }

    double diameter = 0.0;
    for (std::size_t k = 1; k <= dim; ++k)
      for (std::size_t d = 0; d < dim; ++d) diameter = std::max(diameter, std::abs(simplex[k][d] - simplex[0][d]));
    if (diameter < 1e-12) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[k][d] / static_cast<double>(dim);

    const std::vector<double>& worst = simplex[dim];
    std::vector<double> reflected = affine(centroid, worst, -1.0);
    auto fr = eval(reflected);
    if (!fr) break;
    if (*fr < values[0]) {
      std::vector<double> expanded = affine(centroid, worst, -2.0);
      auto fe = eval(expanded);
      if (fe && *fe < *fr) {
        simplex[dim] = expanded;
        values[dim] = *fe;
      } else {
        simplex[dim] = reflected;
        values[dim] = *fr;
      }
      continue;
    }
    if (*fr < values[dim - 1]) {
      simplex[dim] = reflected;
      values[dim] = *fr;
      continue;
    }
    const bool outside = *fr < values[dim];
    std::vector<double> contracted = affine(centroid, worst, outside ? -0.5 : 0.5);
    auto fc = eval(contracted);
    if (!fc) break;
    if (*fc < (outside ? *fr : values[dim])) {
      simplex[dim] = contracted;
      values[dim] = *fc;
      continue;
    }
    for (std::size_t k = 1; k <= dim; ++k) {
      simplex[k] = affine(simplex[0], simplex[k], 0.5);
      auto fs = eval(simplex[k]);
      if (!fs) break;
      values[k] = *fs;
    }
  }

  NelderMeadResult result;
  result.x = eval.best_x();
  result.value = eval.best_value();
  result.evaluations = eval.count();
  result.converged = !eval.exhausted() || eval.stalled();
  return result;
}

}  // namespace arpq
