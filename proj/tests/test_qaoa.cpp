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

#include <gtest/gtest.h>

#include <cmath>

#include "arpq/canonical.hpp"
#include "arpq/error.hpp"
#include "arpq/optimizer.hpp"
#include "arpq/qaoa.hpp"
#include "support.hpp"

namespace arpq {
namespace {

TEST(NelderMead, MinimisesQuadraticWithinBudget) {
  std::size_t calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2) + 1;
  };
  NelderMeadOptions o;
  o.max_evaluations = 400;
  o.relative_tolerance = 0;
  auto r = nelder_mead(f, {0.0, 0.0}, o);
  EXPECT_LE(calls, 400u);
  EXPECT_EQ(r.evaluations, calls);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], -2.0, 1e-4);
  EXPECT_NEAR(r.value, 1.0, 1e-8);
}

TEST(NelderMead, StopsOnFlatObjective) {
  auto r = nelder_mead([](std::span<const double>) { return 2.0; }, {0.1, 0.2});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.evaluations, 10u);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(NelderMead, RespectsTinyBudget) {
  std::size_t calls = 0;
  auto r = nelder_mead(
      [&](std::span<const double> x) {
        ++calls;
        return x[0] * x[0];
      },
      {3.0}, NelderMeadOptions{1, 0.1, 1e-4, 5});
  EXPECT_EQ(calls, 1u);
  EXPECT_DOUBLE_EQ(r.x[0], 3.0);
}

TEST(NormalizedDistance, Examples) {
  std::vector<double> same(10, -5.0);
  EXPECT_DOUBLE_EQ(normalized_distance(same, -5.0), 0.0);
  std::vector<double> found(10, -76.75);
  found[0] = -76.0;
  EXPECT_NEAR(normalized_distance(found, -76.75), (0.75 / 76.75) / 10, 1e-15);
  EXPECT_NEAR(normalized_distance(found, -76.75), 0.000977, 1e-6);
  std::vector<double> twice{-8.0};
  EXPECT_DOUBLE_EQ(normalized_distance(twice, -4.0), 1.0);
  try {
    normalized_distance(twice, 0.0);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("undefined normalization"), std::string::npos);
  }
  EXPECT_THROW(normalized_distance(std::vector<double>{}, 1.0), InvalidInput);
}

TEST(Optimize, ConstantPolyOnDummyQubit) {
  PBPoly p = PBPoly::constant(3.5);
  auto ansatz = build_ansatz(to_spin(p, 1), 1, false);
  OptimizerConfig cfg;
  cfg.max_evaluations = 1;
  auto r = optimize(ansatz, p, 1, cfg);
  EXPECT_DOUBLE_EQ(r.best.cost, 3.5);
  EXPECT_EQ(r.iterations.size(), 2u);
  EXPECT_TRUE(r.iterations.back().final);
}

TEST(Optimize, ExactExpectationReachesOneQubitOptimum) {
  // E = x0 on one qubit: p = 1 can rotate |+> onto |0>, so the optimum is 0.
  PBPoly p = PBPoly::variable(0);
  auto ansatz = build_ansatz(to_spin(p, 1), 1, false);
  OptimizerConfig cfg;
  cfg.use_exact_expectation = true;
  cfg.shots = 16;
  auto r = optimize(ansatz, p, 1, cfg);
  EXPECT_LT(r.iterations.back().cost_signal, 1e-3);
}

TEST(Optimize, RejectsBadConfiguration) {
  PBPoly p = PBPoly::variable(0);
  auto ansatz = build_ansatz(to_spin(p, 1), 1, false);
  OptimizerConfig cfg;
  cfg.shots = 0;
  EXPECT_THROW(optimize(ansatz, p, 1, cfg), InvalidInput);
  cfg.shots = 10;
  cfg.initial_params = {0.1};
  EXPECT_THROW(optimize(ansatz, p, 1, cfg), InvalidInput);
  cfg.initial_params.clear();
  cfg.max_qubits = 0;
  EXPECT_THROW(optimize(ansatz, p, 1, cfg), WidthCapExceeded);
}

class RecordedRun : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    f_ = new Formulation(build_formulation(canonical_instance(1), FormKind::hubo));
    ansatz_ = new Circuit(build_ansatz(to_spin(f_->poly(), f_->qubit_count()), 1, false));
    OptimizerConfig cfg;
    cfg.seed = 99;
    cfg.max_evaluations = 40;
    record_ = new RunRecord(optimize(*ansatz_, *f_, cfg));
  }
  static void TearDownTestSuite() {
    delete record_;
    delete ansatz_;
    delete f_;
  }
  static Formulation* f_;
  static Circuit* ansatz_;
  static RunRecord* record_;
};

Formulation* RecordedRun::f_ = nullptr;
Circuit* RecordedRun::ansatz_ = nullptr;
RunRecord* RecordedRun::record_ = nullptr;

TEST_F(RecordedRun, BestEqualsScanOfSamples) {
  double best = 1e300;
  std::size_t iteration = 0;
  for (std::size_t k = 0; k < record_->iterations.size(); ++k) {
    std::uint64_t shots = 0;
    for (const auto& s : record_->iterations[k].samples) {
      shots += s.count;
      EXPECT_NEAR(s.cost, testing::naive_eval(f_->poly(), s.bits), 1e-9);
      if (s.cost < best) {
        best = s.cost;
        iteration = k;
      }
    }
    EXPECT_EQ(shots, 1024u);
  }
  EXPECT_DOUBLE_EQ(record_->best.cost, best);
  EXPECT_EQ(record_->best.iteration, iteration);
  EXPECT_DOUBLE_EQ(best_measurement(*record_).second, best);
  EXPECT_LE(best_measurement(*record_).second, final_mode(*record_).second);
}

TEST_F(RecordedRun, SignalIsSampleMean) {
  for (const auto& it : record_->iterations) {
    double total = 0;
    for (const auto& s : it.samples) total += s.cost * static_cast<double>(s.count);
    EXPECT_NEAR(it.cost_signal, total / 1024, 1e-9);
  }
  EXPECT_TRUE(record_->iterations.back().final);
  EXPECT_EQ(record_->iterations.back().params, record_->final_params);
  EXPECT_LE(record_->iterations.size(), 41u);
}

TEST_F(RecordedRun, DeterministicForSeed) {
  OptimizerConfig cfg;
  cfg.seed = 99;
  cfg.max_evaluations = 40;
  EXPECT_EQ(optimize(*ansatz_, *f_, cfg).to_json(), record_->to_json());
  cfg.seed = 100;
  EXPECT_NE(optimize(*ansatz_, *f_, cfg).to_json(), record_->to_json());
}

TEST_F(RecordedRun, GatePathMatchesDiagonalPath) {
  OptimizerConfig cfg;
  cfg.seed = 99;
  cfg.max_evaluations = 5;
  auto diag = optimize(*ansatz_, *f_, cfg);
  cfg.path = SimulationPath::gates;
  auto gates = optimize(*ansatz_, *f_, cfg);
  ASSERT_EQ(diag.iterations.size(), gates.iterations.size());
  for (std::size_t k = 0; k < diag.iterations.size(); ++k)
    EXPECT_NEAR(diag.iterations[k].cost_signal, gates.iterations[k].cost_signal, 1e-6);
}

TEST(BestMeasurement, SingleSampleAndEmptyRecord) {
  RunRecord r;
  EXPECT_THROW(best_measurement(r), InvalidInput);
  EXPECT_THROW(final_mode(r), InvalidInput);
  r.iterations.push_back({{0.0, 0.0}, 2.0, {{5, 1, 2.0}}, true});
  EXPECT_EQ(best_measurement(r).first, 5u);
  EXPECT_EQ(final_mode(r).first, 5u);
}

}  // namespace
}  // namespace arpq
