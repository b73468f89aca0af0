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

#include "arpq/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "arpq/error.hpp"
#include "arpq/instance_io.hpp"
#include "arpq/oracle.hpp"

namespace arpq {

namespace {

std::string number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(FormVariant v) {
  switch (v) {
    case FormVariant::qubo: return "qubo";
    case FormVariant::hubo: return "hubo";
    case FormVariant::hubo_factored: return "hubo_factored";
  }
  return "?";
}

FormVariant parse_form_variant(std::string_view text) {
  if (text == "qubo") return FormVariant::qubo;
  if (text == "hubo") return FormVariant::hubo;
  if (text == "hubo_factored") return FormVariant::hubo_factored;
  throw InvalidInput("unknown form '" + std::string(text) + "' (expected qubo, hubo or hubo_factored)");
}

FormKind form_kind(FormVariant v) { return v == FormVariant::qubo ? FormKind::qubo : FormKind::hubo; }

bool is_factored(FormVariant v) { return v == FormVariant::hubo_factored; }

StatsRow circuit_stats(const std::string& test, const ProblemInstance& instance, FormVariant form,
                       GadgetStyle style, std::size_t layers) {
  const Formulation f = build_formulation(instance, form_kind(form));
  const SpinPoly spin = to_spin(f.poly(), f.qubit_count());
  const CircuitMetrics m = metrics(build_ansatz(spin, layers, is_factored(form), style));
  StatsRow row;
  row.test = test;
  row.form = form;
  row.qubits = f.qubit_count();
  row.unpruned_variables = unpruned_variable_count(instance, form_kind(form));
  row.depth = m.depth;
  row.two_qubit_gates = m.two_qubit_gates;
  row.gates = m.gates;
  row.terms = f.poly().terms().size();
  return row;
}

std::uint64_t repeat_seed(std::uint64_t seed, std::size_t repeat) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (repeat + 1));
}

std::vector<BenchRow> solve(const std::string& test, const ProblemInstance& instance, FormVariant form,
                            const SolveConfig& cfg) {
  if (cfg.repeats < 1) throw InvalidInput("repeats must be at least 1");
  const Formulation f = build_formulation(instance, form_kind(form));
  if (f.qubit_count() > cfg.max_qubits)
    throw WidthCapExceeded("simulation-infeasible: " + std::to_string(f.qubit_count()) +
                           " qubits exceeds the cap of " + std::to_string(cfg.max_qubits));
  const OracleResult optimum = enumerate_routes(f.instance());
  if (!optimum.feasible) throw InfeasibleInstance("instance has no feasible route");
  const SpinPoly spin = to_spin(f.poly(), f.qubit_count());
  const Circuit ansatz = build_ansatz(spin, cfg.layers, is_factored(form), cfg.style);
  const CircuitMetrics m = metrics(ansatz);

  std::vector<BenchRow> rows(cfg.repeats);
  auto run_repeat = [&](std::size_t r) {
    OptimizerConfig oc;
    oc.max_evaluations = cfg.max_evaluations;
    oc.shots = cfg.shots;
    oc.seed = repeat_seed(cfg.seed, r);
    oc.max_qubits = cfg.max_qubits;
    oc.path = cfg.path;
    const RunRecord record = optimize(ansatz, f, oc);
    BenchRow& row = rows[r];
    row.test = test;
    row.form = form;
    row.repeat = r;
    row.seed = oc.seed;
    row.qubits = f.qubit_count();
    row.depth = m.depth;
    row.two_qubit_gates = m.two_qubit_gates;
    row.found_cost = record.best.cost + f.dropped_constant();
    row.optimal_cost = optimum.value;
    const DecodeResult d = decode(record.best.bits, f);
    row.feasible = d.feasible();
    if (d.route) row.route = route_to_string(*d.route, f.instance());
  };

  std::size_t workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.repeats);
  if (workers <= 1) {
    for (std::size_t r = 0; r < cfg.repeats; ++r) run_repeat(r);
    return rows;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t r = w; r < cfg.repeats; r += workers) run_repeat(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

bool hits_optimum(const BenchRow& row) {
  return row.feasible && std::abs(row.found_cost - row.optimal_cost) <= 1e-9 * std::max(1.0, std::abs(row.optimal_cost));
}

std::vector<Aggregate> aggregate(const std::vector<BenchRow>& rows) {
  std::vector<Aggregate> out;
  std::map<std::pair<std::string, FormVariant>, std::vector<const BenchRow*>> groups;
  for (const auto& row : rows) {
    auto key = std::make_pair(row.test, row.form);
    if (!groups.count(key)) {
      Aggregate a;
      a.test = row.test;
      a.form = row.form;
      out.push_back(a);
    }
    groups[key].push_back(&row);
  }
  for (auto& a : out) {
    const auto& group = groups[{a.test, a.form}];
    std::vector<double> found;
    for (const BenchRow* row : group) {
      found.push_back(row->found_cost);
      a.optimum_hits += hits_optimum(*row);
      a.feasible_count += row->feasible;
    }
    const BenchRow& first = *group.front();
    a.repeats = group.size();
    a.optimal_cost = first.optimal_cost;
    a.qubits = first.qubits;
    a.depth = first.depth;
    a.two_qubit_gates = first.two_qubit_gates;
    double sum = 0.0;
    for (double x : found) sum += x;
    a.found_mean = sum / static_cast<double>(found.size());
    double var = 0.0;
    for (double x : found) var += (x - a.found_mean) * (x - a.found_mean);
    a.found_stddev = std::sqrt(var / static_cast<double>(found.size()));
    if (a.optimal_cost != 0.0) a.mean_nd = normalized_distance(found, a.optimal_cost);
  }
  return out;
}

std::string rows_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    doc["rows"].push_back({{"test", r.test},
                           {"form", to_string(r.form)},
                           {"repeat", r.repeat},
                           {"seed", r.seed},
                           {"qubits", r.qubits},
                           {"depth", r.depth},
                           {"two_qubit_gates", r.two_qubit_gates},
                           {"found_cost", r.found_cost},
                           {"optimal_cost", r.optimal_cost},
                           {"feasible", r.feasible},
                           {"route", r.route}});
  return doc.dump(2) + "\n";
}

std::vector<BenchRow> rows_from_json(const std::string& text) {
  std::vector<BenchRow> rows;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& j : doc.at("rows")) {
      BenchRow r;
      r.test = j.at("test").get<std::string>();
      r.form = parse_form_variant(j.at("form").get<std::string>());
      r.repeat = j.at("repeat").get<std::size_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.qubits = j.at("qubits").get<std::size_t>();
      r.depth = j.at("depth").get<std::size_t>();
      r.two_qubit_gates = j.at("two_qubit_gates").get<std::size_t>();
      r.found_cost = j.at("found_cost").get<double>();
      r.optimal_cost = j.at("optimal_cost").get<double>();
      r.feasible = j.at("feasible").get<bool>();
      r.route = j.value("route", "");
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed rows file: ") + e.what());
  }
  return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::string out = "test,repeat,circuit_depth,two_qubit_gates,found_solution\n";
  for (const auto& r : rows)
    out += r.test + ":" + to_string(r.form) + "," + std::to_string(r.repeat) + "," + std::to_string(r.depth) +
           "," + std::to_string(r.two_qubit_gates) + "," + number(r.found_cost) + "\n";
  return out;
}

std::string aggregates_to_json(const std::vector<Aggregate>& aggs) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& a : aggs) {
    nlohmann::json j{{"test", a.test},
                     {"form", to_string(a.form)},
                     {"repeats", a.repeats},
                     {"optimal_cost", a.optimal_cost},
                     {"found_mean", a.found_mean},
                     {"found_stddev", a.found_stddev},
                     {"optimum_hits", a.optimum_hits},
                     {"feasible_count", a.feasible_count},
                     {"qubits", a.qubits},
                     {"depth", a.depth},
                     {"two_qubit_gates", a.two_qubit_gates}};
    j["mean_nd"] = a.mean_nd ? nlohmann::json(*a.mean_nd) : nlohmann::json(nullptr);
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<BenchRow> filter_rows(const std::vector<BenchRow>& rows, const std::string& test,
                                  const std::string& form) {
  std::vector<BenchRow> out;
  for (const auto& r : rows)
    if ((test.empty() || r.test == test) && (form.empty() || to_string(r.form) == form)) out.push_back(r);
  return out;
}

void write_report(const std::vector<BenchRow>& rows, const std::filesystem::path& dir) {
  if (rows.empty()) throw InvalidInput("no rows to report");
  const auto aggs = aggregate(rows);
  std::filesystem::create_directories(dir);
  write_text_file(dir / "report.csv", rows_to_csv(rows));
  write_text_file(dir / "aggregate.json", aggregates_to_json(aggs));
  std::string depth = "# index label circuit_depth\n";
  std::string cx = "# index label two_qubit_gates\n";
  std::string nd = "# index label mean_nd\n";
  for (std::size_t k = 0; k < aggs.size(); ++k) {
    const std::string head = std::to_string(k) + " " + aggs[k].test + ":" + to_string(aggs[k].form) + " ";
    depth += head + std::to_string(aggs[k].depth) + "\n";
    cx += head + std::to_string(aggs[k].two_qubit_gates) + "\n";
    if (aggs[k].mean_nd) nd += head + number(*aggs[k].mean_nd) + "\n";
  }
  write_text_file(dir / "depth.dat", depth);
  write_text_file(dir / "two_qubit_gates.dat", cx);
  write_text_file(dir / "nd.dat", nd);
}

}  // namespace arpq
