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

// Command-line harness: instance generation, formulation, compilation,
// metrics, solving, oracles and benchmark reports.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arpq/bench.hpp"
#include "arpq/canonical.hpp"
#include "arpq/error.hpp"
#include "arpq/formulation.hpp"
#include "arpq/instance_io.hpp"
#include "arpq/oracle.hpp"
#include "arpq/qasm.hpp"
#include "arpq/qaoa.hpp"

namespace {

using namespace arpq;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitWidthCap = 3;
constexpr int kExitPenalty = 4;

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t shots = 1024;
  std::size_t repeats = 10;
  std::size_t max_qubits = kDefaultMaxQubits;
  bool factor = false;
  std::string style = "ladder";
  std::string form = "hubo";
};

FormVariant variant(const Globals& g) {
  const FormKind kind = parse_form_kind(g.form);
  if (!g.factor) return kind == FormKind::qubo ? FormVariant::qubo : FormVariant::hubo;
  if (kind == FormKind::qubo) throw InvalidInput("--factor applies to the hubo form only");
  return FormVariant::hubo_factored;
}

// "canonical:<k>" names a shipped instance; anything else is a file path.
ProblemInstance instance_arg(const std::string& arg) {
  const std::string prefix = "canonical:";
  if (arg.rfind(prefix, 0) == 0) return canonical_instance(std::stoi(arg.substr(prefix.size())));
  return load_instance(arg);
}

std::string test_label(const std::string& arg) {
  const std::string prefix = "canonical:";
  if (arg.rfind(prefix, 0) == 0) return "case" + arg.substr(prefix.size());
  return std::filesystem::path(arg).stem().string();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

void print_stats(const StatsRow& s) {
  std::printf("%-10s %-14s qubits=%zu unpruned=%zu terms=%zu depth=%zu two_qubit_gates=%zu gates=%zu\n",
              s.test.c_str(), to_string(s.form).c_str(), s.qubits, s.unpruned_variables, s.terms, s.depth,
              s.two_qubit_gates, s.gates);
}

void print_rows(const std::vector<BenchRow>& rows) {
  for (const auto& r : rows)
    std::printf("%-10s %-14s repeat=%zu depth=%zu two_qubit_gates=%zu found=%g optimal=%g feasible=%s %s\n",
                r.test.c_str(), to_string(r.form).c_str(), r.repeat, r.depth, r.two_qubit_gates, r.found_cost,
                r.optimal_cost, r.feasible ? "yes" : "no", r.route.c_str());
}

void print_aggregates(const std::vector<BenchRow>& rows) {
  for (const auto& a : aggregate(rows)) {
    std::printf("%-10s %-14s hits=%zu/%zu mean_found=%g stddev=%g", a.test.c_str(), to_string(a.form).c_str(),
                a.optimum_hits, a.repeats, a.found_mean, a.found_stddev);
    if (a.mean_nd)
      std::printf(" N_D=%g\n", *a.mean_nd);
    else
      std::printf(" N_D=undefined\n");
  }
}

SolveConfig solve_config(const Globals& g) {
  SolveConfig cfg;
  cfg.repeats = g.repeats;
  cfg.shots = g.shots;
  cfg.seed = g.seed;
  cfg.max_qubits = g.max_qubits;
  cfg.style = parse_gadget_style(g.style);
  return cfg;
}

// Returns true when both oracles agree on the route objective.
bool run_oracle(const std::string& label, const ProblemInstance& instance, FormKind kind) {
  const Formulation f = build_formulation(instance, kind);
  const OracleResult routes = enumerate_routes(f.instance());
  std::printf("%s %s: qubits=%zu alpha=%g\n", label.c_str(), to_string(kind).c_str(), f.qubit_count(), f.alpha());
  if (routes.feasible)
    std::printf("  route search: objective=%g ties=%llu route=%s\n", routes.value,
                static_cast<unsigned long long>(routes.tie_count), route_to_string(*routes.route, f.instance()).c_str());
  else
    std::printf("  route search: no feasible route\n");
  const OracleResult bf = brute_force_min(f);
  const double total = bf.value + f.dropped_constant();
  std::printf("  brute force: bits=%s value=%g (+%g dropped = %g) ties=%llu\n",
              bitstring(*bf.assignment, f.qubit_count()).c_str(), bf.value, f.dropped_constant(), total,
              static_cast<unsigned long long>(bf.tie_count));
  if (!bf.feasible) {
    const Violation* v = bf.violations.empty() ? nullptr : &bf.violations.front();
    std::printf("  INCONSISTENT: alpha insufficient, minimiser violates %s%s%s\n", v ? v->constraint.c_str() : "?",
                v ? ": " : "", v ? v->detail.c_str() : "");
    return false;
  }
  std::printf("  decoded: %s\n", route_to_string(*bf.route, f.instance()).c_str());
  const double objective = route_objective(*bf.route, f.instance());
  if (!routes.feasible || std::abs(objective - routes.value) > 1e-9 || std::abs(objective - total) > 1e-9) {
    std::printf("  INCONSISTENT: brute-force route objective %g differs from the route optimum\n", objective);
    return false;
  }
  std::printf("  consistent\n");
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arpq: asset retrieval QUBO/HUBO formulations and QAOA benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("ARPQ_SEED")) g.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", g.seed, "Random seed (default from ARPQ_SEED, else 0)");
  app.add_option("--shots", g.shots, "Shots per evaluation")->check(CLI::PositiveNumber);
  app.add_option("--repeats", g.repeats, "Independent repeats")->check(CLI::PositiveNumber);
  app.add_option("--max-qubits", g.max_qubits, "Statevector width cap")->check(CLI::PositiveNumber);
  app.add_flag("--factor", g.factor, "Factor nested phase gadgets (hubo only)");
  app.add_option("--style", g.style, "Gadget style")->check(CLI::IsMember({"ladder", "tree"}));
  app.add_option("--form", g.form, "Formulation")->check(CLI::IsMember({"qubo", "hubo"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  GenParams gp;
  int canonical = 0;
  std::string gen_out;
  gen->add_option("--internal-nodes", gp.internal_nodes, "Internal node count");
  gen->add_option("--deadline", gp.deadline, "Deadline T");
  gen->add_option("--value-min", gp.value_min);
  gen->add_option("--value-max", gp.value_max);
  gen->add_option("--time-min", gp.time_min);
  gen->add_option("--time-max", gp.time_max);
  gen->add_option("--edge-probability", gp.edge_probability);
  gen->add_option("--canonical", canonical, "Write shipped instance 1..4 instead");
  gen->add_option("-o,--out", gen_out, "Output path (default stdout)");

  // build
  auto* build = app.add_subcommand("build", "Write the penalised polynomial and its variable registry");
  std::string build_in, build_out, build_registry;
  std::optional<double> alpha;
  build->add_option("instance", build_in, "Instance file or canonical:<k>")->required();
  build->add_option("--alpha", alpha, "Penalty weight (default 0.75 * max asset value)");
  build->add_option("-o,--out", build_out, "Polynomial text output (default stdout)");
  build->add_option("--registry", build_registry, "Registry JSON output");

  // compile
  auto* compile = app.add_subcommand("compile", "Write the QAOA ansatz as OpenQASM 2.0");
  std::string compile_in, compile_out;
  std::size_t layers = 1;
  std::vector<double> bind;
  compile->add_option("instance", compile_in)->required();
  compile->add_option("--layers", layers, "QAOA layers p")->check(CLI::PositiveNumber);
  compile->add_option("--params", bind, "Bind gamma_1..gamma_p beta_1..beta_p");
  compile->add_option("-o,--out", compile_out, "Output path (default stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "Qubit, depth and two-qubit gate counts");
  std::vector<std::string> stats_in;
  bool stats_all = false;
  stats->add_option("instances", stats_in, "Instances (default all canonical)");
  stats->add_flag("--all-forms", stats_all, "Report qubo, hubo and hubo_factored");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run repeated QAOA loops on one instance");
  std::string solve_in, solve_rows, solve_trace;
  solve_cmd->add_option("instance", solve_in)->required();
  solve_cmd->add_option("--rows", solve_rows, "Write rows JSON");
  solve_cmd->add_option("--trace", solve_trace, "Write the first repeat's full run record JSON");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force and route-search optima");
  std::string oracle_in;
  oracle->add_option("instance", oracle_in)->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Solve every instance in qubo, hubo and hubo_factored");
  std::vector<std::string> bench_in;
  std::string bench_dir = "bench_out";
  bench->add_option("instances", bench_in, "Instances (default all canonical)");
  bench->add_option("--out-dir", bench_dir, "Directory for rows.json and the report");

  // report
  auto* report = app.add_subcommand("report", "CSV, aggregate JSON and plot data from rows");
  std::string report_in, report_dir = "report", report_test, report_form;
  report->add_option("rows", report_in, "Rows JSON")->required();
  report->add_option("--test", report_test, "Keep one test");
  report->add_option("--only-form", report_form, "Keep one form (qubo, hubo, hubo_factored)");
  report->add_option("--out-dir", report_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  auto all_canonical = [] {
    std::vector<std::string> v;
    for (int k = 1; k <= kCanonicalCount; ++k) v.push_back("canonical:" + std::to_string(k));
    return v;
  };

  try {
    if (gen->parsed()) {
      if (canonical) {
        emit(dump_instance(canonical_instance(canonical)), gen_out);
      } else {
        gp.seed = g.seed;
        emit(dump_instance(generate_instance(gp)), gen_out);
      }
    } else if (build->parsed()) {
      const Formulation f = build_formulation(instance_arg(build_in), parse_form_kind(g.form), alpha);
      emit(to_text(f.poly()), build_out);
      if (!build_registry.empty()) write_text_file(build_registry, registry_json(f));
      std::fprintf(stderr, "%zu qubits, %zu terms, alpha %g, dropped constant %g\n", f.qubit_count(),
                   f.poly().terms().size(), f.alpha(), f.dropped_constant());
    } else if (compile->parsed()) {
      const FormVariant v = variant(g);
      const Formulation f = build_formulation(instance_arg(compile_in), form_kind(v));
      const Circuit c = build_ansatz(to_spin(f.poly(), f.qubit_count()), layers, is_factored(v),
                                     parse_gadget_style(g.style));
      emit(export_qasm(c, bind), compile_out);
    } else if (stats->parsed()) {
      if (stats_in.empty()) stats_in = all_canonical();
      std::vector<FormVariant> forms{variant(g)};
      if (stats_all) forms = {FormVariant::qubo, FormVariant::hubo, FormVariant::hubo_factored};
      for (const auto& arg : stats_in)
        for (FormVariant v : forms) print_stats(circuit_stats(test_label(arg), instance_arg(arg), v, parse_gadget_style(g.style)));
    } else if (solve_cmd->parsed()) {
      const FormVariant v = variant(g);
      const ProblemInstance inst = instance_arg(solve_in);
      const auto rows = solve(test_label(solve_in), inst, v, solve_config(g));
      print_rows(rows);
      print_aggregates(rows);
      if (!solve_rows.empty()) write_text_file(solve_rows, rows_to_json(rows));
      if (!solve_trace.empty()) {
        const Formulation f = build_formulation(inst, form_kind(v));
        const Circuit c = build_ansatz(to_spin(f.poly(), f.qubit_count()), 1, is_factored(v), parse_gadget_style(g.style));
        OptimizerConfig oc;
        oc.shots = g.shots;
        oc.seed = repeat_seed(g.seed, 0);
        oc.max_qubits = g.max_qubits;
        write_text_file(solve_trace, optimize(c, f, oc).to_json());
      }
    } else if (oracle->parsed()) {
      const ProblemInstance inst = instance_arg(oracle_in);
      if (!run_oracle(test_label(oracle_in), inst, parse_form_kind(g.form))) return kExitPenalty;
    } else if (bench->parsed()) {
      if (bench_in.empty()) bench_in = all_canonical();
      std::vector<BenchRow> rows;
      for (const auto& arg : bench_in)
        for (FormVariant v : {FormVariant::qubo, FormVariant::hubo, FormVariant::hubo_factored}) {
          try {
            auto part = solve(test_label(arg), instance_arg(arg), v, solve_config(g));
            rows.insert(rows.end(), part.begin(), part.end());
          } catch (const WidthCapExceeded& e) {
            std::printf("%-10s %-14s %s\n", test_label(arg).c_str(), to_string(v).c_str(), e.what());
          }
        }
      print_aggregates(rows);
      std::filesystem::create_directories(bench_dir);
      write_text_file(std::filesystem::path(bench_dir) / "rows.json", rows_to_json(rows));
      write_report(rows, bench_dir);
    } else if (report->parsed()) {
      const auto rows = filter_rows(rows_from_json(read_text_file(report_in)), report_test, report_form);
      if (rows.empty()) {
        std::fprintf(stderr, "error: no rows match the filter\n");
        return kExitError;
      }
      write_report(rows, report_dir);
      print_aggregates(rows);
    }
  } catch (const InfeasibleInstance& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInfeasible;
  } catch (const WidthCapExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitWidthCap;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitOk;
}
