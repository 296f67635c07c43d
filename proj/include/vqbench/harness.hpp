// Copyright 2026 The vqbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vqbench/ansatz.hpp"
#include "vqbench/optimizer.hpp"
#include "vqbench/problems.hpp"
#include "vqbench/simulator.hpp"

// Benchmark execution: run every configured problem over its size range for a
// number of cycles, record the per-cycle execution data, and persist the
// records as JSON. Field names in the record files are part of the interface
// and must not drift.

namespace vqbench {

/// Record-file schema violations (missing or mistyped fields).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteProblemRange {
  ProblemKind kind{};
  int min_size = 0;
  int max_size = 0;
};

struct SuiteConfig {
  std::string device = "local-statevector";
  std::uint64_t shots = 4096;
  int cycles = 10;
  std::uint64_t seed = 1;
  double a_star = 0.2;  // relative-error threshold used by the capacity score
  std::string output_dir = "records";
  std::uint32_t qubit_cap = kDefaultQubitCap;
  int max_iterations = 100;
  int workers = 1;
  std::vector<SuiteProblemRange> problems;  // empty selects the default ranges
};

/// The supported size range of every problem, bounded so that the widest
/// register (DSP at size 15) still fits the default 20-qubit cap.
inline std::vector<SuiteProblemRange> default_problem_ranges() {
  return {
      {ProblemKind::MCP, 5, 15}, {ProblemKind::DSP, 5, 15}, {ProblemKind::MIS, 5, 15},
      {ProblemKind::TSP, 3, 4},  {ProblemKind::RH, 2, 15},  {ProblemKind::IC, 2, 15},
  };
}

/// One benchmark cycle's execution data plus the metadata needed to replay it.
struct ExecutionRecord {
  double depth = 0;
  double expectation_value = 0;
  double expectation_value_baseline = std::numeric_limits<double>::quiet_NaN();
  double expectation_value_optimal = 0;
  std::vector<double> job_durations_ms;
  std::vector<double> optimal_params;
  std::vector<double> optimizer_durations_ms;
  int optimizer_iterations = 0;
  int qubits = 0;
  double total_classic_duration_s = 0;
  double total_quantum_duration_s = 0;

  bool has_meta = false;
  ProblemKind problem{};
  int size = 0;
  std::uint64_t cycle_seed = 0;
  std::uint64_t shots = 0;
  std::string backend;
};

struct RecordGroup {
  ProblemKind kind{};
  int size = 0;
  std::vector<ExecutionRecord> records;
};

struct RecordSet {
  std::string device;
  std::vector<RecordGroup> groups;
  std::vector<std::string> failures;  // per-group / per-cycle error notes
};

/// Runs one full optimization cycle on the given instance: the sampled
/// optimization on the simulator plus the exact-expectation baseline
/// optimization from the same starting parameters.
inline ExecutionRecord run_vqa(const ProblemInstance& inst, const SuiteConfig& cfg,
                               std::uint64_t cycle_seed,
                               std::optional<double> known_optimal = std::nullopt) {
  const auto t_start = std::chrono::steady_clock::now();
  if (inst.n_qubits > static_cast<int>(cfg.qubit_cap)) {
    throw std::runtime_error(std::string(kind_name(inst.kind)) + " size " +
                             std::to_string(inst.size) + " needs " +
                             std::to_string(inst.n_qubits) + " qubits, above the cap of " +
                             std::to_string(cfg.qubit_cap));
  }

  Rng rng(derive_seed(cycle_seed, {0x1417}));
  const std::size_t n_params = param_count(inst);
  std::vector<double> x0(n_params);
  const bool qaoa = inst.kind == ProblemKind::MCP || inst.kind == ProblemKind::DSP ||
                    inst.kind == ProblemKind::MIS || inst.kind == ProblemKind::TSP;
  if (qaoa) {
    x0[0] = rng.uniform(0, 2 * std::numbers::pi);  // cost angle
    x0[1] = rng.uniform(0, std::numbers::pi);      // mixer angle
  } else {
    for (double& p : x0) p = rng.uniform(0, 2 * std::numbers::pi);
  }

  std::vector<double> job_ms;
  std::uint64_t eval_index = 0;
  const Objective sampled = [&](const std::vector<double>& x) {
    const CircuitSet set = build_circuits(inst, x);
    std::vector<Histogram> hists;
    hists.reserve(set.circuits.size());
    for (std::size_t ci = 0; ci < set.circuits.size(); ++ci) {
      JobResult jr = run_job(decompose(set.circuits[ci].circuit), cfg.shots,
                             derive_seed(cycle_seed, {0x10B, eval_index, ci}), cfg.qubit_cap);
      job_ms.push_back(jr.duration_ms);
      hists.push_back(std::move(jr.histogram));
    }
    ++eval_index;
    return expectation_from_counts(inst, hists);
  };
  OptimConfig ocfg;
  ocfg.max_iterations = cfg.max_iterations;
  const OptimResult run = minimize(sampled, x0, ocfg);

  const Objective exact = [&](const std::vector<double>& x) {
    return exact_energy(inst, x, cfg.qubit_cap);
  };
  const OptimResult baseline = minimize(exact, x0, ocfg);

  ExecutionRecord rec;
  rec.depth = static_cast<double>(depth(decompose(build_circuits(inst, x0).circuits[0].circuit)));
  rec.expectation_value = run.best_value;
  rec.expectation_value_baseline = baseline.best_value;
  rec.expectation_value_optimal = known_optimal ? *known_optimal : brute_force_optimum(inst);
  rec.job_durations_ms = job_ms;
  rec.optimal_params = run.best_params;
  rec.optimizer_durations_ms = run.iteration_durations_ms;
  rec.optimizer_iterations = run.iterations;
  rec.qubits = inst.n_qubits;
  double quantum_s = 0;
  for (double ms : job_ms) quantum_s += ms / 1000.0;
  rec.total_quantum_duration_s = quantum_s;
  const double wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  rec.total_classic_duration_s = std::max(0.0, wall_s - quantum_s);

  rec.has_meta = true;
  rec.problem = inst.kind;
  rec.size = inst.size;
  rec.cycle_seed = cycle_seed;
  rec.shots = cfg.shots;
  rec.backend = cfg.device;
  return rec;
}

namespace detail {

inline std::uint64_t kind_ordinal(ProblemKind k) { return static_cast<std::uint64_t>(k); }

}  // namespace detail

/// The instance seed of a (kind, size) group under a suite seed.
inline std::uint64_t instance_seed(std::uint64_t suite_seed, ProblemKind kind, int size) {
  return derive_seed(suite_seed, {detail::kind_ordinal(kind), static_cast<std::uint64_t>(size),
                                  0xA11CEull});
}

/// The cycle seed of one benchmark cycle under a suite seed.
inline std::uint64_t cycle_seed_for(std::uint64_t suite_seed, ProblemKind kind, int size,
                                    int cycle) {
  return derive_seed(suite_seed, {detail::kind_ordinal(kind), static_cast<std::uint64_t>(size),
                                  0xC0ull, static_cast<std::uint64_t>(cycle)});
}

/// Runs the configured problems over their size ranges for the configured
/// number of cycles. Failures are recorded per group (or per cycle) and do
/// not abort the rest of the suite. Groups may run on parallel workers; all
/// seeds derive from (suite seed, kind, size, cycle), so results do not
/// depend on the worker count.
inline RecordSet run_suite(const SuiteConfig& cfg) {
  if (cfg.cycles < 1) throw std::invalid_argument("cycles must be at least 1");
  if (cfg.shots < 1) throw std::invalid_argument("shots must be at least 1");

  const std::vector<SuiteProblemRange> ranges =
      cfg.problems.empty() ? default_problem_ranges() : cfg.problems;
  struct Task {
    ProblemKind kind;
    int size;
  };
  std::vector<Task> tasks;
  for (const SuiteProblemRange& r : ranges) {
    if (r.min_size > r.max_size) {
      throw std::invalid_argument(std::string("problem ") + kind_name(r.kind) +
                                  ": min_size exceeds max_size");
    }
    for (int s = r.min_size; s <= r.max_size; ++s) tasks.push_back({r.kind, s});
  }

  RecordSet out;
  out.device = cfg.device;
  std::vector<RecordGroup> groups(tasks.size());
  std::vector<std::vector<std::string>> failures(tasks.size());

  auto run_task = [&](std::size_t ti) {
    const Task& t = tasks[ti];
    RecordGroup& group = groups[ti];
    group.kind = t.kind;
    group.size = t.size;
    const std::string label = std::string(kind_name(t.kind)) + " size " + std::to_string(t.size);
    try {
      const ProblemInstance inst =
          make_instance(t.kind, t.size, instance_seed(cfg.seed, t.kind, t.size));
      if (inst.n_qubits > static_cast<int>(cfg.qubit_cap)) {
        throw std::runtime_error("needs " + std::to_string(inst.n_qubits) +
                                 " qubits, above the cap of " + std::to_string(cfg.qubit_cap));
      }
      const double optimal = brute_force_optimum(inst);
      for (int cycle = 0; cycle < cfg.cycles; ++cycle) {
        try {
          group.records.push_back(
              run_vqa(inst, cfg, cycle_seed_for(cfg.seed, t.kind, t.size, cycle), optimal));
        } catch (const std::exception& e) {
          failures[ti].push_back(label + " cycle " + std::to_string(cycle) + ": " + e.what());
        }
      }
      if (group.records.empty()) {
        failures[ti].push_back(label + ": all cycles failed");
      }
    } catch (const std::exception& e) {
      failures[ti].push_back(label + ": " + e.what());
    }
  };

  const int n_workers = std::max(1, cfg.workers);
  if (n_workers == 1) {
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t spawn = std::min<std::size_t>(n_workers, tasks.size());
    for (std::size_t w = 0; w < spawn; ++w) {
      pool.emplace_back([&] {
        for (std::size_t ti = next.fetch_add(1); ti < tasks.size(); ti = next.fetch_add(1)) {
          run_task(ti);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    if (!groups[ti].records.empty()) out.groups.push_back(std::move(groups[ti]));
    for (std::string& f : failures[ti]) out.failures.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON persistence. One file per (device, problem); each file holds an array
// of record objects with the canonical field names.

namespace detail {

inline nlohmann::json record_to_json(const ExecutionRecord& r) {
  nlohmann::json j;
  j["Depth"] = r.depth;
  j["Expectation Value"] = r.expectation_value;
  if (std::isfinite(r.expectation_value_baseline)) {
    j["Expectation Value Baseline"] = r.expectation_value_baseline;
  }
  j["Expectation Value Optimal"] = r.expectation_value_optimal;
  j["Job durations [ms]"] = r.job_durations_ms;
  j["Optimal params"] = r.optimal_params;
  j["Optimizer durations [ms]"] = r.optimizer_durations_ms;
  j["Optimizer iterations"] = r.optimizer_iterations;
  j["Qubits"] = r.qubits;
  j["Total Classic duration [s]"] = r.total_classic_duration_s;
  j["Total Quantum duration [s]"] = r.total_quantum_duration_s;
  if (r.has_meta) {
    j["Meta"] = {
        {"Backend", r.backend},          {"Cycle seed", r.cycle_seed},
        {"Problem", kind_name(r.problem)}, {"Shots", r.shots},
        {"Size", r.size},
    };
  }
  return j;
}

inline double require_number(const nlohmann::json& j, const char* field,
                             const std::string& where) {
  if (!j.contains(field)) {
    throw SchemaError(where + ": missing field \"" + field + "\"");
  }
  if (!j[field].is_number()) {
    throw SchemaError(where + ": field \"" + field + "\" must be a number");
  }
  return j[field].get<double>();
}

inline std::vector<double> require_number_array(const nlohmann::json& j, const char* field,
                                                const std::string& where) {
  if (!j.contains(field)) {
    throw SchemaError(where + ": missing field \"" + field + "\"");
  }
  if (!j[field].is_array()) {
    throw SchemaError(where + ": field \"" + field + "\" must be an array");
  }
  std::vector<double> out;
  for (const auto& v : j[field]) {
    if (!v.is_number()) {
      throw SchemaError(where + ": field \"" + field + "\" must contain numbers only");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

inline ExecutionRecord record_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": record must be a JSON object");
  ExecutionRecord r;
  r.depth = require_number(j, "Depth", where);
  r.expectation_value = require_number(j, "Expectation Value", where);
  if (j.contains("Expectation Value Baseline") && !j["Expectation Value Baseline"].is_null()) {
    if (!j["Expectation Value Baseline"].is_number()) {
      throw SchemaError(where + ": field \"Expectation Value Baseline\" must be a number");
    }
    r.expectation_value_baseline = j["Expectation Value Baseline"].get<double>();
  }
  r.expectation_value_optimal = require_number(j, "Expectation Value Optimal", where);
  r.job_durations_ms = require_number_array(j, "Job durations [ms]", where);
  r.optimal_params = require_number_array(j, "Optimal params", where);
  r.optimizer_durations_ms = require_number_array(j, "Optimizer durations [ms]", where);
  r.optimizer_iterations = static_cast<int>(require_number(j, "Optimizer iterations", where));
  r.qubits = static_cast<int>(require_number(j, "Qubits", where));
  r.total_classic_duration_s = require_number(j, "Total Classic duration [s]", where);
  r.total_quantum_duration_s = require_number(j, "Total Quantum duration [s]", where);
  if (j.contains("Meta")) {
    const auto& m = j["Meta"];
    if (!m.is_object()) throw SchemaError(where + ": field \"Meta\" must be an object");
    for (const char* f : {"Backend", "Problem"}) {
      if (!m.contains(f) || !m[f].is_string()) {
        throw SchemaError(where + ": metadata field \"" + f + "\" must be a string");
      }
    }
    for (const char* f : {"Cycle seed", "Shots", "Size"}) {
      if (!m.contains(f) || !m[f].is_number()) {
        throw SchemaError(where + ": metadata field \"" + f + "\" must be a number");
      }
    }
    r.has_meta = true;
    r.backend = m["Backend"].get<std::string>();
    r.problem = parse_kind(m["Problem"].get<std::string>());
    r.cycle_seed = m["Cycle seed"].get<std::uint64_t>();
    r.shots = m["Shots"].get<std::uint64_t>();
    r.size = static_cast<int>(m["Size"].get<double>());
  }
  return r;
}

}  // namespace detail

/// Loads one record file: either a JSON array of record objects or a single
/// record object. Schema violations name the offending field and record.
inline std::vector<ExecutionRecord> load_record_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": not valid JSON (" + e.what() + ")");
  }
  std::vector<ExecutionRecord> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(detail::record_from_json(j[i], "record " + std::to_string(i) + " in " + path));
    }
  } else {
    out.push_back(detail::record_from_json(j, "record 0 in " + path));
  }
  return out;
}

/// Writes one file per problem kind present in the set:
/// <dir>/records__<device>__<kind>.json
inline std::vector<std::string> save_records(const RecordSet& set, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (ProblemKind kind : {ProblemKind::MCP, ProblemKind::DSP, ProblemKind::MIS, ProblemKind::TSP,
                           ProblemKind::RH, ProblemKind::IC}) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RecordGroup& g : set.groups) {
      if (g.kind != kind) continue;
      for (const ExecutionRecord& r : g.records) arr.push_back(detail::record_to_json(r));
    }
    if (arr.empty()) continue;
    const std::string path =
        (std::filesystem::path(dir) / ("records__" + set.device + "__" + kind_name(kind) + ".json"))
            .string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write record file " + path);
    out << arr.dump(1) << "\n";
    written.push_back(path);
  }
  return written;
}

}  // namespace vqbench
