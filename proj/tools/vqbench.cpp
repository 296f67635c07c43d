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

// Command-line front end: run a benchmark suite, score recorded runs, and
// render score charts.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vqbench/commands.hpp"

namespace {

int env_workers() {
  if (const char* raw = std::getenv("VQBENCH_WORKERS")) {
    try {
      const int n = std::stoi(raw);
      if (n >= 1 && n <= 256) return n;
    } catch (...) {
    }
    std::cerr << "ignoring VQBENCH_WORKERS=" << raw << " (want an integer in [1, 256])\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variational quantum benchmark suite"};
  app.require_subcommand(1);

  // run <config.json>
  std::string config_path;
  std::string run_output;
  std::string device;
  int cycles = -1;
  long long shots = -1;
  long long seed = -1;
  int workers = env_workers();
  int max_iterations = -1;
  CLI::App* run = app.add_subcommand("run", "execute the benchmark suite and record results");
  run->add_option("config", config_path, "JSON config file (defaults apply when omitted)")
      ->check(CLI::ExistingFile);
  run->add_option("-o,--output", run_output, "directory for record files");
  run->add_option("--device", device, "backend label written into the records");
  run->add_option("--cycles", cycles, "benchmark cycles per problem size")
      ->check(CLI::Range(1, 10000));
  run->add_option("--shots", shots, "measurement shots per circuit execution")
      ->check(CLI::Range(1LL, 100000000LL));
  run->add_option("--seed", seed, "base seed of the suite")->check(CLI::NonNegativeNumber);
  run->add_option("--workers", workers, "parallel worker threads (also via VQBENCH_WORKERS)")
      ->check(CLI::Range(1, 256));
  run->add_option("--max-iterations", max_iterations, "optimizer evaluation budget per cycle")
      ->check(CLI::Range(1, 1000000));

  // score <records-dir> [--a-star]
  std::string records_dir = "records";
  std::string scores_out;
  double a_star = 0.2;
  CLI::App* score = app.add_subcommand("score", "score recorded runs");
  score->add_option("records", records_dir, "directory holding record files");
  score->add_option("--a-star", a_star, "relative-error threshold of the capacity score")
      ->check(CLI::Range(1e-9, 0.999999));
  score->add_option("-o,--out", scores_out, "scores file to write (default <records>/scores.json)");

  // report <scores.json> <out-dir>
  std::string scores_path = "records/scores.json";
  std::string report_dir = "report";
  CLI::App* report = app.add_subcommand("report", "render score charts as SVG");
  report->add_option("scores", scores_path, "scores file written by the score command");
  report->add_option("out-dir", report_dir, "directory for the charts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      vqbench::SuiteConfig cfg;
      if (!config_path.empty()) cfg = vqbench::load_config_file(config_path);
      if (!run_output.empty()) cfg.output_dir = run_output;
      if (!device.empty()) cfg.device = device;
      if (cycles > 0) cfg.cycles = cycles;
      if (shots > 0) cfg.shots = static_cast<std::uint64_t>(shots);
      if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
      if (max_iterations > 0) cfg.max_iterations = max_iterations;
      cfg.workers = workers;
      return vqbench::cmd_run(cfg, std::cout, std::cerr);
    }
    if (score->parsed()) {
      return vqbench::cmd_score(records_dir, a_star, scores_out, std::cout);
    }
    return vqbench::cmd_report(scores_path, report_dir, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
