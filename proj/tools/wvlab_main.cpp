/*
 * Copyright 2026 The wvlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// wvlab: run the WebView attack scenarios and the consistency checks.
//
//   wvlab list
//   wvlab run <name|file> [--format json|text] [--report PATH] [--seed N]
//   wvlab check [--seed N]
//
// Exit status: 0 success, 1 expectation or invariant failure, 2 usage or
// input error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wvlab/checks.hpp"
#include "wvlab/error.hpp"
#include "wvlab/scenario.hpp"
#include "wvlab/scenario_io.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

enum class Format { Json, Text };

struct RunConfig {
  std::string scenario_source;
  std::optional<std::string> report_path;
  Format format = Format::Json;
  std::uint64_t seed = wvlab::checks::kDefaultSeed;
};

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("WVLAB_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw wvlab::ParseError(std::string("WVLAB_SEED is not a number: '") + env + "'");
    }
  }
  return flag;
}

wvlab::Scenario resolve(const std::string& source) {
  if (auto builtin = wvlab::find_builtin(source)) return *builtin;
  if (!std::filesystem::exists(source)) {
    throw wvlab::ParseError("'" + source + "' is neither a built-in scenario nor a file");
  }
  return wvlab::load_scenario_file(source);
}

int cmd_list() {
  for (const auto& s : wvlab::builtin_scenarios()) std::cout << s.name << "\n";
  return 0;
}

int cmd_run(const RunConfig& cfg) {
  const wvlab::Scenario scenario = resolve(cfg.scenario_source);
  const wvlab::ScenarioReport report = wvlab::run_scenario(scenario);
  const std::string out = cfg.format == Format::Json ? wvlab::report_to_json(report).dump(2) + "\n"
                                                     : wvlab::report_to_text(report);
  if (cfg.report_path) {
    std::ofstream file(*cfg.report_path, std::ios::binary);
    if (!file || !(file << out)) {
      throw wvlab::ParseError("cannot write report to '" + *cfg.report_path + "'");
    }
  } else {
    std::cout << out;
  }
  if (!report.expected_met) {
    std::cerr << "scenario " << report.name << " did not meet its expected outcome\n";
    for (const auto& f : report.expectation_failures) std::cerr << "  " << f << "\n";
    return kExitFailure;
  }
  return 0;
}

int cmd_check(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : wvlab::checks::run_all(seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (seed " << seed << ")\n";
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic WebView cookie/contact exfiltration simulator"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* list = app.add_subcommand("list", "Print the built-in scenario names");

  auto* run = app.add_subcommand("run", "Run one scenario and print its report");
  run->add_option("scenario", cfg.scenario_source, "Built-in name or scenario JSON file")->required();
  run->add_option("--format", cfg.format, "Report format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json},
                                                                        {"text", Format::Text}}));
  run->add_option("--report", cfg.report_path, "Write the report here instead of stdout");
  run->add_option("--seed", cfg.seed, "Seed for randomized generators");

  auto* check = app.add_subcommand("check", "Run all built-ins and the property suites");
  check->add_option("--seed", cfg.seed, "Seed for randomized generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.seed = effective_seed(cfg.seed);
    if (*list) return cmd_list();
    if (*run) return cmd_run(cfg);
    if (*check) return cmd_check(cfg.seed);
  } catch (const wvlab::Error& e) {
    std::cerr << "wvlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
