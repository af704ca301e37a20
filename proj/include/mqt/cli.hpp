// Copyright 2026 The mqt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MQT_CLI_HPP
#define MQT_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mqt/json_io.hpp"
#include "mqt/version.hpp"

namespace mqt {

/// Everything a subcommand can consume, gathered by the argument parser.
struct RunConfig {
  std::uint32_t p = 0;          // --p
  std::string states;           // --states: "all-rays", inline JSON, or path
  std::string spec;             // --spec: inline JSON or path
  std::string fixture;          // --fixture: named fixture
  std::string format = "json";  // --format: json | text
  std::string only;             // --only: battery item filter
  std::string strategy = "increment";  // --strategy: increment | double
  std::string poly;             // --poly: coefficient array JSON
  std::string c_json;           // --c: 2x2 complex matrix JSON
  double lambda = -1.0;         // --lambda
  std::size_t copies = 0;       // --n; 0 = subcommand default
  std::size_t ancilla = 2;      // --ancilla
  std::size_t workers = 0;      // --workers; 0 = MQT_WORKERS or 1
  std::uint64_t seed = 0;       // --seed
};

/// Exit code plus the canonical report. Exit codes: 0 = verified or
/// constructed, 2 = claim refuted (witness in the report), 1 = usage or
/// precondition error.
struct RunResult {
  int exit_code = 0;
  Json report;
  std::string rendered;  // what the binary prints
};

/// Parses and dispatches one invocation. Identical argument vectors yield
/// byte-identical reports except for the timing_ms field.
RunResult run(const std::vector<std::string>& args);

/// One executed battery item.
struct BatteryItem {
  std::string name;
  bool pass = false;
  Json detail;
};

/// Runs the acceptance battery (optionally filtered to items whose name
/// contains `only`), re-deriving every pinned claim from the engines.
std::vector<BatteryItem> reproduce_battery(const std::string& only,
                                           std::size_t workers);

}  // namespace mqt

#endif
