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

#include "mqt/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <utility>

#include "mqt/error.hpp"

namespace mqt {

namespace {

struct Entry {
  const char* name;
  const char* kind;
  const char* text;
};

// The reducible GF(3) map: both conditional rows of the second image are
// (1, 2), so the input (0, 1) already maps to a product state.
constexpr const char* kZ3Reducible =
    R"({"p": 3, "M0": [[1, 0], [0, 1]], "M1": [[1, 2], [1, 2]]})";

constexpr const char* kGf2AllRays =
    R"({"p": 2, "dim": 2, "states": [[0, 1], [1, 0], [1, 1]]})";
constexpr const char* kGf3AllRays =
    R"({"p": 3, "dim": 2, "states": [[0, 1], [1, 0], [1, 1], [1, 2]]})";
constexpr const char* kGf5AllRays =
    R"({"p": 5, "dim": 2, "states": [[0, 1], [1, 0], [1, 1], [1, 2], [1, 3], [1, 4]]})";

// Companion maps of the first rootless monic quadratic per field:
// x^2+x+1, x^2+1, x^2+2, x^2+1 for p = 2, 3, 5, 7.
constexpr const char* kGf2Companion =
    R"({"p": 2, "M0": [[1, 0], [0, 1]], "M1": [[0, 1], [1, 1]]})";
constexpr const char* kGf3Companion =
    R"({"p": 3, "M0": [[1, 0], [0, 1]], "M1": [[0, 2], [1, 0]]})";
constexpr const char* kGf5Companion =
    R"({"p": 5, "M0": [[1, 0], [0, 1]], "M1": [[0, 3], [1, 0]]})";
constexpr const char* kGf7Companion =
    R"({"p": 7, "M0": [[1, 0], [0, 1]], "M1": [[0, 6], [1, 0]]})";

// lambda = 1/2 with the second image (|01> + |10>)/sqrt(2).
constexpr const char* kAqtSwap =
    R"({"lambda": 0.5, "C": [[[0.0, 0.0], [0.7071067811865476, 0.0]], [[0.7071067811865476, 0.0], [0.0, 0.0]]], "tolerance": 1e-9})";

constexpr Entry kFixtures[] = {
    {"z3-reducible", "hiding-spec", kZ3Reducible},
    {"gf2-all-rays", "state-set", kGf2AllRays},
    {"gf3-all-rays", "state-set", kGf3AllRays},
    {"gf5-all-rays", "state-set", kGf5AllRays},
    {"gf2-companion", "hiding-spec", kGf2Companion},
    {"gf3-companion", "hiding-spec", kGf3Companion},
    {"gf5-companion", "hiding-spec", kGf5Companion},
    {"gf7-companion", "hiding-spec", kGf7Companion},
    {"aqt-swap", "aqt-instance", kAqtSwap},
};

const Entry* find_entry(const std::string& name) {
  for (const Entry& e : kFixtures) {
    if (name == e.name) return &e;
  }
  return nullptr;
}

}  // namespace

std::vector<FixtureInfo> fixture_catalog() {
  std::vector<FixtureInfo> out;
  for (const Entry& e : kFixtures) {
    out.push_back({e.name, e.kind});
  }
  return out;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("MQT_FIXTURE_DIR")) {
    return env;
  }
  return "fixtures";
}

Json embedded_fixture(const std::string& name) {
  const Entry* e = find_entry(name);
  if (!e) {
    throw DomainError("unknown fixture \"" + name + "\"");
  }
  return Json::parse(e->text);
}

Json load_fixture(const std::string& name) {
  const Entry* e = find_entry(name);
  if (!e) {
    throw DomainError("unknown fixture \"" + name + "\"");
  }
  std::ifstream file(fixture_dir() + "/" + name + ".json");
  if (file) {
    Json j = Json::parse(file, nullptr, false);
    if (j.is_discarded()) {
      throw DomainError("fixture file for \"" + name +
                        "\" is not valid JSON");
    }
    return j;
  }
  return Json::parse(e->text);
}

}  // namespace mqt
