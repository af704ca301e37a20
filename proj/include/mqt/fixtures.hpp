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

#ifndef MQT_FIXTURES_HPP
#define MQT_FIXTURES_HPP

#include <string>
#include <vector>

#include "mqt/json_io.hpp"

namespace mqt {

/// A named, runnable input shipped with the artifact: a state set, a hiding
/// map, or an AQT instance.
struct FixtureInfo {
  std::string name;
  std::string kind;  // "state-set" | "hiding-spec" | "aqt-instance"
};

/// All fixture names with their kinds, in stable order.
std::vector<FixtureInfo> fixture_catalog();

/// Directory searched for fixture files: the MQT_FIXTURE_DIR environment
/// variable when set, otherwise "fixtures" under the working directory.
std::string fixture_dir();

/// Loads a fixture by name. A file <dir>/<name>.json takes precedence so
/// shipped fixtures stay editable and tampering is observable; otherwise
/// the embedded copy is used. Unknown names raise DomainError.
Json load_fixture(const std::string& name);

/// The embedded copy of a fixture, bypassing any file.
Json embedded_fixture(const std::string& name);

}  // namespace mqt

#endif
