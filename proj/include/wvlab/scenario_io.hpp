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

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wvlab/scenario.hpp"

namespace wvlab {

using Json = nlohmann::ordered_json;

/// Scenario document:
///   {name, world:{board_host, collector_host?, users:[{username,password}],
///    contacts:[{display_name,phone,email?}], permissions:[...]},
///    hooks:{kind, collector?}, steps:[{kind, ...}],
///    expected:{outcome, collector_contains?, board_posts_contain?,
///              attacker_matches_victim?}}
/// Throws ValidationError when the document does not match the schema.
Scenario scenario_from_json(const nlohmann::json& doc);
Json scenario_to_json(const Scenario& s);

/// Reads and parses a scenario file. Throws ParseError for unreadable or
/// malformed JSON and ValidationError for schema problems.
Scenario load_scenario_file(const std::filesystem::path& path);

/// Key order is fixed; output carries no wall-clock data.
Json report_to_json(const ScenarioReport& r);
std::string report_to_text(const ScenarioReport& r);

}  // namespace wvlab
