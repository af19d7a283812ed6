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

// Independent oracles and whole-system invariant checks. Nothing here calls
// the matching or ordering code it verifies.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wvlab/cookie_jar.hpp"
#include "wvlab/scenario.hpp"

namespace wvlab::checks {

inline constexpr std::uint64_t kDefaultSeed = 0;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Label-wise suffix test: the labels of `cookie_domain` are the trailing
/// labels of `host`.
bool oracle_domain_match(const std::string& host, const std::string& cookie_domain);

/// `cookie_path` is one of the segment prefixes of `request_path`.
bool oracle_path_match(const std::string& request_path, const std::string& cookie_path);

/// Filter, selection-sort and join over a snapshot of jar entries.
std::optional<std::string> oracle_get_cookie(std::span<const Cookie> entries, const Url& url);

/// A randomized jar (at most 32 entries) and query URL.
struct CookieCase {
  CookieJar jar;
  Url url;
};

CookieCase random_cookie_case(std::mt19937_64& rng);

struct Discrepancy {
  std::size_t case_index = 0;
  std::string url;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
};

struct OracleRun {
  std::size_t cases = 0;
  std::vector<Discrepancy> discrepancies;
};

OracleRun cookie_oracle_equivalence(std::uint64_t seed, std::size_t cases);

/// Every host of at most `max_labels` labels, each label 1..`max_label_len`
/// letters from {a, b, c}.
std::vector<std::string> small_hosts(std::size_t max_labels, std::size_t max_label_len);

/// Reflexivity, symmetry and transitivity of same_origin over parsed
/// origins built from small_hosts(3, 1), two schemes and three ports.
/// Returns the number of violations.
std::size_t same_origin_violations();

/// domain_match against the label-suffix oracle over all pairs of
/// small_hosts(3, 2). Returns the number of disagreements.
std::size_t domain_match_violations();

/// The full `check` suite: built-in expectations, attack/defense duality,
/// victim blindness, replay determinism, detector quality and the oracle
/// suites. Scenarios run concurrently; results come back in a fixed order.
std::vector<CheckResult> run_all(std::uint64_t seed);

/// Device-initiated exchanges in a report.
std::size_t device_exchanges(const ScenarioReport& r);

}  // namespace wvlab::checks
