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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wvlab/detector.hpp"
#include "wvlab/device.hpp"
#include "wvlab/http.hpp"
#include "wvlab/servers.hpp"
#include "wvlab/webview.hpp"

namespace wvlab {

struct UserCredential {
  std::string username;
  std::string password;

  friend bool operator==(const UserCredential&, const UserCredential&) = default;
};

struct WorldSetup {
  std::string board_host;
  std::optional<std::string> collector_host;
  std::vector<UserCredential> users;
  std::vector<Contact> contacts;
  std::vector<Permission> permissions;

  friend bool operator==(const WorldSetup&, const WorldSetup&) = default;
};

namespace step {

struct LoadUrl { std::string url; friend bool operator==(const LoadUrl&, const LoadUrl&) = default; };
struct Navigate { std::string url; friend bool operator==(const Navigate&, const Navigate&) = default; };
struct Login {
  std::string username;
  std::string password;
  friend bool operator==(const Login&, const Login&) = default;
};
struct PostMessage { std::string text; friend bool operator==(const PostMessage&, const PostMessage&) = default; };
/// Off-device: replay the stolen session cookie against a board path.
struct AttackerReplayCookie {
  std::string path;
  friend bool operator==(const AttackerReplayCookie&, const AttackerReplayCookie&) = default;
};
/// Off-device: post to the board under the stolen session.
struct AttackerPost { std::string text; friend bool operator==(const AttackerPost&, const AttackerPost&) = default; };
struct GrantPermission {
  Permission permission;
  friend bool operator==(const GrantPermission&, const GrantPermission&) = default;
};
struct RevokePermission {
  Permission permission;
  friend bool operator==(const RevokePermission&, const RevokePermission&) = default;
};

}  // namespace step

using Step = std::variant<step::LoadUrl, step::Navigate, step::Login, step::PostMessage,
                          step::AttackerReplayCookie, step::AttackerPost, step::GrantPermission,
                          step::RevokePermission>;

std::string_view step_kind(const Step& s);
bool is_attacker_step(const Step& s);

enum class Outcome { AttackSucceeded, AttackBlocked, BenignClean, Error };

std::string_view to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view s);

struct ExpectedOutcome {
  Outcome outcome = Outcome::BenignClean;
  /// Each string must appear in at least one collector payload.
  std::vector<std::string> collector_contains;
  /// Each post must be on the board at the end of the run.
  std::vector<BoardPost> board_posts_contain;
  /// Every successful attacker GET must return exactly the body the victim
  /// saw for the same path.
  bool attacker_matches_victim = false;

  friend bool operator==(const ExpectedOutcome&, const ExpectedOutcome&) = default;
};

struct Scenario {
  std::string name;
  WorldSetup world;
  HookBehavior hooks;
  std::vector<Step> steps;
  ExpectedOutcome expected;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ValidationError describing the first problem found.
void validate(const Scenario& s);

struct StepResult {
  std::size_t index = 0;
  std::string kind;
  std::string result;
};

struct NetSummary {
  Tick tick = 0;
  Initiator initiator = Initiator::Device;
  std::optional<Origin> requester_origin;
  Method method = Method::Get;
  std::string url;
  Headers request_headers;
  std::optional<std::string> request_body;
  int status = 0;
  Headers response_headers;
  std::size_t response_bytes = 0;
};

struct AttackerExchange {
  std::size_t step = 0;
  Method method = Method::Get;
  std::string path;
  int status = 0;
  std::string body;
};

struct ScenarioReport {
  std::string name;
  Outcome outcome = Outcome::BenignClean;
  std::string error;  // set when outcome is Error
  Outcome expected_outcome = Outcome::BenignClean;
  bool expected_met = false;
  std::vector<std::string> expectation_failures;
  std::vector<StepResult> steps;
  std::vector<AuditEvent> audit;
  std::vector<NetSummary> net_log;
  std::vector<CollectorServer::Payload> collector_payloads;
  std::vector<Page> pages;
  std::vector<AttackerExchange> attacker_exchanges;
  std::vector<BoardPost> board_posts;
  std::vector<GroundTruthEvent> ground_truth;
  std::vector<Finding> findings;
};

/// Builds a fresh world, runs the steps in order on one logical clock,
/// grades the result against s.expected and attaches detector findings.
/// Throws ValidationError for an invalid scenario; failures during the run
/// become Outcome::Error.
ScenarioReport run_scenario(const Scenario& s);

/// cookie_steal, session_hijack, impersonate, contact_exfil, benign_browse.
std::vector<Scenario> builtin_scenarios();
std::optional<Scenario> find_builtin(std::string_view name);

/// `s` with PassThrough hooks; the expectation becomes AttackBlocked when
/// attacker steps remain and BenignClean otherwise.
Scenario passthrough_variant(Scenario s);

/// `s` with `p` never granted; expected AttackBlocked.
Scenario permission_stripped(Scenario s, Permission p);

}  // namespace wvlab
