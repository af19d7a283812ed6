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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wvlab/cookie_jar.hpp"
#include "wvlab/device.hpp"
#include "wvlab/http.hpp"
#include "wvlab/timeline.hpp"

namespace wvlab {

/// Cookie values shorter than this are never searched for in request
/// bodies. Short values ("1", "en") collide with ordinary traffic; the cost
/// is that short session tokens go unnoticed.
inline constexpr std::size_t kMinCookieValueLength = 8;

enum class FindingKind { CookieExfiltration, ContactExfiltration, CrossOriginCookieRead };
enum class Severity { Info, High };

std::string_view to_string(FindingKind k);
std::string_view to_string(Severity s);

struct Evidence {
  std::string datum;  // cookie "name=value" or "phone:..." / "email:..."
  std::optional<Origin> source_origin;
  Origin sink_origin;
  Tick net_tick = 0;
  std::optional<Tick> audit_tick;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Finding {
  FindingKind kind = FindingKind::CookieExfiltration;
  Severity severity = Severity::High;
  Evidence evidence;

  /// The tick findings are ordered by: the exchange for exfiltration, the
  /// read itself for CrossOriginCookieRead.
  Tick tick() const;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Everything the detector gets to see about one run. Contacts are the
/// device's sensitive inventory, not knowledge of what the attacker did.
struct DetectorInput {
  std::span<const AuditEvent> audit;
  std::span<const NetRecord> net;
  std::span<const CookieProvenance> jar_history;
  std::span<const Contact> contacts;
};

/// Retrospective analysis of one run's logs. Only device-initiated
/// exchanges are inspected. Findings are sorted by (tick, kind).
std::vector<Finding> analyze(const DetectorInput& input);

/// An attack event known from the scenario side: the kind the detector
/// should report and the tick it should report it at.
struct GroundTruthEvent {
  FindingKind kind = FindingKind::CookieExfiltration;
  Tick tick = 0;

  friend bool operator==(const GroundTruthEvent&, const GroundTruthEvent&) = default;
};

struct PrecisionRecall {
  double precision = 1.0;
  double recall = 1.0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
};

/// A finding is a true positive when it matches an unclaimed ground-truth
/// event of the same kind and tick. With no findings precision is 1; with
/// no ground truth recall is 1.
PrecisionRecall precision_recall(std::span<const Finding> findings,
                                 std::span<const GroundTruthEvent> truth);

}  // namespace wvlab
