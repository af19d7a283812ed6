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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wvlab/cookie_jar.hpp"

namespace wvlab {

enum class AuditKind {
  HookInstalled,
  HookDecision,
  CookieRead,
  ExfilPost,
  ContactsRead,
  PermissionDenied,
  PageLoaded,
  CookieRejected,
};

std::string_view to_string(AuditKind k);
std::optional<AuditKind> audit_kind_from_string(std::string_view s);

/// `subject` carries the kind's argument: the URL for CookieRead and
/// PageLoaded, the target for ExfilPost, the permission for
/// PermissionDenied.
struct AuditEvent {
  Tick tick = 0;
  AuditKind kind = AuditKind::HookInstalled;
  std::string subject;
  std::string detail;

  friend bool operator==(const AuditEvent&, const AuditEvent&) = default;
};

/// The logical clock of one world plus its audit trail. Ticks are handed
/// out strictly increasing, shared by audit events and network exchanges.
class Timeline {
 public:
  Tick next() { return ++now_; }
  Tick now() const { return now_; }

  Tick record(AuditKind kind, std::string subject, std::string detail = {}) {
    const Tick t = next();
    events_.push_back({t, kind, std::move(subject), std::move(detail)});
    return t;
  }

  std::span<const AuditEvent> events() const { return events_; }

 private:
  Tick now_ = 0;
  std::vector<AuditEvent> events_;
};

}  // namespace wvlab
