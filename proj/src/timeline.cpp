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

#include "wvlab/timeline.hpp"

#include <array>
#include <utility>

namespace wvlab {
namespace {

constexpr std::array<std::pair<AuditKind, std::string_view>, 8> kNames{{
    {AuditKind::HookInstalled, "HookInstalled"},
    {AuditKind::HookDecision, "HookDecision"},
    {AuditKind::CookieRead, "CookieRead"},
    {AuditKind::ExfilPost, "ExfilPost"},
    {AuditKind::ContactsRead, "ContactsRead"},
    {AuditKind::PermissionDenied, "PermissionDenied"},
    {AuditKind::PageLoaded, "PageLoaded"},
    {AuditKind::CookieRejected, "CookieRejected"},
}};

}  // namespace

std::string_view to_string(AuditKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<AuditKind> audit_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

}  // namespace wvlab
