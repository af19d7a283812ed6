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

#include "wvlab/device.hpp"

#include "wvlab/error.hpp"

namespace wvlab {

std::string_view to_string(Permission p) {
  return p == Permission::Internet ? "INTERNET" : "READ_CONTACT";
}

std::optional<Permission> permission_from_string(std::string_view s) {
  if (s == "INTERNET") return Permission::Internet;
  if (s == "READ_CONTACT") return Permission::ReadContact;
  return std::nullopt;
}

void Device::add_contact(Contact c) {
  if (c.display_name.empty()) throw ValidationError("contact display_name must not be empty");
  contacts_.push_back(std::move(c));
}

std::vector<Contact> Device::read_contacts() const {
  if (!has_permission(Permission::ReadContact)) {
    timeline_->record(AuditKind::PermissionDenied, "READ_CONTACT", "read_contacts");
    throw PermissionDenied("READ_CONTACT not granted");
  }
  timeline_->record(AuditKind::ContactsRead, "contacts",
                    std::to_string(contacts_.size()) + " contacts");
  return contacts_;
}

void Device::guard_network() const {
  if (!has_permission(Permission::Internet)) {
    timeline_->record(AuditKind::PermissionDenied, "INTERNET", "network access");
    throw PermissionDenied("INTERNET not granted");
  }
}

}  // namespace wvlab
