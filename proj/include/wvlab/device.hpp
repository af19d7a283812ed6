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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wvlab/cookie_jar.hpp"
#include "wvlab/timeline.hpp"

namespace wvlab {

/// The two gates the attacks depend on. READ_CONTACT keeps the spelling of
/// the modeled attack description; the platform itself says READ_CONTACTS.
enum class Permission { Internet, ReadContact };

std::string_view to_string(Permission p);
std::optional<Permission> permission_from_string(std::string_view s);

struct Contact {
  std::string display_name;
  std::string phone;
  std::optional<std::string> email;

  friend bool operator==(const Contact&, const Contact&) = default;
};

/// The simulated phone: granted permissions, the contact store and the
/// WebView cookie jar. Permission checks never mutate state.
class Device {
 public:
  explicit Device(Timeline& timeline) : timeline_(&timeline) {}

  void grant(Permission p) { permissions_.insert(p); }
  void revoke(Permission p) { permissions_.erase(p); }
  bool has_permission(Permission p) const { return permissions_.contains(p); }

  /// Seeds the contact store. Throws ValidationError on an empty name.
  void add_contact(Contact c);

  /// Returns every contact in insertion order and audits ContactsRead.
  /// Without READ_CONTACT, audits PermissionDenied and throws.
  std::vector<Contact> read_contacts() const;

  /// Passes silently with INTERNET; otherwise audits and throws
  /// PermissionDenied.
  void guard_network() const;

  CookieJar& cookie_jar() { return jar_; }
  const CookieJar& cookie_jar() const { return jar_; }
  std::span<const Contact> contacts() const { return contacts_; }

 private:
  Timeline* timeline_;
  std::set<Permission> permissions_;
  std::vector<Contact> contacts_;
  CookieJar jar_;
};

}  // namespace wvlab
