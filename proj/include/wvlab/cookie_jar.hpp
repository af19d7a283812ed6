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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wvlab/url.hpp"

namespace wvlab {

/// Logical clock value. Every dispatched event in a world gets a fresh tick.
using Tick = std::uint64_t;

struct Cookie {
  std::string name;
  std::string value;
  std::string domain;
  std::string path = "/";
  Tick created_at = 0;

  /// "name=value"
  std::string pair() const { return name + "=" + value; }

  friend bool operator==(const Cookie&, const Cookie&) = default;
};

/// A cookie accepted by the jar together with the origin of the response
/// that set it.
struct CookieProvenance {
  Cookie cookie;
  Origin source;
};

enum class SetResult { Stored, Replaced, Rejected };

/// host == cookie_domain, or host ends with "." + cookie_domain.
bool domain_match(std::string_view host, std::string_view cookie_domain);

/// request_path == cookie_path, or cookie_path is a prefix of request_path
/// that ends at a '/' or is followed by one.
bool path_match(std::string_view request_path, std::string_view cookie_path);

/// Parses a "name=value; domain=<d>; path=<p>" header value as received
/// from `source`. A missing domain defaults to the source host and a
/// missing path to "/". Unknown attributes are ignored.
Cookie parse_set_cookie(std::string_view header, const Url& source);

/// Renders the Set-Cookie form parsed by parse_set_cookie.
std::string format_set_cookie(const Cookie& c);

/// The store behind getCookie. At most one entry per (name, domain, path).
class CookieJar {
 public:
  void set_accept(bool on) { accept_ = on; }
  bool accepts() const { return accept_; }

  /// Stores `c` with created_at = now, replacing any entry with the same
  /// key. Returns Rejected (and leaves the jar untouched) when accept is
  /// off. Throws ScopeError when c.domain does not cover source.host and
  /// CookieFormatError when name or value contain separators.
  SetResult set_cookie(const Url& source, Cookie c, Tick now);

  /// "n1=v1; n2=v2" over every entry whose domain and path match `url`,
  /// longest path first, then earliest created_at. Absent when none match.
  std::optional<std::string> get_cookie(const Url& url) const;

  std::span<const Cookie> entries() const { return entries_; }
  std::span<const CookieProvenance> history() const { return history_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Cookie> entries_;
  std::vector<CookieProvenance> history_;
  bool accept_ = true;
};

}  // namespace wvlab
