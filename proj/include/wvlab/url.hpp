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
#include <string>
#include <string_view>

namespace wvlab {

/// A parsed http(s) URL. Scheme and host are lowercase, the port is always
/// populated and the path always starts with '/'.
struct Url {
  std::string scheme;
  std::string host;
  int port = 0;
  std::string path = "/";
  std::optional<std::string> query;
  std::optional<std::string> fragment;

  /// Canonical text form; the default port is omitted.
  std::string str() const;

  friend bool operator==(const Url&, const Url&) = default;
};

/// The (scheme, host, port) security principal of a Url.
struct Origin {
  std::string scheme;
  std::string host;
  int port = 0;

  std::string str() const;

  friend bool operator==(const Origin&, const Origin&) = default;
  friend auto operator<=>(const Origin&, const Origin&) = default;
};

int default_port(std::string_view scheme);

/// Throws ParseError on a missing or unsupported scheme, userinfo, an empty
/// host, or a port that is not a decimal number in [1, 65535].
Url parse_url(std::string_view raw);

Origin origin_of(const Url& url);

bool same_origin(const Origin& a, const Origin& b);

}  // namespace wvlab
