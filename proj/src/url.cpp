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

#include "wvlab/url.hpp"

#include <algorithm>
#include <cctype>

#include "wvlab/error.hpp"

namespace wvlab {
namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_host_char(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '.' || c == '_';
}

int parse_port(std::string_view text, std::string_view raw) {
  if (text.empty() || text.size() > 5 ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("invalid port in '" + std::string(raw) + "'");
  }
  int port = 0;
  for (char c : text) port = port * 10 + (c - '0');
  if (port < 1 || port > 65535) {
    throw ParseError("port out of range in '" + std::string(raw) + "'");
  }
  return port;
}

}  // namespace

int default_port(std::string_view scheme) {
  return scheme == "https" ? 443 : 80;
}

std::string Url::str() const {
  std::string out = scheme + "://" + host;
  if (port != default_port(scheme)) out += ":" + std::to_string(port);
  out += path;
  if (query) out += "?" + *query;
  if (fragment) out += "#" + *fragment;
  return out;
}

std::string Origin::str() const {
  std::string out = scheme + "://" + host;
  if (port != default_port(scheme)) out += ":" + std::to_string(port);
  return out;
}

Url parse_url(std::string_view raw) {
  const auto sep = raw.find("://");
  if (sep == std::string_view::npos || sep == 0) {
    throw ParseError("missing scheme in '" + std::string(raw) + "'");
  }
  Url url;
  url.scheme = lowercase(raw.substr(0, sep));
  if (url.scheme != "http" && url.scheme != "https") {
    throw ParseError("unsupported scheme '" + url.scheme + "'");
  }

  std::string_view rest = raw.substr(sep + 3);
  const auto authority_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, authority_end);
  rest = authority_end == std::string_view::npos ? std::string_view{}
                                                 : rest.substr(authority_end);

  if (authority.find('@') != std::string_view::npos) {
    throw ParseError("userinfo is not supported in '" + std::string(raw) + "'");
  }
  std::string_view host = authority;
  url.port = default_port(url.scheme);
  if (const auto colon = authority.find(':'); colon != std::string_view::npos) {
    host = authority.substr(0, colon);
    url.port = parse_port(authority.substr(colon + 1), raw);
  }
  if (host.empty()) {
    throw ParseError("empty host in '" + std::string(raw) + "'");
  }
  if (!std::all_of(host.begin(), host.end(),
                   [](unsigned char c) { return is_host_char(c); })) {
    throw ParseError("invalid host in '" + std::string(raw) + "'");
  }
  url.host = lowercase(host);

  if (const auto hash = rest.find('#'); hash != std::string_view::npos) {
    url.fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  if (const auto qmark = rest.find('?'); qmark != std::string_view::npos) {
    url.query = std::string(rest.substr(qmark + 1));
    rest = rest.substr(0, qmark);
  }
  url.path = rest.empty() ? "/" : std::string(rest);
  return url;
}

Origin origin_of(const Url& url) {
  return Origin{url.scheme, url.host, url.port};
}

bool same_origin(const Origin& a, const Origin& b) {
  return a.scheme == b.scheme && a.host == b.host && a.port == b.port;
}

}  // namespace wvlab
