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

#include "wvlab/cookie_jar.hpp"

#include <algorithm>
#include <cctype>

#include "wvlab/error.hpp"

namespace wvlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void validate(const Cookie& c) {
  if (c.name.empty() || c.name.find_first_of("=;\r\n") != std::string::npos) {
    throw CookieFormatError("invalid cookie name '" + c.name + "'");
  }
  if (c.value.find_first_of(";\r\n") != std::string::npos) {
    throw CookieFormatError("invalid value for cookie '" + c.name + "'");
  }
  if (c.domain.empty()) {
    throw CookieFormatError("empty domain for cookie '" + c.name + "'");
  }
  if (c.path.empty() || c.path.front() != '/') {
    throw CookieFormatError("cookie path must start with '/'");
  }
}

}  // namespace

bool domain_match(std::string_view host, std::string_view cookie_domain) {
  if (host == cookie_domain) return true;
  return host.size() > cookie_domain.size() && host.ends_with(cookie_domain) &&
         host[host.size() - cookie_domain.size() - 1] == '.';
}

bool path_match(std::string_view request_path, std::string_view cookie_path) {
  if (request_path == cookie_path) return true;
  if (!request_path.starts_with(cookie_path)) return false;
  return cookie_path.ends_with('/') || request_path[cookie_path.size()] == '/';
}

Cookie parse_set_cookie(std::string_view header, const Url& source) {
  Cookie c;
  c.domain = source.host;
  bool first = true;
  while (!header.empty()) {
    const auto semi = header.find(';');
    std::string_view part = trim(header.substr(0, semi));
    header = semi == std::string_view::npos ? std::string_view{} : header.substr(semi + 1);
    const auto eq = part.find('=');
    if (first) {
      if (eq == std::string_view::npos) {
        throw CookieFormatError("Set-Cookie without name=value: '" + std::string(part) + "'");
      }
      c.name = std::string(trim(part.substr(0, eq)));
      c.value = std::string(trim(part.substr(eq + 1)));
      first = false;
      continue;
    }
    if (eq == std::string_view::npos) continue;
    const std::string key = lowercase(trim(part.substr(0, eq)));
    std::string_view val = trim(part.substr(eq + 1));
    if (key == "domain") {
      if (val.starts_with('.')) val.remove_prefix(1);
      c.domain = lowercase(val);
    } else if (key == "path") {
      c.path = std::string(val);
    }
  }
  if (first) throw CookieFormatError("empty Set-Cookie header");
  validate(c);
  return c;
}

std::string format_set_cookie(const Cookie& c) {
  return c.pair() + "; domain=" + c.domain + "; path=" + c.path;
}

SetResult CookieJar::set_cookie(const Url& source, Cookie c, Tick now) {
  validate(c);
  if (!domain_match(source.host, c.domain)) {
    throw ScopeError("host '" + source.host + "' may not set a cookie for domain '" +
                     c.domain + "'");
  }
  if (!accept_) return SetResult::Rejected;

  c.created_at = now;
  history_.push_back({c, origin_of(source)});
  auto same_key = [&](const Cookie& e) {
    return e.name == c.name && e.domain == c.domain && e.path == c.path;
  };
  if (auto it = std::find_if(entries_.begin(), entries_.end(), same_key); it != entries_.end()) {
    *it = std::move(c);
    return SetResult::Replaced;
  }
  entries_.push_back(std::move(c));
  return SetResult::Stored;
}

std::optional<std::string> CookieJar::get_cookie(const Url& url) const {
  std::vector<const Cookie*> matched;
  for (const auto& e : entries_) {
    if (domain_match(url.host, e.domain) && path_match(url.path, e.path)) {
      matched.push_back(&e);
    }
  }
  if (matched.empty()) return std::nullopt;
  std::stable_sort(matched.begin(), matched.end(), [](const Cookie* a, const Cookie* b) {
    if (a->path.size() != b->path.size()) return a->path.size() > b->path.size();
    return a->created_at < b->created_at;
  });
  std::string out;
  for (const Cookie* c : matched) {
    if (!out.empty()) out += "; ";
    out += c->pair();
  }
  return out;
}

}  // namespace wvlab
