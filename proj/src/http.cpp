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

#include "wvlab/http.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "wvlab/error.hpp"

namespace wvlab {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::Get, "GET"},
    {Method::Head, "HEAD"},
    {Method::Post, "POST"},
    {Method::Put, "PUT"},
    {Method::Delete, "DELETE"},
    {Method::Trace, "TRACE"},
    {Method::Options, "OPTIONS"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

}  // namespace

std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "GET";
}

std::optional<Method> method_from_string(std::string_view s) {
  for (const auto& [method, name] : kMethodNames) {
    if (name == s) return method;
  }
  return std::nullopt;
}

bool method_allows_body(Method m) {
  return m != Method::Get && m != Method::Head && m != Method::Trace;
}

std::optional<std::string> find_header(const Headers& headers, std::string_view name) {
  for (const auto& [key, value] : headers) {
    if (iequals(key, name)) return value;
  }
  return std::nullopt;
}

std::vector<std::string> find_headers(const Headers& headers, std::string_view name) {
  std::vector<std::string> out;
  for (const auto& [key, value] : headers) {
    if (iequals(key, name)) out.push_back(value);
  }
  return out;
}

bool is_known_status(int status) {
  switch (status) {
    case 200: case 302: case 401: case 403: case 404: case 405:
      return true;
    default:
      return false;
  }
}

HttpRequest build_request(Method method, std::string_view uri_raw, Headers headers,
                          std::optional<std::string> body) {
  HttpRequest req{method, parse_url(uri_raw), std::move(headers), std::move(body)};
  if (req.body && !method_allows_body(method)) {
    throw BodyNotAllowed(std::string(to_string(method)) + " request may not carry a body");
  }
  for (std::size_t i = 0; i < req.headers.size(); ++i) {
    const auto& name = req.headers[i].first;
    if (iequals(name, "cookie")) continue;
    for (std::size_t j = i + 1; j < req.headers.size(); ++j) {
      if (iequals(name, req.headers[j].first)) {
        throw DuplicateHeader("duplicate request header '" + name + "'");
      }
    }
  }
  return req;
}

std::string_view to_string(Initiator i) {
  return i == Initiator::Device ? "device" : "external";
}

void VirtualNet::register_server(std::string host, Handler handler) {
  if (servers_.contains(host)) {
    throw DuplicateHost("host '" + host + "' is already registered");
  }
  servers_.emplace(std::move(host), std::move(handler));
}

bool VirtualNet::has_server(std::string_view host) const {
  return servers_.find(host) != servers_.end();
}

HttpResponse VirtualNet::execute(const HttpRequest& req, Tick now,
                                 std::optional<Origin> requester_origin,
                                 Initiator initiator) {
  const auto it = servers_.find(req.uri.host);
  if (it == servers_.end()) {
    throw HostUnreachable("no server for host '" + req.uri.host + "'");
  }
  HttpResponse response = it->second(req, now);
  log_.push_back({now, req, response, std::move(requester_origin), initiator});
  return response;
}

}  // namespace wvlab
