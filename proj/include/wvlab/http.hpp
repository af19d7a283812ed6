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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wvlab/cookie_jar.hpp"
#include "wvlab/url.hpp"

namespace wvlab {

enum class Method { Get, Head, Post, Put, Delete, Trace, Options };

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

/// GET, HEAD and TRACE never carry a body.
bool method_allows_body(Method m);

using Header = std::pair<std::string, std::string>;
using Headers = std::vector<Header>;

/// First header named `name`, compared case-insensitively.
std::optional<std::string> find_header(const Headers& headers, std::string_view name);
std::vector<std::string> find_headers(const Headers& headers, std::string_view name);

struct HttpRequest {
  Method method = Method::Get;
  Url uri;
  Headers headers;
  std::optional<std::string> body;

  std::optional<std::string> header(std::string_view name) const {
    return find_header(headers, name);
  }

  friend bool operator==(const HttpRequest&, const HttpRequest&) = default;
};

struct HttpResponse {
  int status = 200;
  Headers headers;
  std::string body;

  std::optional<std::string> header(std::string_view name) const {
    return find_header(headers, name);
  }

  friend bool operator==(const HttpResponse&, const HttpResponse&) = default;
};

/// Status codes the simulated servers may answer with.
bool is_known_status(int status);

/// Validates and assembles a request. Throws ParseError for a bad URI,
/// BodyNotAllowed for a body on GET/HEAD/TRACE and DuplicateHeader when a
/// header other than Cookie appears twice.
HttpRequest build_request(Method method, std::string_view uri_raw, Headers headers = {},
                          std::optional<std::string> body = std::nullopt);

/// Who put a request on the wire. The device's own traffic (page loads and
/// anything its app sends) is Device; off-device parties are External.
enum class Initiator { Device, External };

std::string_view to_string(Initiator i);

struct NetRecord {
  Tick tick = 0;
  HttpRequest request;
  HttpResponse response;
  std::optional<Origin> requester_origin;
  Initiator initiator = Initiator::Device;
};

using Handler = std::function<HttpResponse(const HttpRequest&, Tick)>;

/// A host-keyed dispatch table standing in for DNS, TCP and the servers.
/// Every exchange that reaches a handler is logged in dispatch order.
class VirtualNet {
 public:
  /// Throws DuplicateHost when `host` already has a handler.
  void register_server(std::string host, Handler handler);
  bool has_server(std::string_view host) const;

  /// Routes to the handler registered for req.uri.host and returns its
  /// response unchanged. Throws HostUnreachable (without logging) when no
  /// handler is registered.
  HttpResponse execute(const HttpRequest& req, Tick now,
                       std::optional<Origin> requester_origin = std::nullopt,
                       Initiator initiator = Initiator::Device);

  std::span<const NetRecord> log() const { return log_; }

 private:
  std::map<std::string, Handler, std::less<>> servers_;
  std::vector<NetRecord> log_;
};

}  // namespace wvlab
