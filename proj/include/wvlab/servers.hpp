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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wvlab/http.hpp"

namespace wvlab {

inline constexpr std::string_view kSessionCookieName = "sessionid";

/// Value of cookie `name` in a Cookie request header.
std::optional<std::string> cookie_header_value(std::string_view header, std::string_view name);

struct BoardPost {
  std::string author;
  std::string text;

  friend bool operator==(const BoardPost&, const BoardPost&) = default;
};

/// A phorum-style message board that keys sessions on a cookie.
///
///   GET  /, /login, /forum/list   public pages
///   POST /login  {username,password}  302 + Set-Cookie on success, else 401
///   GET  /account                 200 with the session's username, else 401
///   POST /post   {text}           200 and appends a post, else 401
///
/// Anything else is 404 (unknown path) or 405 (known path, wrong method).
class BoardServer {
 public:
  explicit BoardServer(std::string host) : host_(std::move(host)) {}

  void add_user(std::string username, std::string password);

  HttpResponse handle(const HttpRequest& req, Tick now);

  /// Sequential session ids: "s" followed by the zero-padded counter.
  static std::string session_id(std::uint64_t counter);

  const std::string& host() const { return host_; }
  std::span<const BoardPost> posts() const { return posts_; }
  const std::map<std::string, std::string>& sessions() const { return sessions_; }

 private:
  std::optional<std::string> session_user(const HttpRequest& req) const;
  HttpResponse login(const HttpRequest& req);
  HttpResponse account(const HttpRequest& req) const;
  HttpResponse post(const HttpRequest& req);
  HttpResponse forum_list() const;

  std::string host_;
  std::map<std::string, std::string> users_;
  std::map<std::string, std::string> sessions_;
  std::vector<BoardPost> posts_;
  std::uint64_t session_counter_ = 0;
};

/// The attacker's drop box. Stores POST/PUT bodies verbatim.
class CollectorServer {
 public:
  struct Payload {
    Tick tick = 0;
    std::string source_path;
    std::string body;

    friend bool operator==(const Payload&, const Payload&) = default;
  };

  HttpResponse handle(const HttpRequest& req, Tick now);

  std::span<const Payload> payloads() const { return payloads_; }

 private:
  std::vector<Payload> payloads_;
};

}  // namespace wvlab
