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

#include "wvlab/servers.hpp"

#include <cstdio>

#include "wvlab/cookie_jar.hpp"
#include "wvlab/form.hpp"

namespace wvlab {
namespace {

HttpResponse respond(int status, std::string body, Headers headers = {}) {
  return HttpResponse{status, std::move(headers), std::move(body)};
}

HttpResponse html(std::string_view title, std::string_view content) {
  return respond(200, "<html><head><title>" + std::string(title) + "</title></head><body>" +
                          std::string(content) + "</body></html>");
}

const std::string& request_body(const HttpRequest& req) {
  static const std::string empty;
  return req.body ? *req.body : empty;
}

}  // namespace

std::optional<std::string> cookie_header_value(std::string_view header, std::string_view name) {
  while (!header.empty()) {
    const auto semi = header.find(';');
    std::string_view part = header.substr(0, semi);
    header = semi == std::string_view::npos ? std::string_view{} : header.substr(semi + 1);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    const auto eq = part.find('=');
    if (eq != std::string_view::npos && part.substr(0, eq) == name) {
      return std::string(part.substr(eq + 1));
    }
  }
  return std::nullopt;
}

void BoardServer::add_user(std::string username, std::string password) {
  users_.insert_or_assign(std::move(username), std::move(password));
}

std::string BoardServer::session_id(std::uint64_t counter) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%08llu", static_cast<unsigned long long>(counter));
  return buf;
}

HttpResponse BoardServer::handle(const HttpRequest& req, Tick) {
  const std::string& path = req.uri.path;
  const Method m = req.method;
  if (path == "/" || path == "/forum/list") {
    if (m != Method::Get) return respond(405, "method not allowed");
    return path == "/" ? html("Board", "<a href=\"/login\">log in</a> <a href=\"/forum/list\">forum</a>")
                       : forum_list();
  }
  if (path == "/login") {
    if (m == Method::Get) {
      return html("Log in",
                  "<form method=\"post\" action=\"/login\">"
                  "<input name=\"username\"><input name=\"password\" type=\"password\">"
                  "</form>");
    }
    if (m != Method::Post) return respond(405, "method not allowed");
    return login(req);
  }
  if (path == "/account") {
    if (m != Method::Get) return respond(405, "method not allowed");
    return account(req);
  }
  if (path == "/post") {
    if (m != Method::Post) return respond(405, "method not allowed");
    return post(req);
  }
  return respond(404, "not found");
}

std::optional<std::string> BoardServer::session_user(const HttpRequest& req) const {
  for (const auto& header : find_headers(req.headers, "Cookie")) {
    if (auto sid = cookie_header_value(header, kSessionCookieName)) {
      if (auto it = sessions_.find(*sid); it != sessions_.end()) return it->second;
    }
  }
  return std::nullopt;
}

HttpResponse BoardServer::login(const HttpRequest& req) {
  const FormFields form = form_decode(request_body(req));
  const auto user = form_value(form, "username");
  const auto pass = form_value(form, "password");
  const auto it = user ? users_.find(*user) : users_.end();
  if (it == users_.end() || !pass || it->second != *pass) {
    return respond(401, "invalid credentials");
  }
  const std::string sid = session_id(++session_counter_);
  sessions_.emplace(sid, *user);
  Cookie cookie{std::string(kSessionCookieName), sid, host_, "/", 0};
  return respond(302, "", {{"Location", "/forum/list"}, {"Set-Cookie", format_set_cookie(cookie)}});
}

HttpResponse BoardServer::account(const HttpRequest& req) const {
  const auto user = session_user(req);
  if (!user) return respond(401, "login required");
  return html("Account", "<p>Logged in as " + *user + "</p>");
}

HttpResponse BoardServer::post(const HttpRequest& req) {
  const auto user = session_user(req);
  if (!user) return respond(401, "login required");
  const auto text = form_value(form_decode(request_body(req)), "text").value_or("");
  posts_.push_back({*user, text});
  return html("Posted", "<p>Message posted by " + *user + "</p>");
}

HttpResponse BoardServer::forum_list() const {
  std::string items = "<ul>";
  for (const auto& p : posts_) items += "<li>" + p.author + ": " + p.text + "</li>";
  items += "</ul>";
  return html("Forum", items);
}

HttpResponse CollectorServer::handle(const HttpRequest& req, Tick now) {
  if (req.method != Method::Post && req.method != Method::Put) {
    return respond(405, "");
  }
  payloads_.push_back({now, req.uri.path, request_body(req)});
  return respond(200, "");
}

}  // namespace wvlab
