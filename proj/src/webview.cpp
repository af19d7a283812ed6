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

#include "wvlab/webview.hpp"

#include <array>
#include <utility>

#include "wvlab/error.hpp"
#include "wvlab/form.hpp"

namespace wvlab {
namespace {

constexpr std::array<std::pair<HookBehavior::Kind, std::string_view>, 4> kHookNames{{
    {HookBehavior::Kind::PassThrough, "PassThrough"},
    {HookBehavior::Kind::Block, "Block"},
    {HookBehavior::Kind::ExfiltrateCookies, "ExfiltrateCookies"},
    {HookBehavior::Kind::ExfiltrateContacts, "ExfiltrateContacts"},
}};

const Header kFormContentType{"Content-Type", "application/x-www-form-urlencoded"};

}  // namespace

std::string_view to_string(HookBehavior::Kind k) {
  for (const auto& [kind, name] : kHookNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<HookBehavior::Kind> hook_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kHookNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(HookDecision d) {
  switch (d) {
    case HookDecision::Proceed: return "Proceed";
    case HookDecision::Handled: return "Handled";
    case HookDecision::Blocked: return "Blocked";
  }
  return "?";
}

std::string_view to_string(LoadOutcome o) {
  switch (o) {
    case LoadOutcome::Loaded: return "Loaded";
    case LoadOutcome::Overridden: return "Overridden";
    case LoadOutcome::Blocked: return "Blocked";
    case LoadOutcome::Error: return "Error";
  }
  return "?";
}

std::string cookie_exfil_body(const Url& url, std::string_view cookie) {
  return "url=" + url.str() + "&cookie=" + std::string(cookie);
}

std::string contacts_exfil_body(std::span<const Contact> contacts) {
  FormFields fields;
  for (const auto& c : contacts) {
    fields.emplace_back("contact", c.display_name + ";" + c.phone + ";" + c.email.value_or(""));
  }
  return form_encode(fields);
}

void WebViewHost::attach_client(HookSet hooks) {
  const auto kind = hooks.on_should_override.kind;
  std::string detail(to_string(kind));
  if (hooks.on_should_override.collector) {
    detail += " -> " + hooks.on_should_override.collector->str();
  }
  hooks_ = std::move(hooks);
  timeline_->record(AuditKind::HookInstalled, "shouldOverrideUrlLoading", std::move(detail));
}

LoadOutcome WebViewHost::load_url(std::string_view raw) {
  const Url url = parse_url(raw);
  device_->guard_network();
  return open(url);
}

LoadOutcome WebViewHost::navigate(std::string_view raw) {
  const Url url = parse_url(raw);
  device_->guard_network();
  if (!current_) throw NoCurrentPage("navigate before any page was loaded");
  return open(url);
}

LoadOutcome WebViewHost::post_url(std::string_view raw, std::string body) {
  const Url url = parse_url(raw);
  device_->guard_network();
  return fetch(Method::Post, url, std::move(body));
}

LoadOutcome WebViewHost::open(const Url& url) {
  const HookDecision decision = run_hook_pipeline(url);
  timeline_->record(AuditKind::HookDecision, url.str(), std::string(to_string(decision)));
  switch (decision) {
    case HookDecision::Blocked: return LoadOutcome::Blocked;
    case HookDecision::Handled: return LoadOutcome::Overridden;
    case HookDecision::Proceed: break;
  }
  return fetch(Method::Get, url, std::nullopt);
}

HookDecision WebViewHost::run_hook_pipeline(const Url& url) {
  const HookBehavior behavior = hooks_ ? hooks_->on_should_override : HookBehavior{};
  switch (behavior.kind) {
    case HookBehavior::Kind::PassThrough:
      return HookDecision::Proceed;
    case HookBehavior::Kind::Block:
      return HookDecision::Blocked;
    case HookBehavior::Kind::ExfiltrateCookies: {
      const auto cookie = device_->cookie_jar().get_cookie(url);
      if (!cookie) return HookDecision::Proceed;
      timeline_->record(AuditKind::CookieRead, url.str(), "hook");
      exfiltrate(*behavior.collector, cookie_exfil_body(url, *cookie));
      return HookDecision::Proceed;
    }
    case HookBehavior::Kind::ExfiltrateContacts: {
      std::vector<Contact> contacts;
      try {
        contacts = device_->read_contacts();
      } catch (const PermissionDenied&) {
        return HookDecision::Proceed;
      }
      exfiltrate(*behavior.collector, contacts_exfil_body(contacts));
      return HookDecision::Proceed;
    }
  }
  return HookDecision::Proceed;
}

void WebViewHost::exfiltrate(const Url& collector, std::string body) {
  const std::string target = collector.str();
  try {
    device_->guard_network();
    HttpRequest req{Method::Post, collector, {kFormContentType}, std::move(body)};
    const HttpResponse resp = net_->execute(req, timeline_->next(), current_origin());
    timeline_->record(AuditKind::ExfilPost, target, "status " + std::to_string(resp.status));
  } catch (const Error& e) {
    timeline_->record(AuditKind::ExfilPost, target, std::string("failed: ") + e.what());
  }
}

std::optional<std::string> WebViewHost::get_cookie_api(std::string_view raw) {
  const Url url = parse_url(raw);
  auto cookie = device_->cookie_jar().get_cookie(url);
  const auto page = current_origin();
  timeline_->record(AuditKind::CookieRead, url.str(),
                    std::string("api page=") + (page ? page->str() : "none"));
  return cookie;
}

LoadOutcome WebViewHost::fetch(Method method, const Url& url, std::optional<std::string> body) {
  HttpRequest req{method, url, {}, std::move(body)};
  if (req.body) req.headers.push_back(kFormContentType);
  if (auto cookie = device_->cookie_jar().get_cookie(url)) {
    req.headers.emplace_back("Cookie", std::move(*cookie));
  }
  HttpResponse resp;
  const Tick tick = timeline_->next();
  try {
    resp = net_->execute(req, tick, current_origin());
  } catch (const HostUnreachable& e) {
    last_error_ = e.what();
    return LoadOutcome::Error;
  }
  store_cookies(resp, url, tick);

  Page page{url, resp.status, std::move(resp.body)};
  history_.push_back(url);
  rendered_.push_back(page);
  current_ = std::move(page);
  timeline_->record(AuditKind::PageLoaded, url.str(), "status " + std::to_string(current_->status));
  return LoadOutcome::Loaded;
}

void WebViewHost::store_cookies(const HttpResponse& response, const Url& url, Tick tick) {
  auto& jar = device_->cookie_jar();
  for (const auto& header : find_headers(response.headers, "Set-Cookie")) {
    try {
      if (jar.set_cookie(url, parse_set_cookie(header, url), tick) == SetResult::Rejected) {
        timeline_->record(AuditKind::CookieRejected, url.str(), "cookies disabled");
      }
    } catch (const Error& e) {
      timeline_->record(AuditKind::CookieRejected, url.str(), e.what());
    }
  }
}

std::optional<Origin> WebViewHost::current_origin() const {
  if (!current_) return std::nullopt;
  return origin_of(current_->url);
}

}  // namespace wvlab
