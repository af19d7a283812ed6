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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wvlab/device.hpp"
#include "wvlab/http.hpp"
#include "wvlab/timeline.hpp"
#include "wvlab/url.hpp"

namespace wvlab {

/// What the application's shouldOverrideUrlLoading override does. A closed
/// set so that scenario documents stay data-only.
struct HookBehavior {
  enum class Kind { PassThrough, Block, ExfiltrateCookies, ExfiltrateContacts };

  Kind kind = Kind::PassThrough;
  std::optional<Url> collector;  // set for the two exfiltrating kinds

  static HookBehavior pass_through() { return {}; }
  static HookBehavior block() { return {Kind::Block, std::nullopt}; }
  static HookBehavior exfiltrate_cookies(Url collector) {
    return {Kind::ExfiltrateCookies, std::move(collector)};
  }
  static HookBehavior exfiltrate_contacts(Url collector) {
    return {Kind::ExfiltrateContacts, std::move(collector)};
  }

  bool exfiltrates() const {
    return kind == Kind::ExfiltrateCookies || kind == Kind::ExfiltrateContacts;
  }

  friend bool operator==(const HookBehavior&, const HookBehavior&) = default;
};

std::string_view to_string(HookBehavior::Kind k);
std::optional<HookBehavior::Kind> hook_kind_from_string(std::string_view s);

struct HookSet {
  HookBehavior on_should_override;
};

enum class HookDecision { Proceed, Handled, Blocked };
enum class LoadOutcome { Loaded, Overridden, Blocked, Error };

std::string_view to_string(HookDecision d);
std::string_view to_string(LoadOutcome o);

/// A page as the user sees it.
struct Page {
  Url url;
  int status = 200;
  std::string body;

  friend bool operator==(const Page&, const Page&) = default;
};

/// Body the cookie hook posts to its collector.
std::string cookie_exfil_body(const Url& url, std::string_view cookie);

/// Body the contacts hook posts to its collector: one form field per
/// contact, "display_name;phone;email".
std::string contacts_exfil_body(std::span<const Contact> contacts);

/// The embedded browser. Owns no world state: the device, the network and
/// the timeline belong to the enclosing world and must outlive the host.
class WebViewHost {
 public:
  WebViewHost(Device& device, VirtualNet& net, Timeline& timeline)
      : device_(&device), net_(&net), timeline_(&timeline) {}

  /// Installs (or replaces) the client hooks and audits HookInstalled.
  void attach_client(HookSet hooks);
  const std::optional<HookSet>& client() const { return hooks_; }

  /// webView.loadUrl. Order: parse, INTERNET gate, hook pipeline, fetch.
  /// Throws ParseError or PermissionDenied; an unreachable host yields
  /// LoadOutcome::Error.
  LoadOutcome load_url(std::string_view raw);

  /// A user-initiated navigation from the current page. Same pipeline as
  /// load_url; throws NoCurrentPage when nothing is loaded yet.
  LoadOutcome navigate(std::string_view raw);

  /// webView.postUrl (form submission). shouldOverrideUrlLoading is not
  /// consulted for POST navigations.
  LoadOutcome post_url(std::string_view raw, std::string body);

  /// Runs the should-override hook for `url`. Exfiltration is best-effort:
  /// failures are audited and the navigation still proceeds.
  HookDecision run_hook_pipeline(const Url& url);

  /// CookieManager.getCookie. Deliberately not scoped to the origin of the
  /// current page.
  std::optional<std::string> get_cookie_api(std::string_view raw);

  const std::optional<Page>& current_page() const { return current_; }
  std::span<const Url> history() const { return history_; }
  /// Every page shown to the user, in order.
  std::span<const Page> rendered() const { return rendered_; }
  const std::string& last_error() const { return last_error_; }

 private:
  LoadOutcome open(const Url& url);
  LoadOutcome fetch(Method method, const Url& url, std::optional<std::string> body);
  void store_cookies(const HttpResponse& response, const Url& url, Tick tick);
  void exfiltrate(const Url& collector, std::string body);
  std::optional<Origin> current_origin() const;

  Device* device_;
  VirtualNet* net_;
  Timeline* timeline_;
  std::optional<HookSet> hooks_;
  std::optional<Page> current_;
  std::vector<Url> history_;
  std::vector<Page> rendered_;
  std::string last_error_;
};

}  // namespace wvlab
