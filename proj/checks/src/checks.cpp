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

#include "wvlab/checks.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>
#include <string_view>

#include "wvlab/error.hpp"
#include "wvlab/scenario_io.hpp"

namespace wvlab::checks {
namespace {

std::vector<std::string> split_labels(const std::string& host) {
  std::vector<std::string> labels;
  std::string cur;
  for (char c : host) {
    if (c == '.') {
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  labels.push_back(cur);
  return labels;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& pool) {
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

bool chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string random_token(std::mt19937_64& rng, std::size_t max_len) {
  static constexpr std::string_view kAlphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_.";
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    out += kAlphabet[std::uniform_int_distribution<std::size_t>(0, kAlphabet.size() - 1)(rng)];
  }
  return out;
}

const std::vector<std::string> kDomains{
    "example",          "victim.example", "forum.victim.example", "evilvictim.example",
    "a.victim.example", "evilscript",     "b.evilscript",
};
const std::vector<std::string> kQueryHosts{
    "example",          "victim.example", "forum.victim.example", "evilvictim.example",
    "a.victim.example", "evilscript",     "b.evilscript",         "sub.forum.victim.example",
    "victim.example.evil", "other",       "x.a.victim.example",
};
const std::vector<std::string> kCookiePaths{"/", "/a", "/a/", "/a/b", "/forum", "/forum/", "/forum/list", "/b"};
const std::vector<std::string> kQueryPaths{"/",     "/a",     "/a/",         "/a/b",   "/a/bc", "/ab",
                                           "/forum", "/forumx", "/forum/list", "/forum/list/x", "/b/c"};
const std::vector<std::string> kNames{"sid", "sessionid", "lang", "pref", "t"};

std::optional<std::string> joined(const std::vector<const Cookie*>& cookies) {
  if (cookies.empty()) return std::nullopt;
  std::string out;
  for (std::size_t i = 0; i < cookies.size(); ++i) {
    if (i) out += "; ";
    out += cookies[i]->name + "=" + cookies[i]->value;
  }
  return out;
}

}  // namespace

bool oracle_domain_match(const std::string& host, const std::string& cookie_domain) {
  const auto h = split_labels(host);
  const auto d = split_labels(cookie_domain);
  if (d.size() > h.size()) return false;
  return std::equal(d.rbegin(), d.rend(), h.rbegin());
}

bool oracle_path_match(const std::string& request_path, const std::string& cookie_path) {
  std::set<std::string> prefixes{request_path};
  for (std::size_t i = 0; i < request_path.size(); ++i) {
    if (request_path[i] == '/') {
      prefixes.insert(request_path.substr(0, i));
      prefixes.insert(request_path.substr(0, i + 1));
    }
  }
  prefixes.erase("");
  return prefixes.contains(cookie_path);
}

std::optional<std::string> oracle_get_cookie(std::span<const Cookie> entries, const Url& url) {
  struct Candidate {
    const Cookie* cookie;
    std::size_t index;
  };
  std::vector<Candidate> pool;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (oracle_domain_match(url.host, entries[i].domain) &&
        oracle_path_match(url.path, entries[i].path)) {
      pool.push_back({&entries[i], i});
    }
  }
  auto before = [](const Candidate& a, const Candidate& b) {
    if (a.cookie->path.size() != b.cookie->path.size()) {
      return a.cookie->path.size() > b.cookie->path.size();
    }
    if (a.cookie->created_at != b.cookie->created_at) {
      return a.cookie->created_at < b.cookie->created_at;
    }
    return a.index < b.index;
  };
  std::vector<const Cookie*> ordered;
  while (!pool.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (before(pool[i], pool[best])) best = i;
    }
    ordered.push_back(pool[best].cookie);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return joined(ordered);
}

CookieCase random_cookie_case(std::mt19937_64& rng) {
  CookieCase c;
  const auto ops = std::uniform_int_distribution<int>(0, 32)(rng);
  Tick tick = 1;
  for (int i = 0; i < ops; ++i) {
    if (chance(rng, 0.03)) c.jar.set_accept(!c.jar.accepts());
    const std::string& domain = pick(rng, kDomains);
    const std::string source_host = chance(rng, 0.3) ? "www." + domain : domain;
    Cookie cookie{pick(rng, kNames), random_token(rng, 12), domain, pick(rng, kCookiePaths), 0};
    if (!chance(rng, 0.2)) tick += std::uniform_int_distribution<Tick>(1, 3)(rng);
    c.jar.set_cookie(parse_url("http://" + source_host + "/"), std::move(cookie), tick);
  }
  std::string raw = (chance(rng, 0.5) ? "http://" : "https://") + pick(rng, kQueryHosts) +
                    pick(rng, kQueryPaths);
  if (chance(rng, 0.2)) raw += "?q=" + random_token(rng, 4);
  if (chance(rng, 0.1)) raw += "#f";
  c.url = parse_url(raw);
  return c;
}

OracleRun cookie_oracle_equivalence(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  OracleRun run;
  for (std::size_t i = 0; i < cases; ++i) {
    const CookieCase c = random_cookie_case(rng);
    const auto expected = oracle_get_cookie(c.jar.entries(), c.url);
    const auto actual = c.jar.get_cookie(c.url);
    ++run.cases;
    if (expected != actual) run.discrepancies.push_back({i, c.url.str(), expected, actual});
  }
  return run;
}

std::vector<std::string> small_hosts(std::size_t max_labels, std::size_t max_label_len) {
  std::vector<std::string> labels;
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_label_len; ++len) {
    std::vector<std::string> next;
    for (const auto& base : frontier) {
      for (char c : {'a', 'b', 'c'}) next.push_back(base + c);
    }
    labels.insert(labels.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::string> hosts;
  std::vector<std::string> level{""};
  for (std::size_t n = 1; n <= max_labels; ++n) {
    std::vector<std::string> next;
    for (const auto& base : level) {
      for (const auto& l : labels) next.push_back(base.empty() ? l : l + "." + base);
    }
    hosts.insert(hosts.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return hosts;
}

std::size_t same_origin_violations() {
  std::vector<Origin> origins;
  for (const auto& host : small_hosts(3, 1)) {
    for (const char* scheme : {"http", "https"}) {
      for (const char* port : {"", ":443", ":8080"}) {
        origins.push_back(origin_of(parse_url(std::string(scheme) + "://" + host + port + "/p")));
      }
    }
  }
  std::size_t violations = 0;
  for (const auto& a : origins) {
    if (!same_origin(a, a)) ++violations;
    for (const auto& b : origins) {
      const bool ab = same_origin(a, b);
      if (ab != same_origin(b, a)) ++violations;
      if (!ab) continue;
      for (const auto& c : origins) {
        if (same_origin(b, c) && !same_origin(a, c)) ++violations;
      }
    }
  }
  return violations;
}

std::size_t domain_match_violations() {
  const auto hosts = small_hosts(3, 2);
  std::size_t violations = 0;
  for (const auto& h : hosts) {
    for (const auto& d : hosts) {
      if (domain_match(h, d) != oracle_domain_match(h, d)) ++violations;
    }
  }
  return violations;
}

std::size_t device_exchanges(const ScenarioReport& r) {
  return static_cast<std::size_t>(std::count_if(r.net_log.begin(), r.net_log.end(), [](const NetSummary& n) {
    return n.initiator == Initiator::Device;
  }));
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> results;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    results.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto builtins = builtin_scenarios();
  std::vector<std::future<ScenarioReport>> runs;
  for (const auto& s : builtins) {
    runs.push_back(std::async(std::launch::async, [&s] { return run_scenario(s); }));
  }
  std::vector<ScenarioReport> reports;
  for (auto& f : runs) reports.push_back(f.get());

  std::vector<Finding> all_findings;
  std::vector<GroundTruthEvent> all_truth;
  for (std::size_t i = 0; i < builtins.size(); ++i) {
    const Scenario& s = builtins[i];
    const ScenarioReport& r = reports[i];
    std::string why;
    for (const auto& f : r.expectation_failures) why += (why.empty() ? "" : "; ") + f;
    add("scenario " + s.name, r.expected_met, why);

    const ScenarioReport again = run_scenario(s);
    add("determinism " + s.name, report_to_json(r).dump() == report_to_json(again).dump());

    // Findings are matched per run, so ticks are offset to keep runs apart.
    const Tick offset = static_cast<Tick>(i + 1) << 32;
    for (auto f : r.findings) {
      if (f.evidence.audit_tick) *f.evidence.audit_tick += offset;
      f.evidence.net_tick += offset;
      all_findings.push_back(f);
    }
    for (auto g : r.ground_truth) {
      g.tick += offset;
      all_truth.push_back(g);
    }

    const bool attack = s.expected.outcome == Outcome::AttackSucceeded;
    if (!attack) {
      add("benign has no findings " + s.name, r.findings.empty(),
          std::to_string(r.findings.size()) + " findings");
      continue;
    }
    const bool high = std::any_of(r.findings.begin(), r.findings.end(),
                                  [](const Finding& f) { return f.severity == Severity::High; });
    add("attack flagged " + s.name, high);

    const ScenarioReport plain = run_scenario(passthrough_variant(s));
    add("hook removed " + s.name, plain.expected_met && plain.collector_payloads.empty(),
        std::string(to_string(plain.outcome)));
    add("victim blindness " + s.name, plain.pages == r.pages);

    const ScenarioReport offline = run_scenario(permission_stripped(s, Permission::Internet));
    add("INTERNET stripped " + s.name,
        offline.expected_met && offline.collector_payloads.empty() && device_exchanges(offline) == 0,
        std::string(to_string(offline.outcome)));

    if (s.hooks.kind == HookBehavior::Kind::ExfiltrateContacts) {
      const ScenarioReport denied = run_scenario(permission_stripped(s, Permission::ReadContact));
      add("READ_CONTACT stripped " + s.name,
          denied.expected_met && denied.collector_payloads.empty(),
          std::string(to_string(denied.outcome)));
    }
  }

  const auto pr = precision_recall(all_findings, all_truth);
  add("detector precision/recall", pr.precision == 1.0 && pr.recall == 1.0,
      "precision " + std::to_string(pr.precision) + " recall " + std::to_string(pr.recall));

  const auto oracle = cookie_oracle_equivalence(seed, 10000);
  add("get_cookie oracle equivalence", oracle.discrepancies.empty(),
      std::to_string(oracle.discrepancies.size()) + " discrepancies in " +
          std::to_string(oracle.cases) + " cases");
  const auto so = same_origin_violations();
  add("same_origin equivalence laws", so == 0, std::to_string(so) + " violations");
  const auto dm = domain_match_violations();
  add("domain_match label boundary", dm == 0, std::to_string(dm) + " violations");
  return results;
}

}  // namespace wvlab::checks
