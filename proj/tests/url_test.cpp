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

#include "wvlab/url.hpp"

#include <gtest/gtest.h>

#include <random>

#include "wvlab/error.hpp"

using namespace wvlab;

TEST(ParseUrl, PaperCollectorUrls) {
  const Url a = parse_url("http://maliciousScript/executeScript.php");
  EXPECT_EQ(a.scheme, "http");
  EXPECT_EQ(a.host, "maliciousscript");
  EXPECT_EQ(a.port, 80);
  EXPECT_EQ(a.path, "/executeScript.php");
  EXPECT_FALSE(a.query);
  EXPECT_FALSE(a.fragment);

  const Url b = parse_url("http://evilScript/androidCookie.php");
  EXPECT_EQ(b.host, "evilscript");
  EXPECT_EQ(b.port, 80);
  EXPECT_EQ(b.path, "/androidCookie.php");
}

TEST(ParseUrl, DefaultsAndComponents) {
  const Url a = parse_url("http://a");
  EXPECT_EQ(a.host, "a");
  EXPECT_EQ(a.port, 80);
  EXPECT_EQ(a.path, "/");

  const Url b = parse_url("HTTPS://A.com:8443/x/y?q=1&r=2#frag");
  EXPECT_EQ(b.scheme, "https");
  EXPECT_EQ(b.host, "a.com");
  EXPECT_EQ(b.port, 8443);
  EXPECT_EQ(b.path, "/x/y");
  EXPECT_EQ(b.query, "q=1&r=2");
  EXPECT_EQ(b.fragment, "frag");

  EXPECT_EQ(parse_url("https://a.com").port, 443);
  EXPECT_EQ(parse_url("http://a?x").path, "/");
  EXPECT_EQ(parse_url("http://a?x").query, "x");
}

TEST(ParseUrl, Rejects) {
  EXPECT_THROW(parse_url("ftp://x/"), ParseError);
  EXPECT_THROW(parse_url("victim.example/forum"), ParseError);
  EXPECT_THROW(parse_url("://x"), ParseError);
  EXPECT_THROW(parse_url("http:///path"), ParseError);
  EXPECT_THROW(parse_url("http://a:/"), ParseError);
  EXPECT_THROW(parse_url("http://a:0/"), ParseError);
  EXPECT_THROW(parse_url("http://a:65536/"), ParseError);
  EXPECT_THROW(parse_url("http://a:8o/"), ParseError);
  EXPECT_THROW(parse_url("http://user:pass@a/"), ParseError);
  EXPECT_THROW(parse_url("http://a b/"), ParseError);
  EXPECT_EQ(parse_url("http://a:65535/").port, 65535);
  EXPECT_EQ(parse_url("http://a:1/").port, 1);
}

TEST(Origin, Projection) {
  EXPECT_EQ(origin_of(parse_url("http://victim.example/forum")),
            (Origin{"http", "victim.example", 80}));
  EXPECT_EQ(origin_of(parse_url("https://a.com/x?q=1")), (Origin{"https", "a.com", 443}));
  EXPECT_EQ(origin_of(parse_url("http://evilScript/androidCookie.php")),
            (Origin{"http", "evilscript", 80}));
}

TEST(Origin, SameOrigin) {
  const Origin a{"http", "a.com", 80};
  EXPECT_TRUE(same_origin(a, a));
  EXPECT_FALSE(same_origin(a, Origin{"http", "b.com", 80}));
  EXPECT_FALSE(same_origin(a, Origin{"https", "a.com", 443}));
  EXPECT_FALSE(same_origin(a, Origin{"http", "a.com", 8080}));
  EXPECT_TRUE(same_origin(origin_of(parse_url("http://A.com:80/x")), a));
}

namespace {

std::string random_raw(std::mt19937_64& rng) {
  static const std::vector<std::string> hosts{"a", "victim.example", "Forum.Victim.Example", "x-y.z", "evilscript"};
  static const std::vector<std::string> ports{"", ":80", ":443", ":8080", ":1"};
  static const std::vector<std::string> paths{"", "/", "/forum", "/forum/list", "/a/b/c.php", "/%41"};
  static const std::vector<std::string> queries{"", "?", "?q=1", "?a=b&c=d", "?x/y"};
  static const std::vector<std::string> frags{"", "#", "#top", "#a?b#c"};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  return std::string(rng() % 2 ? "http" : "HTTPS") + "://" + pick(hosts) + pick(ports) + pick(paths) +
         pick(queries) + pick(frags);
}

}  // namespace

TEST(ParseUrl, CanonicalFormRoundTrips) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string raw = random_raw(rng);
    const Url u = parse_url(raw);
    EXPECT_EQ(parse_url(u.str()), u) << raw;
    EXPECT_EQ(parse_url(raw), u) << raw;
  }
}

TEST(Origin, InsensitiveToPathQueryFragment) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Url u = parse_url(random_raw(rng));
    const Origin before = origin_of(u);
    u.path = "/changed/" + std::to_string(i);
    u.query = "z=" + std::to_string(i);
    u.fragment = std::nullopt;
    EXPECT_EQ(origin_of(parse_url(u.str())), before);
  }
}
