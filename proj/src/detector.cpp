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

#include <algorithm>
#include <set>
#include <tuple>

#include "wvlab/error.hpp"

namespace wvlab {
namespace {

std::optional<Tick> last_audit_before(std::span<const AuditEvent> audit, AuditKind kind, Tick t) {
  std::optional<Tick> found;
  for (const auto& e : audit) {
    if (e.tick >= t) break;
    if (e.kind == kind) found = e.tick;
  }
  return found;
}

std::optional<Url> try_parse(std::string_view raw) {
  try {
    return parse_url(raw);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::optional<Finding> cookie_finding(const NetRecord& rec, const Origin& sink,
                                      const DetectorInput& in) {
  const std::string& body = *rec.request.body;
  for (const auto& [cookie, source] : in.jar_history) {
    if (cookie.created_at >= rec.tick) continue;
    if (cookie.value.size() < kMinCookieValueLength) continue;
    if (same_origin(source, sink)) continue;
    if (body.find(cookie.value) == std::string::npos) continue;
    return Finding{FindingKind::CookieExfiltration, Severity::High,
                   Evidence{cookie.pair(), source, sink, rec.tick,
                            last_audit_before(in.audit, AuditKind::CookieRead, rec.tick)}};
  }
  return std::nullopt;
}

std::optional<Finding> contact_finding(const NetRecord& rec, const Origin& sink,
                                       const DetectorInput& in) {
  const std::string& body = *rec.request.body;
  auto leaked = [&](const std::string& field) {
    return !field.empty() && body.find(field) != std::string::npos;
  };
  for (const auto& c : in.contacts) {
    std::string datum;
    if (leaked(c.phone)) {
      datum = "phone:" + c.phone;
    } else if (c.email && leaked(*c.email)) {
      datum = "email:" + *c.email;
    } else {
      continue;
    }
    return Finding{FindingKind::ContactExfiltration, Severity::High,
                   Evidence{std::move(datum), std::nullopt, sink, rec.tick,
                            last_audit_before(in.audit, AuditKind::ContactsRead, rec.tick)}};
  }
  return std::nullopt;
}

// Device exchange that fetched `page_url` most recently before `before`.
Tick page_fetch_tick(std::span<const NetRecord> net, const std::string& page_url, Tick before) {
  Tick found = 0;
  for (const auto& rec : net) {
    if (rec.tick >= before) break;
    if (rec.initiator == Initiator::Device && rec.request.uri.str() == page_url) found = rec.tick;
  }
  return found;
}

}  // namespace

std::string_view to_string(FindingKind k) {
  switch (k) {
    case FindingKind::CookieExfiltration: return "CookieExfiltration";
    case FindingKind::ContactExfiltration: return "ContactExfiltration";
    case FindingKind::CrossOriginCookieRead: return "CrossOriginCookieRead";
  }
  return "?";
}

std::string_view to_string(Severity s) {
  return s == Severity::High ? "High" : "Info";
}

Tick Finding::tick() const {
  if (kind == FindingKind::CrossOriginCookieRead && evidence.audit_tick) {
    return *evidence.audit_tick;
  }
  return evidence.net_tick;
}

std::vector<Finding> analyze(const DetectorInput& in) {
  std::vector<Finding> findings;

  std::set<Origin> visited;
  for (const auto& e : in.audit) {
    if (e.kind != AuditKind::PageLoaded) continue;
    if (auto url = try_parse(e.subject)) visited.insert(origin_of(*url));
  }

  for (const auto& rec : in.net) {
    if (rec.initiator != Initiator::Device || !rec.request.body) continue;
    const Origin sink = origin_of(rec.request.uri);
    if (auto f = cookie_finding(rec, sink, in)) findings.push_back(std::move(*f));
    if (!visited.contains(sink)) {
      if (auto f = contact_finding(rec, sink, in)) findings.push_back(std::move(*f));
    }
  }

  std::optional<Origin> page;
  std::string page_url;
  Tick page_tick = 0;
  for (const auto& e : in.audit) {
    if (e.kind == AuditKind::PageLoaded) {
      if (auto url = try_parse(e.subject)) {
        page = origin_of(*url);
        page_url = e.subject;
        page_tick = e.tick;
      }
      continue;
    }
    if (e.kind != AuditKind::CookieRead || !page) continue;
    const auto url = try_parse(e.subject);
    if (!url || same_origin(origin_of(*url), *page)) continue;
    findings.push_back(Finding{FindingKind::CrossOriginCookieRead, Severity::Info,
                               Evidence{url->str(), origin_of(*url), *page,
                                        page_fetch_tick(in.net, page_url, page_tick), e.tick}});
  }

  std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return std::tuple(a.tick(), a.kind) < std::tuple(b.tick(), b.kind);
  });
  return findings;
}

PrecisionRecall precision_recall(std::span<const Finding> findings,
                                 std::span<const GroundTruthEvent> truth) {
  std::vector<bool> claimed(truth.size(), false);
  PrecisionRecall pr;
  for (const auto& f : findings) {
    bool matched = false;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      if (!claimed[i] && truth[i].kind == f.kind && truth[i].tick == f.tick()) {
        claimed[i] = matched = true;
        break;
      }
    }
    matched ? ++pr.true_positives : ++pr.false_positives;
  }
  pr.false_negatives = truth.size() - pr.true_positives;
  if (!findings.empty()) {
    pr.precision = static_cast<double>(pr.true_positives) / static_cast<double>(findings.size());
  }
  if (!truth.empty()) {
    pr.recall = static_cast<double>(pr.true_positives) / static_cast<double>(truth.size());
  }
  return pr;
}

}  // namespace wvlab
