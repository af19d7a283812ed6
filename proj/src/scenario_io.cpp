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

#include "wvlab/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "wvlab/error.hpp"
#include "wvlab/servers.hpp"

namespace wvlab {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(where + ": missing '" + key + "'");
  }
  return obj.at(key);
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw ValidationError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_text(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return text(obj, key, where);
}

const json& array(const json& obj, const char* key, const std::string& where) {
  static const json empty = json::array();
  if (!obj.contains(key)) return empty;
  const json& v = obj.at(key);
  if (!v.is_array()) throw ValidationError(where + ": '" + key + "' must be an array");
  return v;
}

Permission permission(const json& v, const std::string& where) {
  if (v.is_string()) {
    if (auto p = permission_from_string(v.get<std::string>())) return *p;
  }
  throw ValidationError(where + ": unknown permission " + v.dump());
}

Url collector_url(const std::string& raw, const std::string& where) {
  try {
    return parse_url(raw);
  } catch (const ParseError& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

Step step_from_json(const json& j, const std::string& where) {
  const std::string kind = text(j, "kind", where);
  if (kind == "LoadUrl") return step::LoadUrl{text(j, "url", where)};
  if (kind == "Navigate") return step::Navigate{text(j, "url", where)};
  if (kind == "Login") return step::Login{text(j, "username", where), text(j, "password", where)};
  if (kind == "PostMessage") return step::PostMessage{text(j, "text", where)};
  if (kind == "AttackerReplayCookie") return step::AttackerReplayCookie{text(j, "path", where)};
  if (kind == "AttackerPost") return step::AttackerPost{text(j, "text", where)};
  if (kind == "GrantPermission") {
    return step::GrantPermission{permission(require(j, "permission", where), where)};
  }
  if (kind == "RevokePermission") {
    return step::RevokePermission{permission(require(j, "permission", where), where)};
  }
  throw ValidationError(where + ": unknown step kind '" + kind + "'");
}

Json step_to_json(const Step& st) {
  Json j;
  j["kind"] = std::string(step_kind(st));
  if (const auto* x = std::get_if<step::LoadUrl>(&st)) j["url"] = x->url;
  if (const auto* x = std::get_if<step::Navigate>(&st)) j["url"] = x->url;
  if (const auto* x = std::get_if<step::Login>(&st)) {
    j["username"] = x->username;
    j["password"] = x->password;
  }
  if (const auto* x = std::get_if<step::PostMessage>(&st)) j["text"] = x->text;
  if (const auto* x = std::get_if<step::AttackerReplayCookie>(&st)) j["path"] = x->path;
  if (const auto* x = std::get_if<step::AttackerPost>(&st)) j["text"] = x->text;
  if (const auto* x = std::get_if<step::GrantPermission>(&st)) {
    j["permission"] = std::string(to_string(x->permission));
  }
  if (const auto* x = std::get_if<step::RevokePermission>(&st)) {
    j["permission"] = std::string(to_string(x->permission));
  }
  return j;
}

Json headers_json(const Headers& headers) {
  Json out = Json::array();
  for (const auto& [k, v] : headers) out.push_back(Json::array({k, v}));
  return out;
}

Json origin_json(const std::optional<Origin>& o) {
  return o ? Json(o->str()) : Json(nullptr);
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("scenario document must be a JSON object");
  Scenario s;
  s.name = text(doc, "name", "scenario");

  const json& w = require(doc, "world", "scenario");
  s.world.board_host = text(w, "board_host", "world");
  s.world.collector_host = optional_text(w, "collector_host", "world");
  for (const auto& u : array(w, "users", "world")) {
    s.world.users.push_back({text(u, "username", "world.users"), text(u, "password", "world.users")});
  }
  for (const auto& c : array(w, "contacts", "world")) {
    s.world.contacts.push_back({text(c, "display_name", "world.contacts"),
                                text(c, "phone", "world.contacts"),
                                optional_text(c, "email", "world.contacts")});
  }
  for (const auto& p : array(w, "permissions", "world")) {
    s.world.permissions.push_back(permission(p, "world.permissions"));
  }

  if (doc.contains("hooks")) {
    const json& h = doc.at("hooks");
    const std::string kind = text(h, "kind", "hooks");
    const auto k = hook_kind_from_string(kind);
    if (!k) throw ValidationError("hooks: unknown kind '" + kind + "'");
    s.hooks.kind = *k;
    if (auto c = optional_text(h, "collector", "hooks")) s.hooks.collector = collector_url(*c, "hooks");
  }

  const json& steps = array(doc, "steps", "scenario");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    s.steps.push_back(step_from_json(steps[i], "steps[" + std::to_string(i) + "]"));
  }

  const json& e = require(doc, "expected", "scenario");
  const std::string outcome = text(e, "outcome", "expected");
  const auto o = outcome_from_string(outcome);
  if (!o) throw ValidationError("expected: unknown outcome '" + outcome + "'");
  s.expected.outcome = *o;
  for (const auto& needle : array(e, "collector_contains", "expected")) {
    if (!needle.is_string()) throw ValidationError("expected.collector_contains: strings only");
    s.expected.collector_contains.push_back(needle.get<std::string>());
  }
  for (const auto& p : array(e, "board_posts_contain", "expected")) {
    s.expected.board_posts_contain.push_back(
        {text(p, "author", "expected.board_posts_contain"), text(p, "text", "expected.board_posts_contain")});
  }
  if (e.contains("attacker_matches_victim")) {
    const json& v = e.at("attacker_matches_victim");
    if (!v.is_boolean()) throw ValidationError("expected.attacker_matches_victim must be a boolean");
    s.expected.attacker_matches_victim = v.get<bool>();
  }
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json world;
  world["board_host"] = s.world.board_host;
  if (s.world.collector_host) world["collector_host"] = *s.world.collector_host;
  world["users"] = Json::array();
  for (const auto& u : s.world.users) {
    world["users"].push_back({{"username", u.username}, {"password", u.password}});
  }
  world["contacts"] = Json::array();
  for (const auto& c : s.world.contacts) {
    Json jc{{"display_name", c.display_name}, {"phone", c.phone}};
    if (c.email) jc["email"] = *c.email;
    world["contacts"].push_back(std::move(jc));
  }
  world["permissions"] = Json::array();
  for (auto p : s.world.permissions) world["permissions"].push_back(std::string(to_string(p)));

  Json hooks{{"kind", std::string(to_string(s.hooks.kind))}};
  if (s.hooks.collector) hooks["collector"] = s.hooks.collector->str();

  Json steps = Json::array();
  for (const auto& st : s.steps) steps.push_back(step_to_json(st));

  Json expected{{"outcome", std::string(to_string(s.expected.outcome))}};
  expected["collector_contains"] = s.expected.collector_contains;
  expected["board_posts_contain"] = Json::array();
  for (const auto& p : s.expected.board_posts_contain) {
    expected["board_posts_contain"].push_back({{"author", p.author}, {"text", p.text}});
  }
  expected["attacker_matches_victim"] = s.expected.attacker_matches_victim;

  Json doc;
  doc["name"] = s.name;
  doc["world"] = std::move(world);
  doc["hooks"] = std::move(hooks);
  doc["steps"] = std::move(steps);
  doc["expected"] = std::move(expected);
  return doc;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed scenario file '" + path.string() + "': " + e.what());
  }
  return scenario_from_json(doc);
}

Json report_to_json(const ScenarioReport& r) {
  Json j;
  j["name"] = r.name;
  j["outcome"] = std::string(to_string(r.outcome));
  if (r.outcome == Outcome::Error) j["error"] = r.error;
  j["expected_outcome"] = std::string(to_string(r.expected_outcome));
  j["expected_met"] = r.expected_met;
  j["expectation_failures"] = r.expectation_failures;

  j["steps"] = Json::array();
  for (const auto& s : r.steps) {
    j["steps"].push_back({{"index", s.index}, {"kind", s.kind}, {"result", s.result}});
  }

  j["audit"] = Json::array();
  for (const auto& e : r.audit) {
    j["audit"].push_back({{"tick", e.tick},
                          {"kind", std::string(to_string(e.kind))},
                          {"subject", e.subject},
                          {"detail", e.detail}});
  }

  j["net_log"] = Json::array();
  for (const auto& n : r.net_log) {
    Json rec;
    rec["tick"] = n.tick;
    rec["initiator"] = std::string(to_string(n.initiator));
    rec["requester_origin"] = origin_json(n.requester_origin);
    rec["method"] = std::string(to_string(n.method));
    rec["url"] = n.url;
    rec["request_headers"] = headers_json(n.request_headers);
    rec["request_body"] = n.request_body ? Json(*n.request_body) : Json(nullptr);
    rec["status"] = n.status;
    rec["response_headers"] = headers_json(n.response_headers);
    rec["response_bytes"] = n.response_bytes;
    j["net_log"].push_back(std::move(rec));
  }

  j["collector_payloads"] = Json::array();
  for (const auto& p : r.collector_payloads) {
    j["collector_payloads"].push_back(
        {{"tick", p.tick}, {"source_path", p.source_path}, {"body", p.body}});
  }

  j["pages"] = Json::array();
  for (const auto& p : r.pages) {
    j["pages"].push_back({{"url", p.url.str()}, {"status", p.status}, {"body", p.body}});
  }

  j["attacker_exchanges"] = Json::array();
  for (const auto& a : r.attacker_exchanges) {
    j["attacker_exchanges"].push_back({{"step", a.step},
                                       {"method", std::string(to_string(a.method))},
                                       {"path", a.path},
                                       {"status", a.status},
                                       {"body", a.body}});
  }

  j["board_posts"] = Json::array();
  for (const auto& p : r.board_posts) {
    j["board_posts"].push_back({{"author", p.author}, {"text", p.text}});
  }

  j["ground_truth"] = Json::array();
  for (const auto& g : r.ground_truth) {
    j["ground_truth"].push_back({{"kind", std::string(to_string(g.kind))}, {"tick", g.tick}});
  }

  j["findings"] = Json::array();
  for (const auto& f : r.findings) {
    Json jf;
    jf["tick"] = f.tick();
    jf["kind"] = std::string(to_string(f.kind));
    jf["severity"] = std::string(to_string(f.severity));
    jf["datum"] = f.evidence.datum;
    jf["source_origin"] = origin_json(f.evidence.source_origin);
    jf["sink_origin"] = f.evidence.sink_origin.str();
    jf["net_tick"] = f.evidence.net_tick;
    jf["audit_tick"] = f.evidence.audit_tick ? Json(*f.evidence.audit_tick) : Json(nullptr);
    j["findings"].push_back(std::move(jf));
  }
  return j;
}

std::string report_to_text(const ScenarioReport& r) {
  std::ostringstream out;
  out << "scenario " << r.name << ": " << to_string(r.outcome);
  if (r.outcome == Outcome::Error) out << " (" << r.error << ")";
  out << " [expected " << to_string(r.expected_outcome) << ", "
      << (r.expected_met ? "met" : "NOT met") << "]\n";
  for (const auto& f : r.expectation_failures) out << "  ! " << f << "\n";
  out << "steps:\n";
  for (const auto& s : r.steps) out << "  " << s.index << " " << s.kind << " -> " << s.result << "\n";
  out << "pages seen by the user:\n";
  for (const auto& p : r.pages) out << "  " << p.status << " " << p.url.str() << "\n";
  out << "network (" << r.net_log.size() << " exchanges):\n";
  for (const auto& n : r.net_log) {
    out << "  t=" << n.tick << " " << to_string(n.initiator) << " " << to_string(n.method) << " "
        << n.url << " -> " << n.status << "\n";
  }
  out << "collector payloads (" << r.collector_payloads.size() << "):\n";
  for (const auto& p : r.collector_payloads) {
    out << "  t=" << p.tick << " " << p.source_path << " " << p.body << "\n";
  }
  for (const auto& a : r.attacker_exchanges) {
    out << "attacker " << to_string(a.method) << " " << a.path << " -> " << a.status << "\n";
  }
  out << "findings (" << r.findings.size() << "):\n";
  for (const auto& f : r.findings) {
    out << "  t=" << f.tick() << " " << to_string(f.severity) << " " << to_string(f.kind) << " "
        << f.evidence.datum << " -> " << f.evidence.sink_origin.str() << "\n";
  }
  out << "note: the '" << kSessionCookieName
      << "' cookie name and board paths are simulator conventions\n";
  return out.str();
}

}  // namespace wvlab
