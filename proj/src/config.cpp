// Copyright 2026 The femtobb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "femtobb/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "femtobb/errors.hpp"
#include "json.hpp"

namespace femtobb::config {
namespace {

using nlohmann::json;

// Collects type and range problems while walking the document.
class Reader {
 public:
  std::vector<std::string> issues;

  // Reports keys of `obj` that are not in `known`.
  void known_keys(const json& obj, const std::string& path,
                  std::initializer_list<std::string_view> known) {
    for (const auto& item : obj.items()) {
      if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
        issues.push_back(fmt::format("{}: unknown key", join(path, item.key())));
      }
    }
  }

  // Returns the sub-object at `key` or nullptr when absent or mistyped.
  const json* object(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return nullptr;
    if (!it->is_object()) {
      issues.push_back(fmt::format("{}: expected an object", join(path, key)));
      return nullptr;
    }
    return &*it;
  }

  void number(const json& obj, const std::string& path, const char* key, double& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number()) {
      issues.push_back(fmt::format("{}: expected a number", join(path, key)));
      return;
    }
    out = it->get<double>();
  }

  void bandwidth(const json& obj, const std::string& path, const char* key, Kbps& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    double value = out.value();
    number(obj, path, key, value);
    if (!it->is_number()) return;
    if (!(value >= 0.0)) {
      issues.push_back(fmt::format("{}: bandwidth must be >= 0 kbps", join(path, key)));
      return;
    }
    out = Kbps(value);
  }

  template <typename Int>
  void integer(const json& obj, const std::string& path, const char* key, Int& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (it->is_number_unsigned()) {
      const auto v = it->get<std::uint64_t>();
      if (v > std::numeric_limits<Int>::max()) {
        issues.push_back(fmt::format("{}: value too large", join(path, key)));
        return;
      }
      out = static_cast<Int>(v);
    } else if (it->is_number_integer()) {
      issues.push_back(fmt::format("{}: must be a non-negative integer", join(path, key)));
    } else {
      issues.push_back(fmt::format("{}: expected an integer", join(path, key)));
    }
  }

  template <typename Enum, typename Parse>
  void enumeration(const json& obj, const std::string& path, const char* key, Enum& out,
                   Parse&& parse) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_string()) {
      issues.push_back(fmt::format("{}: expected a string", join(path, key)));
      return;
    }
    const auto name = it->get<std::string>();
    if (auto parsed = parse(name)) {
      out = *parsed;
    } else {
      issues.push_back(fmt::format("{}: unrecognised value \"{}\"", join(path, key), name));
    }
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }
};

std::string line_context(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  const std::size_t line_end = std::min(text.find('\n', line_start), text.size());
  return fmt::format("line {}, column {}: {}", line, byte - line_start,
                     text.substr(line_start, line_end - line_start));
}

void read_femto(Reader& r, const json& obj, traffic::FemtoTrafficConfig& femto) {
  const std::string path = "femto";
  r.known_keys(obj, path, {"users", "target_mean_kbps", "classes", "lifetime_distribution"});
  r.integer(obj, path, "users", femto.users);
  r.bandwidth(obj, path, "target_mean_kbps", femto.target_mean_demand);
  r.enumeration(obj, path, "lifetime_distribution", femto.lifetime_distribution,
                traffic::parse_lifetime_distribution);
  auto it = obj.find("classes");
  if (it == obj.end()) return;
  if (!it->is_array()) {
    r.issues.push_back("femto.classes: expected an array");
    return;
  }
  femto.classes.clear();
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& entry = (*it)[i];
    const std::string cpath = fmt::format("femto.classes[{}]", i);
    if (!entry.is_object()) {
      r.issues.push_back(cpath + ": expected an object");
      continue;
    }
    r.known_keys(entry, cpath, {"kind", "rate_kbps", "mean_lifetime_s", "weight"});
    if (!entry.contains("kind") || !entry.contains("rate_kbps")) {
      r.issues.push_back(cpath + ": \"kind\" and \"rate_kbps\" are required");
    }
    traffic::CallClass c;
    r.enumeration(entry, cpath, "kind", c.kind, traffic::parse_call_kind);
    r.bandwidth(entry, cpath, "rate_kbps", c.rate);
    r.number(entry, cpath, "mean_lifetime_s", c.mean_lifetime_s);
    r.number(entry, cpath, "weight", c.mix_weight);
    femto.classes.push_back(c);
  }
}

}  // namespace

sim::ScenarioConfig parse_config(std::string_view json_text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("{}: JSON parse error at {}", origin,
                                  line_context(json_text, e.byte)));
  }
  if (!doc.is_object()) throw ConfigError(fmt::format("{}: top level must be a JSON object", origin));

  sim::ScenarioConfig cfg;
  Reader r;
  r.known_keys(doc, "", {"capacity_kbps", "femto", "background", "window", "run"});
  r.bandwidth(doc, "", "capacity_kbps", cfg.capacity);
  if (const json* femto = r.object(doc, "", "femto")) read_femto(r, *femto, cfg.femto);
  if (const json* bg = r.object(doc, "", "background")) {
    r.known_keys(*bg, "background", {"arbit_kbps", "per_flow_kbps", "mean_flow_duration_s"});
    r.bandwidth(*bg, "background", "arbit_kbps", cfg.background.arbit);
    r.bandwidth(*bg, "background", "per_flow_kbps", cfg.background.per_flow_rate);
    r.number(*bg, "background", "mean_flow_duration_s", cfg.background.mean_flow_duration_s);
  }
  if (const json* w = r.object(doc, "", "window")) {
    r.known_keys(*w, "window", {"t1_s", "T_s", "m"});
    r.number(*w, "window", "t1_s", cfg.window.t1_s);
    r.number(*w, "window", "T_s", cfg.window.period_s);
    r.integer(*w, "window", "m", cfg.window.m);
  }
  if (const json* run = r.object(doc, "", "run")) {
    r.known_keys(*run, "run", {"duration_s", "warmup_s", "replications", "base_seed"});
    r.number(*run, "run", "duration_s", cfg.run.duration_s);
    r.number(*run, "run", "warmup_s", cfg.run.warmup_s);
    r.integer(*run, "run", "replications", cfg.run.replications);
    r.integer(*run, "run", "base_seed", cfg.run.base_seed);
  }

  auto issues = std::move(r.issues);
  for (auto& issue : cfg.validate()) issues.push_back(std::move(issue));
  if (!issues.empty()) {
    for (auto& issue : issues) issue = fmt::format("{}: {}", origin, issue);
    throw ConfigError(std::move(issues));
  }
  return cfg;
}

sim::ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot open config file: {}", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

std::string write_config(const sim::ScenarioConfig& cfg) {
  json classes = json::array();
  for (const auto& c : cfg.femto.classes) {
    classes.push_back({{"kind", traffic::to_string(c.kind)},
                       {"rate_kbps", c.rate.value()},
                       {"mean_lifetime_s", c.mean_lifetime_s},
                       {"weight", c.mix_weight}});
  }
  json doc = {
      {"capacity_kbps", cfg.capacity.value()},
      {"femto",
       {{"users", cfg.femto.users},
        {"target_mean_kbps", cfg.femto.target_mean_demand.value()},
        {"lifetime_distribution", traffic::to_string(cfg.femto.lifetime_distribution)},
        {"classes", classes}}},
      {"background",
       {{"arbit_kbps", cfg.background.arbit.value()},
        {"per_flow_kbps", cfg.background.per_flow_rate.value()},
        {"mean_flow_duration_s", cfg.background.mean_flow_duration_s}}},
      {"window", {{"t1_s", cfg.window.t1_s}, {"T_s", cfg.window.period_s}, {"m", cfg.window.m}}},
      {"run",
       {{"duration_s", cfg.run.duration_s},
        {"warmup_s", cfg.run.warmup_s},
        {"replications", cfg.run.replications},
        {"base_seed", cfg.run.base_seed}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace femtobb::config
