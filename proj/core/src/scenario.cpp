// Copyright 2026 The apfrrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apfrrt/scenario.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

#include <fmt/format.h>

namespace apfrrt {
namespace {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
  bool used = false;
};

struct Section {
  std::string name;
  std::string argument;
  int line = 0;
  std::vector<Entry> entries;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool valid_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.';
  });
}

std::vector<Section> tokenize(std::string_view text) {
  std::vector<Section> sections;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    if (line.front() == '[') {
      if (line.back() != ']') throw ScenarioError(line_no, "unterminated section header");
      const auto words = split_ws(line.substr(1, line.size() - 2));
      if (words.empty() || words.size() > 2) {
        throw ScenarioError(line_no, "section header must be [name] or [name argument]");
      }
      Section s;
      s.name = std::string(words[0]);
      if (words.size() == 2) {
        if (!valid_identifier(words[1])) throw ScenarioError(line_no, "invalid section argument");
        s.argument = std::string(words[1]);
      }
      s.line = line_no;
      sections.push_back(std::move(s));
    } else {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ScenarioError(line_no, "expected 'key = value'");
      if (sections.empty()) throw ScenarioError(line_no, "key outside of any section");
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (key.empty()) throw ScenarioError(line_no, "empty key");
      if (value.empty()) throw ScenarioError(line_no, fmt::format("key '{}' has no value", key));
      auto& entries = sections.back().entries;
      if (std::any_of(entries.begin(), entries.end(), [&](const Entry& e) { return e.key == key; })) {
        throw ScenarioError(line_no, fmt::format("duplicate key '{}'", key));
      }
      entries.push_back({key, value, line_no, false});
    }
    if (eol == text.size()) break;
  }
  return sections;
}

double parse_double(std::string_view token, int line) {
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ScenarioError(line, fmt::format("'{}' is not a finite number", token));
  }
  return v;
}

std::int64_t parse_integer(std::string_view token, int line) {
  std::int64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ScenarioError(line, fmt::format("'{}' is not an integer", token));
  }
  return v;
}

/// Typed, consuming access to one section's entries.
class Reader {
 public:
  explicit Reader(Section& s) : section_(s) {}

  int line() const { return section_.line; }

  Entry* find(std::string_view key) {
    for (auto& e : section_.entries) {
      if (e.key == key) {
        e.used = true;
        return &e;
      }
    }
    return nullptr;
  }

  bool has(std::string_view key) const {
    return std::any_of(section_.entries.begin(), section_.entries.end(),
                       [&](const Entry& e) { return e.key == key; });
  }

  int line_of(std::string_view key) const {
    for (const auto& e : section_.entries) {
      if (e.key == key) return e.line;
    }
    return section_.line;
  }

  Entry& require(std::string_view key) {
    Entry* e = find(key);
    if (!e) {
      throw ScenarioError(section_.line,
                          fmt::format("[{}] is missing required key '{}'", section_.name, key));
    }
    return *e;
  }

  std::vector<double> numbers(Entry& e, std::size_t expected = 0) {
    std::vector<double> out;
    for (auto tok : split_ws(e.value)) out.push_back(parse_double(tok, e.line));
    if (expected && out.size() != expected) {
      throw ScenarioError(e.line, fmt::format("'{}' expects {} numbers, got {}", e.key, expected,
                                              out.size()));
    }
    if (out.empty()) throw ScenarioError(e.line, fmt::format("'{}' has no numbers", e.key));
    return out;
  }

  double number(std::string_view key) { return numbers(require(key), 1)[0]; }

  std::optional<double> optional_number(std::string_view key) {
    if (Entry* e = find(key)) return numbers(*e, 1)[0];
    return std::nullopt;
  }

  std::int64_t integer(Entry& e) {
    const auto words = split_ws(e.value);
    if (words.size() != 1) throw ScenarioError(e.line, fmt::format("'{}' expects one integer", e.key));
    return parse_integer(words[0], e.line);
  }

  Point2 point(std::string_view key) {
    const auto v = numbers(require(key), 2);
    return {v[0], v[1]};
  }

  std::string word(std::string_view key) {
    Entry& e = require(key);
    const auto words = split_ws(e.value);
    if (words.size() != 1) throw ScenarioError(e.line, fmt::format("'{}' expects one word", key));
    return std::string(words[0]);
  }

  void finish() const {
    for (const auto& e : section_.entries) {
      if (!e.used) {
        throw ScenarioError(e.line, fmt::format("unknown key '{}' in [{}]", e.key, section_.name));
      }
    }
  }

 private:
  Section& section_;
};

std::string_view strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::kNone:
      return "none";
    case StrategyKind::kNearestNodeBias:
      return "nearest_node_bias";
    case StrategyKind::kSampleBias:
      return "sample_bias";
  }
  return "none";
}

void parse_environment(Reader& r, ScenarioFile& out) {
  const std::string kind = r.word("kind");
  if (kind == "point2d") {
    out.kind = EnvironmentKind::kPoint2d;
  } else if (kind == "planar_arm") {
    out.kind = EnvironmentKind::kPlanarArm;
  } else {
    throw ScenarioError(r.line_of("kind"), fmt::format("unknown environment kind '{}'", kind));
  }
  Entry& b = r.require("bounds");
  const auto bv = r.numbers(b, 4);
  out.bounds = {{bv[0], bv[1]}, {bv[2], bv[3]}};
  try {
    validate_shape(out.bounds);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(b.line, fmt::format("bounds: {}", e.what()));
  }
  out.start = Config::from(r.numbers(r.require("start")));
  out.goal = Config::from(r.numbers(r.require("goal")));
  if (out.start.dim() > kMaxDimension || out.goal.dim() > kMaxDimension) {
    throw ScenarioError(r.line(), "configuration has too many coordinates");
  }
}

ObstacleRegion parse_obstacle(Reader& r, const AxisAlignedRect& bounds) {
  ObstacleRegion o;
  const std::string shape = r.word("shape");
  if (shape == "circle") {
    o.shape = Circle{r.point("center"), r.number("radius")};
  } else if (shape == "rect") {
    o.shape = AxisAlignedRect{r.point("min"), r.point("max")};
  } else {
    throw ScenarioError(r.line_of("shape"), fmt::format("unknown shape '{}'", shape));
  }
  try {
    validate_shape(o.shape);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(r.line(), e.what());
  }
  if (!intersects(o.shape, bounds)) {
    throw ScenarioError(r.line(), "obstacle lies entirely outside the world bounds");
  }

  const std::string perm = r.word("permeability");
  if (perm == "permeable") {
    const double cost = r.number("cost");
    if (!(cost > 0.0)) throw ScenarioError(r.line_of("cost"), "permeable cost must be > 0");
    o.permeability = Permeable{cost};
  } else if (perm == "impermeable") {
    o.permeability = Impermeable{};
  } else {
    throw ScenarioError(r.line_of("permeability"),
                        fmt::format("unknown permeability '{}'", perm));
  }
  return o;
}

ArmSpec parse_arm(Reader& r) {
  ArmSpec a;
  a.links = r.numbers(r.require("links"));
  a.base = r.point("base");
  Entry& lim = r.require("joint_limits");
  const auto lv = r.numbers(lim);
  if (lv.size() != 2 * a.links.size()) {
    throw ScenarioError(lim.line, "joint_limits needs one 'lo hi' pair per link");
  }
  for (std::size_t i = 0; i < a.links.size(); ++i) a.joint_limits.push_back({lv[2 * i], lv[2 * i + 1]});
  Entry& spl = r.require("samples_per_link");
  const auto n = r.integer(spl);
  if (n < 1 || n > 1000) throw ScenarioError(spl.line, "samples_per_link must be in [1, 1000]");
  a.samples_per_link = static_cast<int>(n);
  a.goal_pose = r.point("goal_pose");
  return a;
}

void parse_potential(Reader& r, PotentialParams& p) {
  if (auto v = r.optional_number("k_att")) p.k_att = *v;
  if (auto v = r.optional_number("k_rep_perm")) p.k_rep_perm = *v;
  if (auto v = r.optional_number("k_rep_imp")) p.k_rep_imp = *v;
  if (auto v = r.optional_number("d_obs_star")) p.d_obs_star = *v;
  if (auto v = r.optional_number("beta")) p.beta = *v;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(r.line(), e.what());
  }
}

PlannerSettings parse_planner(Reader& r) {
  PlannerSettings s;
  Entry& it = r.require("max_iterations");
  const auto iters = r.integer(it);
  if (iters < 1 || iters > 10'000'000) throw ScenarioError(it.line, "max_iterations out of range");
  s.max_iterations = static_cast<int>(iters);
  s.delta = r.number("delta");
  if (!(s.delta > 0.0)) throw ScenarioError(r.line_of("delta"), "delta must be > 0");
  s.neighbor_radius = r.optional_number("neighbor_radius").value_or(s.delta);
  s.goal_radius = r.optional_number("goal_radius").value_or(s.delta);
  s.edge_check_resolution = r.optional_number("edge_check_resolution").value_or(s.delta / 10.0);
  if (!(s.neighbor_radius > 0.0)) {
    throw ScenarioError(r.line_of("neighbor_radius"), "neighbor_radius must be > 0");
  }
  if (s.neighbor_radius > s.delta) {
    throw ScenarioError(r.line_of("neighbor_radius"),
                        fmt::format("neighbor_radius {} exceeds delta {} (r <= delta required)",
                                    s.neighbor_radius, s.delta));
  }
  if (!(s.goal_radius > 0.0)) throw ScenarioError(r.line_of("goal_radius"), "goal_radius must be > 0");
  if (!(s.edge_check_resolution > 0.0)) {
    throw ScenarioError(r.line_of("edge_check_resolution"), "edge_check_resolution must be > 0");
  }
  return s;
}

ProfileSpec parse_profile(Reader& r, std::string name) {
  ProfileSpec p;
  p.name = std::move(name);
  const std::string strategy = r.word("strategy");
  if (strategy == "none") {
    p.strategy = StrategyKind::kNone;
  } else if (strategy == "nearest_node_bias") {
    p.strategy = StrategyKind::kNearestNodeBias;
  } else if (strategy == "sample_bias") {
    p.strategy = StrategyKind::kSampleBias;
  } else {
    throw ScenarioError(r.line_of("strategy"), fmt::format("unknown strategy '{}'", strategy));
  }
  p.k_att = r.optional_number("k_att");
  p.k_rep_perm = r.optional_number("k_rep_perm");
  p.k_rep_imp = r.optional_number("k_rep_imp");
  p.d_obs_star = r.optional_number("d_obs_star");
  p.beta = r.optional_number("beta");

  if (p.strategy == StrategyKind::kSampleBias) {
    p.step = r.number("step");
    if (!(*p.step > 0.0)) throw ScenarioError(r.line_of("step"), "step must be > 0");
    Entry& st = r.require("steps");
    const auto k = r.integer(st);
    if (k < 0 || k > 1000) throw ScenarioError(st.line, "steps must be in [0, 1000]");
    p.steps = static_cast<int>(k);
  } else {
    for (const char* key : {"step", "steps"}) {
      if (r.has(key)) {
        throw ScenarioError(r.line_of(key),
                            fmt::format("'{}' only applies to strategy sample_bias", key));
      }
    }
  }
  return p;
}

ExperimentBlock parse_experiment(Reader& r, int max_iterations) {
  ExperimentBlock e;
  Entry& tr = r.require("trials");
  const auto trials = r.integer(tr);
  if (trials < 2 || trials > 1'000'000) throw ScenarioError(tr.line, "trials must be >= 2");
  e.trials = static_cast<int>(trials);
  Entry& seed = r.require("base_seed");
  const auto s = r.integer(seed);
  if (s < 0) throw ScenarioError(seed.line, "base_seed must be >= 0");
  e.base_seed = static_cast<std::uint64_t>(s);

  Entry& cp = r.require("checkpoints");
  for (auto tok : split_ws(cp.value)) {
    const auto c = parse_integer(tok, cp.line);
    if (c < 1 || c > max_iterations) {
      throw ScenarioError(cp.line, fmt::format("checkpoint {} outside [1, max_iterations]", c));
    }
    if (!e.checkpoints.empty() && c <= e.checkpoints.back()) {
      throw ScenarioError(cp.line, "checkpoints must be strictly increasing");
    }
    e.checkpoints.push_back(static_cast<int>(c));
  }
  if (auto* ref = r.find("reference")) e.reference = ref->value;
  return e;
}

PotentialParams resolve_potential(const ScenarioFile& s, const ProfileSpec& p) {
  PotentialParams out = s.potential;
  if (p.k_att) out.k_att = *p.k_att;
  if (p.k_rep_perm) out.k_rep_perm = *p.k_rep_perm;
  if (p.k_rep_imp) out.k_rep_imp = *p.k_rep_imp;
  if (p.d_obs_star) out.d_obs_star = *p.d_obs_star;
  if (p.beta) out.beta = *p.beta;
  return out;
}

std::string fmt_num(double v) { return fmt::format("{}", v); }

std::string fmt_config(const Config& q) {
  std::string s;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (i) s += ' ';
    s += fmt_num(q[i]);
  }
  return s;
}

}  // namespace

ScenarioError::ScenarioError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, message) : message),
      line_(line) {}

const ProfileSpec& ScenarioFile::profile(std::string_view name) const {
  for (const auto& p : profiles) {
    if (p.name == name) return p;
  }
  throw ScenarioError(0, fmt::format("unknown profile '{}'", name));
}

ScenarioFile parse_scenario(std::string_view text) {
  std::vector<Section> sections = tokenize(text);
  ScenarioFile out;

  std::map<std::string, int> seen;
  const std::set<std::string> singletons{"scenario", "environment", "arm", "potential", "planner",
                                         "experiment"};
  for (const auto& s : sections) {
    if (singletons.count(s.name)) {
      if (!s.argument.empty()) {
        throw ScenarioError(s.line, fmt::format("[{}] takes no argument", s.name));
      }
      if (seen.count(s.name)) throw ScenarioError(s.line, fmt::format("duplicate [{}]", s.name));
      seen[s.name] = s.line;
    } else if (s.name == "obstacle") {
      if (!s.argument.empty()) throw ScenarioError(s.line, "[obstacle] takes no argument");
    } else if (s.name == "profile") {
      if (s.argument.empty()) throw ScenarioError(s.line, "[profile] needs a name");
    } else {
      throw ScenarioError(s.line, fmt::format("unknown section [{}]", s.name));
    }
  }
  for (const char* required : {"environment", "planner"}) {
    if (!seen.count(required)) {
      throw ScenarioError(0, fmt::format("missing required section [{}]", required));
    }
  }

  auto section = [&](std::string_view name) -> Section* {
    for (auto& s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  };

  if (Section* s = section("scenario")) {
    Reader r(*s);
    out.name = r.word("name");
    r.finish();
  }
  {
    Reader r(*section("environment"));
    parse_environment(r, out);
    r.finish();
  }
  for (auto& s : sections) {
    if (s.name != "obstacle") continue;
    Reader r(s);
    out.obstacles.push_back(parse_obstacle(r, out.bounds));
    r.finish();
  }
  if (Section* s = section("arm")) {
    if (out.kind != EnvironmentKind::kPlanarArm) {
      throw ScenarioError(s->line, "[arm] requires kind = planar_arm");
    }
    Reader r(*s);
    out.arm = parse_arm(r);
    r.finish();
  } else if (out.kind == EnvironmentKind::kPlanarArm) {
    throw ScenarioError(seen["environment"], "kind = planar_arm needs an [arm] section");
  }
  if (Section* s = section("potential")) {
    Reader r(*s);
    parse_potential(r, out.potential);
    r.finish();
  }
  {
    Reader r(*section("planner"));
    out.planner = parse_planner(r);
    r.finish();
  }
  std::set<std::string> names;
  for (auto& s : sections) {
    if (s.name != "profile") continue;
    if (!names.insert(s.argument).second) {
      throw ScenarioError(s.line, fmt::format("duplicate profile '{}'", s.argument));
    }
    Reader r(s);
    out.profiles.push_back(parse_profile(r, s.argument));
    r.finish();
  }
  if (out.profiles.empty()) throw ScenarioError(0, "at least one [profile NAME] is required");

  if (Section* s = section("experiment")) {
    Reader r(*s);
    out.experiment = parse_experiment(r, out.planner.max_iterations);
    if (out.experiment->reference.empty()) {
      out.experiment->reference = out.profiles.front().name;
    } else if (!names.count(out.experiment->reference)) {
      throw ScenarioError(r.line_of("reference"),
                          fmt::format("reference '{}' is not a declared profile",
                                      out.experiment->reference));
    }
    r.finish();
  }

  // Profile overrides must still give valid potentials.
  for (const auto& p : out.profiles) {
    try {
      resolve_potential(out, p).validate();
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(0, fmt::format("profile '{}': {}", p.name, e.what()));
    }
  }

  try {
    build_environment(out);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(seen["environment"], e.what());
  } catch (const std::out_of_range& e) {
    throw ScenarioError(seen["environment"], e.what());
  }
  return out;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(errno ? errno : ENOENT, std::generic_category(),
                            "cannot open scenario '" + path + "'");
  }
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_scenario(text);
}

std::string emit_scenario(const ScenarioFile& s) {
  std::string out;
  auto kv = [&](std::string_view k, const std::string& v) { out += fmt::format("{} = {}\n", k, v); };

  if (!s.name.empty()) {
    out += "[scenario]\n";
    kv("name", s.name);
    out += "\n";
  }
  out += "[environment]\n";
  kv("kind", s.kind == EnvironmentKind::kPoint2d ? "point2d" : "planar_arm");
  kv("bounds", fmt::format("{} {} {} {}", fmt_num(s.bounds.min.x), fmt_num(s.bounds.min.y),
                           fmt_num(s.bounds.max.x), fmt_num(s.bounds.max.y)));
  kv("start", fmt_config(s.start));
  kv("goal", fmt_config(s.goal));

  if (s.arm) {
    out += "\n[arm]\n";
    std::string links, limits;
    for (std::size_t i = 0; i < s.arm->links.size(); ++i) {
      if (i) links += ' ', limits += ' ';
      links += fmt_num(s.arm->links[i]);
      limits += fmt_num(s.arm->joint_limits[i].lo) + " " + fmt_num(s.arm->joint_limits[i].hi);
    }
    kv("links", links);
    kv("base", fmt_num(s.arm->base.x) + " " + fmt_num(s.arm->base.y));
    kv("joint_limits", limits);
    kv("samples_per_link", std::to_string(s.arm->samples_per_link));
    kv("goal_pose", fmt_num(s.arm->goal_pose.x) + " " + fmt_num(s.arm->goal_pose.y));
  }

  for (const auto& o : s.obstacles) {
    out += "\n[obstacle]\n";
    if (const auto* c = std::get_if<Circle>(&o.shape)) {
      kv("shape", "circle");
      kv("center", fmt_num(c->center.x) + " " + fmt_num(c->center.y));
      kv("radius", fmt_num(c->radius));
    } else {
      const auto& r = std::get<AxisAlignedRect>(o.shape);
      kv("shape", "rect");
      kv("min", fmt_num(r.min.x) + " " + fmt_num(r.min.y));
      kv("max", fmt_num(r.max.x) + " " + fmt_num(r.max.y));
    }
    if (const auto* p = std::get_if<Permeable>(&o.permeability)) {
      kv("permeability", "permeable");
      kv("cost", fmt_num(p->cost));
    } else {
      kv("permeability", "impermeable");
    }
  }

  out += "\n[potential]\n";
  kv("k_att", fmt_num(s.potential.k_att));
  kv("k_rep_perm", fmt_num(s.potential.k_rep_perm));
  kv("k_rep_imp", fmt_num(s.potential.k_rep_imp));
  kv("d_obs_star", fmt_num(s.potential.d_obs_star));
  kv("beta", fmt_num(s.potential.beta));

  out += "\n[planner]\n";
  kv("max_iterations", std::to_string(s.planner.max_iterations));
  kv("delta", fmt_num(s.planner.delta));
  kv("neighbor_radius", fmt_num(s.planner.neighbor_radius));
  kv("goal_radius", fmt_num(s.planner.goal_radius));
  kv("edge_check_resolution", fmt_num(s.planner.edge_check_resolution));

  for (const auto& p : s.profiles) {
    out += fmt::format("\n[profile {}]\n", p.name);
    kv("strategy", std::string(strategy_name(p.strategy)));
    if (p.k_att) kv("k_att", fmt_num(*p.k_att));
    if (p.k_rep_perm) kv("k_rep_perm", fmt_num(*p.k_rep_perm));
    if (p.k_rep_imp) kv("k_rep_imp", fmt_num(*p.k_rep_imp));
    if (p.d_obs_star) kv("d_obs_star", fmt_num(*p.d_obs_star));
    if (p.beta) kv("beta", fmt_num(*p.beta));
    if (p.step) kv("step", fmt_num(*p.step));
    if (p.steps) kv("steps", std::to_string(*p.steps));
  }

  if (s.experiment) {
    out += "\n[experiment]\n";
    kv("trials", std::to_string(s.experiment->trials));
    kv("base_seed", std::to_string(s.experiment->base_seed));
    std::string cps;
    for (std::size_t i = 0; i < s.experiment->checkpoints.size(); ++i) {
      if (i) cps += ' ';
      cps += std::to_string(s.experiment->checkpoints[i]);
    }
    kv("checkpoints", cps);
    kv("reference", s.experiment->reference);
  }
  return out;
}

std::shared_ptr<const CSpaceEnvironment> build_environment(const ScenarioFile& s) {
  World world(s.bounds, s.obstacles);
  if (s.kind == EnvironmentKind::kPoint2d) {
    if (s.start.dim() != 2 || s.goal.dim() != 2) {
      throw std::invalid_argument("point2d start/goal need two coordinates");
    }
    return point2d_env(std::move(world), s.start, s.goal);
  }
  if (!s.arm) throw std::invalid_argument("planar_arm scenario without [arm]");
  PlanarArm arm{s.arm->links, s.arm->base, s.arm->joint_limits, s.arm->samples_per_link};
  return arm_env(std::move(arm), std::move(world), s.start, s.arm->goal_pose, s.goal);
}

PlannerParams build_planner_params(const ScenarioFile& s, std::string_view profile,
                                   const CSpaceEnvironment& env, std::uint64_t seed) {
  const ProfileSpec& p = s.profile(profile);
  PlannerParams params;
  params.max_iterations = s.planner.max_iterations;
  params.delta = s.planner.delta;
  params.neighbor_radius = s.planner.neighbor_radius;
  params.goal_radius = s.planner.goal_radius;
  params.edge_check_resolution = s.planner.edge_check_resolution;
  params.rng_seed = seed;
  params.checkpoints =
      s.experiment ? s.experiment->checkpoints : std::vector<int>{s.planner.max_iterations};

  const PotentialParams potential = with_attractive_scale(resolve_potential(s, p), env);
  switch (p.strategy) {
    case StrategyKind::kNone:
      params.strategy = NoBias{};
      break;
    case StrategyKind::kNearestNodeBias:
      params.strategy = NearestNodeBias{potential};
      break;
    case StrategyKind::kSampleBias:
      params.strategy = SampleBias{potential, *p.step, *p.steps};
      break;
  }
  params.validate();
  return params;
}

ExperimentSpec build_experiment(const ScenarioFile& s,
                                std::shared_ptr<const CSpaceEnvironment> env) {
  if (!s.experiment) throw ScenarioError(0, "scenario has no [experiment] section");
  ExperimentSpec spec;
  spec.trials = s.experiment->trials;
  spec.base_seed = s.experiment->base_seed;
  for (const auto& p : s.profiles) {
    spec.algorithms.push_back({p.name, build_planner_params(s, p.name, *env)});
  }
  spec.environment = std::move(env);
  return spec;
}

}  // namespace apfrrt
