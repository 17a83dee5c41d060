// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/jobspec.hpp"

#include <set>

#include "json.hpp"
#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

long long expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

Pt parse_point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
  return {expect_int(j[0], path + "[0]"), expect_int(j[1], path + "[1]")};
}

std::vector<Pt> parse_points(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [x, y] pairs");
  std::vector<Pt> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_point(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json point_json(Pt p) { return json::array({p.x, p.y}); }

json window_json(const Window& w) {
  return json{{"xmin", w.xmin}, {"xmax", w.xmax}, {"ymin", w.ymin}, {"ymax", w.ymax}};
}

Window parse_window(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected {xmin, xmax, ymin, ymax}");
  Window w;
  for (const char* key : {"xmin", "xmax", "ymin", "ymax"})
    if (!j.contains(key)) fail(path, std::string("missing ") + key);
  w.xmin = expect_int(j["xmin"], path + ".xmin");
  w.xmax = expect_int(j["xmax"], path + ".xmax");
  w.ymin = expect_int(j["ymin"], path + ".ymin");
  w.ymax = expect_int(j["ymax"], path + ".ymax");
  if (!w.valid()) fail(path, "empty window (min exceeds max)");
  return w;
}

json stepset_json(const StepSetSpec& s) {
  json j;
  if (s.family) {
    j["family"] = std::string(family_name(*s.family));
    json trunc{{"bound", s.truncation.bound}};
    if (s.truncation.window) trunc["window"] = window_json(*s.truncation.window);
    j["truncation"] = trunc;
    j["params"] = json{{"d", s.params.d},
                       {"side", s.params.side == HalfplaneSide::Below ? "below"
                                                                      : "above"}};
  } else {
    j["steps"] = json::array();
    for (Pt p : s.explicit_steps) j["steps"].push_back(point_json(p));
  }
  return j;
}

StepSetSpec parse_stepset(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected {steps} or {family, ...}");
  StepSetSpec s;
  if (j.contains("family")) {
    if (j.contains("steps")) fail(path, "give either steps or family, not both");
    const std::string name = j["family"].is_string()
                                 ? j["family"].get<std::string>()
                                 : std::string{};
    const auto fam = family_from_name(name);
    if (!fam) fail(path + ".family", "unknown family '" + name + "'");
    s.family = *fam;
    if (j.contains("truncation")) {
      const json& t = j["truncation"];
      if (!t.is_object()) fail(path + ".truncation", "expected an object");
      if (t.contains("bound"))
        s.truncation.bound = expect_int(t["bound"], path + ".truncation.bound");
      if (t.contains("window"))
        s.truncation.window = parse_window(t["window"], path + ".truncation.window");
    }
    if (j.contains("params")) {
      const json& p = j["params"];
      if (!p.is_object()) fail(path + ".params", "expected an object");
      if (p.contains("d")) s.params.d = expect_int(p["d"], path + ".params.d");
      if (p.contains("side")) {
        const std::string side = p["side"].is_string()
                                     ? p["side"].get<std::string>()
                                     : std::string{};
        if (side == "below")
          s.params.side = HalfplaneSide::Below;
        else if (side == "above")
          s.params.side = HalfplaneSide::Above;
        else
          fail(path + ".params.side", "expected \"below\" or \"above\"");
      }
    }
  } else if (j.contains("steps")) {
    s.explicit_steps = parse_points(j["steps"], path + ".steps");
  } else {
    fail(path, "needs either \"steps\" or \"family\"");
  }
  return s;
}

json constraint_json(const ConstraintSpec& c) {
  json j{{"kind", std::string(constraint_kind_name(c.kind))}};
  if (c.kind == ConstraintKind::HalfplaneIntersection) {
    j["normals"] = json::array();
    for (Pt u : c.normals) j["normals"].push_back(point_json(u));
  }
  return j;
}

ConstraintSpec parse_constraint(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind")) fail(path, "expected {kind, ...}");
  const std::string kind =
      j["kind"].is_string() ? j["kind"].get<std::string>() : std::string{};
  ConstraintSpec c;
  bool found = false;
  for (ConstraintKind k :
       {ConstraintKind::FullPlane, ConstraintKind::HalfplaneIntersection,
        ConstraintKind::PuncturedQuadrant, ConstraintKind::DiagonalChain,
        ConstraintKind::BelowDiagonal}) {
    if (constraint_kind_name(k) == kind) {
      c.kind = k;
      found = true;
      break;
    }
  }
  if (!found) fail(path + ".kind", "unknown or unserializable kind '" + kind + "'");
  if (c.kind == ConstraintKind::HalfplaneIntersection) {
    if (!j.contains("normals")) fail(path, "halfplane_intersection needs normals");
    c.normals = parse_points(j["normals"], path + ".normals");
    if (c.normals.empty()) fail(path + ".normals", "needs at least one normal");
  }
  return c;
}

}  // namespace

Constraint ConstraintSpec::build() const {
  switch (kind) {
    case ConstraintKind::FullPlane: return Constraint::full_plane();
    case ConstraintKind::HalfplaneIntersection:
      return Constraint::halfplane_intersection(normals);
    case ConstraintKind::PuncturedQuadrant: return Constraint::punctured_quadrant();
    case ConstraintKind::DiagonalChain: return Constraint::diagonal_chain();
    case ConstraintKind::BelowDiagonal: return Constraint::below_diagonal();
    case ConstraintKind::CustomPredicate:
      throw ValidationError("custom predicates have no serialized form");
  }
  throw std::logic_error("unmapped constraint kind");
}

std::string jobspec_to_json(const JobSpec& job) {
  json j;
  j["v"] = job.v;
  j["subcommand"] = job.subcommand;
  j["stepset"] = stepset_json(job.stepset);
  j["constraint"] = constraint_json(job.constraint);
  if (job.window) j["window"] = window_json(*job.window);
  if (job.target) j["target"] = point_json(*job.target);
  if (job.max_len) j["max_len"] = *job.max_len;
  if (job.sequence) {
    j["sequence"] = json{
        {"mode", job.sequence->mode == SequenceQuery::Mode::Diagonal ? "diagonal"
                                                                     : "row"},
        {"index", job.sequence->index},
        {"length", job.sequence->length}};
  }
  j["appendix"] = json{{"k_max", job.appendix_kmax}, {"d", job.appendix_d}};
  j["seed"] = job.seed;
  j["oeis"] = std::string(oeis_mode_name(job.oeis));
  if (!job.outputs.empty()) {
    json outs;
    for (const auto& [key, value] : job.outputs) outs[key] = value;
    j["outputs"] = outs;
  }
  return j.dump(2) + "\n";
}

JobSpec jobspec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("job JSON does not parse: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected a JSON object");
  JobSpec job;
  if (!j.contains("v")) fail("$.v", "missing schema version");
  job.v = static_cast<int>(expect_int(j["v"], "$.v"));
  if (job.v != 1) fail("$.v", "unsupported schema version");

  static const std::set<std::string> subcommands{
      "classify", "count", "graph", "sequence", "appendix", "verify"};
  if (!j.contains("subcommand") || !j["subcommand"].is_string())
    fail("$.subcommand", "expected a string");
  job.subcommand = j["subcommand"].get<std::string>();
  if (!subcommands.contains(job.subcommand))
    fail("$.subcommand", "unknown subcommand '" + job.subcommand + "'");

  if (j.contains("stepset")) job.stepset = parse_stepset(j["stepset"], "$.stepset");
  if (j.contains("constraint"))
    job.constraint = parse_constraint(j["constraint"], "$.constraint");
  if (j.contains("window")) job.window = parse_window(j["window"], "$.window");
  if (j.contains("target")) job.target = parse_point(j["target"], "$.target");
  if (j.contains("max_len")) job.max_len = expect_int(j["max_len"], "$.max_len");
  if (j.contains("sequence")) {
    const json& s = j["sequence"];
    if (!s.is_object()) fail("$.sequence", "expected an object");
    SequenceQuery q;
    if (s.contains("mode")) {
      const std::string mode =
          s["mode"].is_string() ? s["mode"].get<std::string>() : std::string{};
      if (mode == "diagonal")
        q.mode = SequenceQuery::Mode::Diagonal;
      else if (mode == "row")
        q.mode = SequenceQuery::Mode::Row;
      else
        fail("$.sequence.mode", "expected \"diagonal\" or \"row\"");
    }
    if (s.contains("index")) q.index = expect_int(s["index"], "$.sequence.index");
    if (s.contains("length"))
      q.length = expect_int(s["length"], "$.sequence.length");
    if (q.length < 1) fail("$.sequence.length", "needs at least one term");
    job.sequence = q;
  }
  if (j.contains("appendix")) {
    const json& a = j["appendix"];
    if (!a.is_object()) fail("$.appendix", "expected an object");
    if (a.contains("k_max"))
      job.appendix_kmax = expect_int(a["k_max"], "$.appendix.k_max");
    if (a.contains("d")) job.appendix_d = expect_int(a["d"], "$.appendix.d");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      fail("$.seed", "expected an unsigned integer");
    job.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("oeis")) {
    const std::string mode =
        j["oeis"].is_string() ? j["oeis"].get<std::string>() : std::string{};
    const auto parsed = oeis_mode_from_name(mode);
    if (!parsed) fail("$.oeis", "expected off | online | fixture");
    job.oeis = *parsed;
  }
  if (j.contains("outputs")) {
    const json& outs = j["outputs"];
    if (!outs.is_object()) fail("$.outputs", "expected an object of paths");
    for (const auto& [key, value] : outs.items()) {
      if (!value.is_string()) fail("$.outputs." + key, "expected a path string");
      job.outputs[key] = value.get<std::string>();
    }
  }
  return job;
}

}  // namespace latwalk
