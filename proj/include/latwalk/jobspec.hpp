// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latwalk/oeis.hpp"
#include "latwalk/point.hpp"
#include "latwalk/stepset.hpp"

namespace latwalk {

// Serializable stand-in for a Constraint (custom predicates cannot round-trip
// through JSON and are rejected by the schema).
struct ConstraintSpec {
  ConstraintKind kind = ConstraintKind::FullPlane;
  std::vector<Pt> normals;  // HalfplaneIntersection only

  Constraint build() const;

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

// Row/diagonal extraction request for the sequence subcommand.
struct SequenceQuery {
  enum class Mode { Diagonal, Row };
  Mode mode = Mode::Diagonal;
  long long index = 0;   // Row: the fixed y-coordinate
  long long length = 8;  // number of terms

  friend bool operator==(const SequenceQuery&, const SequenceQuery&) = default;
};

// One fully-described unit of work.  Everything the CLI can do is expressible
// as a JobSpec, and every JobSpec round-trips through its JSON form.
struct JobSpec {
  int v = 1;
  std::string subcommand;  // classify | count | graph | sequence | appendix | verify
  StepSetSpec stepset;
  ConstraintSpec constraint;
  std::optional<Window> window;
  std::optional<Pt> target;
  std::optional<long long> max_len;
  std::optional<SequenceQuery> sequence;
  long long appendix_kmax = 1;
  long long appendix_d = 2;
  std::uint64_t seed = 20260825;
  OeisMode oeis = OeisMode::Off;
  std::map<std::string, std::string> outputs;  // "json"/"csv"/"dot"/"tikz" -> path

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

// JSON text form.  Serialization is deterministic (sorted keys, two-space
// indent); parsing validates and reports the offending path in the message.
std::string jobspec_to_json(const JobSpec& job);
JobSpec jobspec_from_json(const std::string& text);

}  // namespace latwalk
