// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latwalk/bigint.hpp"

namespace latwalk {

// Where sequence lookups resolve: Off returns nothing, Online queries the
// public search endpoint, Fixture reads bundled response files (the mode CI
// uses; LATWALK_OEIS_FIXTURES overrides the fixture directory).
enum class OeisMode { Off, Online, Fixture };

std::string_view oeis_mode_name(OeisMode m);
std::optional<OeisMode> oeis_mode_from_name(std::string_view name);

struct OeisMatch {
  std::string id;    // "A000108"
  std::string name;  // display name from the database

  friend bool operator==(const OeisMatch&, const OeisMatch&) = default;
};

// Ranked matches for a term prefix.  Online mode: HTTP GET with the
// comma-joined terms, a connect/read timeout, and one retry; NetworkError
// when both attempts fail.  Fixture mode: reads
// <fixture_dir>/<terms joined by '_'>.json (negatives render as "m<abs>");
// ValidationError when the fixture is missing.  Off mode: empty result.
// Empty term lists are rejected.
std::vector<OeisMatch> oeis_lookup(const std::vector<BigInt>& terms,
                                   OeisMode mode,
                                   const std::string& fixture_dir = {});

// The fixture filename a term list resolves to, e.g. "1_1_2_5_14_42.json".
std::string oeis_fixture_name(const std::vector<BigInt>& terms);

}  // namespace latwalk
