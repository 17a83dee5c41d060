// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latwalk/point.hpp"

namespace latwalk {

// Outcome of one randomized invariant suite.
struct VerifyResult {
  std::string suite;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  bool ok() const { return failures == 0; }
};

// Nonempty random step set: |X| <= max_size, coordinates in
// [-coord, coord]^2, origin excluded, deduplicated.
std::vector<Pt> random_step_set(std::mt19937_64& gen, int max_size = 5,
                                std::int64_t coord = 5);

// Random finite sets: the ten-row table admits only the all-or-nothing rows,
// the half-plane verdict mirrors hull membership, and every infinite-count
// verdict carries a replayable O-sum certificate.
VerifyResult verify_finite_dichotomy(std::uint64_t seed, int trials = 500);

// Every holding condition's emitted witness replays against all steps.
VerifyResult verify_witness_replay(std::uint64_t seed, int trials = 300);

// Group verdict agrees with the relative-interior criterion.
VerifyResult verify_group_agreement(std::uint64_t seed, int trials = 500);

// Exact sweep counts equal brute-force word enumeration on random
// half-plane-confined instances with walk length at most 7.
VerifyResult verify_oracle_equivalence(std::uint64_t seed, int trials = 200);

// Built-in regions contain O and pass randomized closure-under-addition
// checks.
VerifyResult verify_region_closure(std::uint64_t seed);

// Exact quadratic-field arithmetic identities on random elements.
VerifyResult verify_quadfield_arithmetic(std::uint64_t seed, int trials = 1000);

// Element-finding in the quadratic monoid: the produced element lies strictly
// between alpha and alpha + 1/k and its coefficient lands in [p, p + p_k].
VerifyResult verify_appendix_band(std::uint64_t seed, int trials = 50);

// All suites above with their default trial counts.
std::vector<VerifyResult> run_verify_suites(std::uint64_t seed);

}  // namespace latwalk
