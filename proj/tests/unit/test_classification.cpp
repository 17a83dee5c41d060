// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/classification.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

using testing::kEN;
using testing::kNES;
using testing::kNESW;
using testing::kNESWU;

TEST_CASE("flag patterns map onto the ten consistent rows") {
  struct Row {
    bool cc, slc, lc, fpp, bpp, ipp;
    Combination expect;
  };
  const Row rows[] = {
      {true, true, true, true, true, false, Combination::I},
      {false, true, true, true, true, false, Combination::II},
      {false, true, true, false, true, false, Combination::III},
      {false, false, true, true, true, false, Combination::IV},
      {false, false, true, false, true, false, Combination::V},
      {false, false, true, false, false, false, Combination::VI},
      {false, false, false, true, true, false, Combination::VII},
      {false, false, false, false, true, false, Combination::VIII},
      {false, false, false, false, false, false, Combination::IX},
      {false, false, false, false, false, true, Combination::X},
  };
  std::set<Combination> seen;
  for (const Row& r : rows) {
    CHECK(combination_from_flags(r.cc, r.slc, r.lc, r.fpp, r.bpp, r.ipp) ==
          r.expect);
    seen.insert(r.expect);
  }
  CHECK(seen.size() == 10);

  // Hierarchy violations are rejected, not mislabeled.
  CHECK_THROWS_AS(combination_from_flags(true, false, true, true, true, false),
                  std::logic_error);  // cc without slc
  CHECK_THROWS_AS(combination_from_flags(false, false, true, true, true, true),
                  std::logic_error);  // lc with ipp
  CHECK_THROWS_AS(combination_from_flags(false, false, false, true, false, false),
                  std::logic_error);  // fpp without bpp

  // Labels round-trip.
  for (const Row& r : rows) {
    const auto back = combination_from_label(combination_label(r.expect));
    REQUIRE(back.has_value());
    CHECK(*back == r.expect);
  }
  CHECK_FALSE(combination_from_label("(XI)").has_value());
}

TEST_CASE("finite sets classify as the half-plane dichotomy") {
  SUBCASE("staircase steps") {
    const ClassificationReport r = classify_finite(kEN);
    CHECK(r.combination == Combination::I);
    CHECK(r.fpp == TriBool::Yes);
    CHECK(r.bpp == TriBool::Yes);
    CHECK(r.ipp == TriBool::No);
    CHECK(r.cc.holds);
    CHECK_FALSE(r.units_nontrivial);
    CHECK(r.group_iso == GroupIso::NotGroup);
  }
  SUBCASE("all four unit steps") {
    const ClassificationReport r = classify_finite(kNESW);
    CHECK(r.combination == Combination::X);
    CHECK(r.ipp == TriBool::Yes);
    REQUIRE(r.ipp_cycle.has_value());
    CHECK(walk_endpoint(*r.ipp_cycle) == kOrigin);
    CHECK_FALSE(r.ipp_cycle->empty());
    CHECK(r.units_nontrivial);
    CHECK(r.group_iso == GroupIso::Z2);
  }
  SUBCASE("three unit steps: weak line only") {
    const ClassificationReport r = classify_finite(kNES);
    CHECK(r.combination == Combination::X);
    CHECK(r.wlc.holds);
    CHECK_FALSE(r.lc.holds);
    CHECK(r.group_iso == GroupIso::NotGroup);
    CHECK(r.units_nontrivial);  // N and S are mutually inverse
  }
  SUBCASE("empty set") {
    const ClassificationReport r = classify_finite({});
    CHECK(r.combination == Combination::I);
    CHECK(r.group_iso == GroupIso::Trivial);
  }
  SUBCASE("audit rejects inconsistent reports") {
    ClassificationReport r = classify_finite(kEN);
    r.ipp = TriBool::Yes;  // contradicts the half-plane witness
    CHECK_THROWS_AS(audit_hierarchy(r), std::logic_error);
  }
}

TEST_CASE("group structure catalog") {
  CHECK(group_structure({}) == GroupIso::Trivial);
  CHECK(group_structure(kNESW) == GroupIso::Z2);
  CHECK(group_structure(kNES) == GroupIso::NotGroup);
  CHECK(group_structure({{3, 0}, {-6, 0}}) == GroupIso::Z);
  CHECK(group_structure({{2, 1}, {-2, -1}}) == GroupIso::Z);
  CHECK(group_structure({{2, 1}, {4, 2}}) == GroupIso::NotGroup);
  CHECK(group_structure({{1, 1}, {-1, 0}, {0, -1}}) == GroupIso::Z2);
}

TEST_CASE("one- and two-step monoid taxonomy") {
  const MonoidType one = small_stepset_monoid({{2, 3}});
  CHECK(one.kind == MonoidType::Kind::FreeOnOneGenerator);

  const MonoidType plane = small_stepset_monoid({{1, 0}, {0, 1}});
  CHECK(plane.kind == MonoidType::Kind::FreeCommutativeRankTwo);

  const MonoidType z = small_stepset_monoid({{3, 0}, {-6, 0}});
  CHECK(z.kind == MonoidType::Kind::GroupZ);

  const MonoidType num = small_stepset_monoid({{2, 2}, {3, 3}});
  CHECK(num.kind == MonoidType::Kind::NumericalMonoid);
  CHECK(num.k == 2);
  CHECK(num.l == 3);
  CHECK(num.scale == 1);

  // Common factor in the multiples is pulled out as a scale.
  const MonoidType scaled = small_stepset_monoid({{4, 0}, {6, 0}});
  CHECK(scaled.kind == MonoidType::Kind::NumericalMonoid);
  CHECK(scaled.k == 2);
  CHECK(scaled.l == 3);
  CHECK(scaled.scale == 2);

  CHECK_THROWS_AS(small_stepset_monoid({}), ValidationError);
  CHECK_THROWS_AS(small_stepset_monoid({{1, 0}, {0, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("two-term recurrences") {
  CHECK(recurrence_sequence(1, 2, 10) ==
        std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
  CHECK(recurrence_sequence(1, 3, 5) == std::vector<BigInt>{1, 1, 1, 2, 3, 4});
  CHECK(recurrence_sequence(2, 3, 6) == std::vector<BigInt>{1, 0, 1, 1, 1, 2, 2});
  CHECK_THROWS_AS(recurrence_sequence(2, 2, 5), ValidationError);
  CHECK_THROWS_AS(recurrence_sequence(0, 2, 5), ValidationError);
  CHECK_THROWS_AS(recurrence_sequence(1, 2, -1), ValidationError);
}

TEST_CASE("recurrences match walk counts along a ray") {
  // Steps k*D and l*D: walks to n*D are compositions of n into parts {k, l}.
  const Pt D{1, 1};
  const std::pair<long long, long long> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& [k, l] : pairs) {
    const std::vector<Pt> X{k * D, l * D};
    const auto seq = recurrence_sequence(k, l, 12);
    for (long long n = 0; n <= 12; ++n) {
      const CountOutcome o = count_walks(X, n * D);
      CHECK(o.count == WalkCount::exact(seq[static_cast<std::size_t>(n)]));
    }
  }
}

TEST_CASE("constrained classification: diagonal chain") {
  const ClassificationReport r =
      classify_constrained(kNESWU, Constraint::diagonal_chain());
  CHECK(r.combination == Combination::VII);
  CHECK(r.fpp == TriBool::Yes);
  CHECK(r.bpp == TriBool::Yes);
  CHECK(r.ipp == TriBool::No);
  REQUIRE(r.admissible.has_value());
  CHECK(r.admissible->complete());
  CHECK(r.admissible->confirmed_steps() == std::vector<Pt>{{1, 1}});
}

TEST_CASE("constrained classification: punctured quadrant") {
  const ClassificationReport r =
      classify_constrained(kNESWU, Constraint::punctured_quadrant());
  CHECK(r.combination == Combination::IX);
  CHECK(r.fpp == TriBool::No);
  CHECK(r.bpp == TriBool::No);
  CHECK(r.ipp == TriBool::No);
  REQUIRE(r.fpp_refutation.has_value());
  CHECK(r.fpp_refutation->replay());
  // The origin is reachable only by the empty walk.
  CHECK(count_walks(kNESWU, {0, 0}, Constraint::punctured_quadrant()).count ==
        WalkCount::exact(1));
}

TEST_CASE("constrained classification: region without bite") {
  const ClassificationReport r =
      classify_constrained(kEN, Constraint::below_diagonal());
  CHECK(r.combination == Combination::I);
  CHECK(r.fpp == TriBool::Yes);

  const ClassificationReport full =
      classify_constrained(kNESW, Constraint::full_plane());
  CHECK(full.combination == Combination::X);
  CHECK(full.ipp == TriBool::Yes);
}

TEST_CASE("constrained classification rejects unvetted custom regions") {
  const Constraint undeclared = Constraint::custom(
      [](Pt p) { return p.x >= 0; }, "right half-plane", false);
  CHECK_THROWS_AS(classify_constrained(kEN, undeclared), ValidationError);

  const Constraint lying = Constraint::custom(
      [](Pt p) { return p.is_origin() || (p.x >= 0 && p.x <= 2); },
      "strip (claims closure, is not closed)", true);
  CHECK_THROWS_AS(classify_constrained(kEN, lying), ValidationError);
}

TEST_CASE("constrained units and group verdicts") {
  SUBCASE("trivial endpoint monoid is detected exactly") {
    const UnitsGroupReport r =
        constrained_units_and_group(kNESW, Constraint::punctured_quadrant());
    CHECK(r.units == TriBool::No);
    CHECK(r.group == TriBool::Yes);  // the endpoint monoid is {O}
  }
  SUBCASE("full plane matches the unconstrained verdicts") {
    const UnitsGroupReport r =
        constrained_units_and_group(kNESW, Constraint::full_plane());
    CHECK(r.units == TriBool::Yes);
    CHECK(r.group == TriBool::Yes);
  }
  SUBCASE("line-confined region with both directions") {
    const Constraint line = Constraint::halfplane_intersection({{0, 1}, {0, -1}});
    const UnitsGroupReport r =
        constrained_units_and_group({{1, 0}, {-1, 0}, {0, 1}}, line);
    CHECK(r.units == TriBool::Yes);
    CHECK(r.group == TriBool::Yes);
    REQUIRE(r.units_witness.has_value());
    CHECK(walk_is_constrained(r.units_witness->first, line));
    CHECK(walk_is_constrained(r.units_witness->second, line));
    CHECK(walk_endpoint(r.units_witness->first) ==
          -walk_endpoint(r.units_witness->second));
  }
  SUBCASE("quadrant region kills units") {
    const UnitsGroupReport r =
        constrained_units_and_group(kNESWU, Constraint::punctured_quadrant());
    CHECK(r.units == TriBool::No);
    CHECK(r.group == TriBool::No);  // (1,1) is reachable but (-1,-1) is not
  }
}

TEST_CASE("vertical slice guard") {
  CHECK(vertical_slice_guard({{1, -5}, {1, 0}, {2, 4}, {0, -1}}));
  CHECK_FALSE(vertical_slice_guard({{0, 1}, {1, 0}}));   // positive y-axis step
  CHECK_FALSE(vertical_slice_guard({{-1, 0}, {1, 0}}));  // negative x
}

}  // namespace
}  // namespace latwalk
