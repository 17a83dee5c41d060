// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/enumeration.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

using testing::kEN;
using testing::kNESW;
using testing::kNESWU;

TEST_CASE("binomial counts for the two-step staircase") {
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b) {
      const CountOutcome o = count_walks(kEN, {a, b});
      CHECK(o.count == WalkCount::exact(binomial(a + b, a)));
    }
  CHECK(count_walks(kEN, {-1, 0}).count == WalkCount::exact(0));
  CHECK(count_walks(kEN, {0, 0}).count == WalkCount::exact(1));
}

TEST_CASE("full four-step set is infinite everywhere reachable") {
  for (const Pt target : {Pt{0, 0}, Pt{3, -2}, Pt{-1, 5}}) {
    const CountOutcome o = count_walks(kNESW, target);
    CHECK(o.count.is_infinite());
    REQUIRE(o.evidence.has_value());
    CHECK(o.evidence->replay(kNESW, Constraint::full_plane(), target));
  }
}

TEST_CASE("reachability is decided exactly without a line condition") {
  // {(2,1),(-2,-1)} spans only the line Z*(2,1): off-line targets are Exact(0),
  // on-line targets are Infinite.
  const std::vector<Pt> X{{2, 1}, {-2, -1}};
  CHECK(count_walks(X, {1, 1}).count == WalkCount::exact(0));
  CHECK(count_walks(X, {4, 2}).count.is_infinite());
  CHECK(count_walks(X, {-2, -1}).count.is_infinite());

  // Full-rank sublattice: {(1,1),(1,-1),(-1,-1),(-1,1)} reaches exactly the
  // even-sum points, each infinitely often.
  const std::vector<Pt> diag{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
  CHECK(count_walks(diag, {1, 0}).count == WalkCount::exact(0));
  const CountOutcome o = count_walks(diag, {2, 0});
  CHECK(o.count.is_infinite());
  REQUIRE(o.evidence.has_value());
  CHECK(o.evidence->replay(diag, Constraint::full_plane(), {2, 0}));

  // Boundary of a closed half-plane: X touches the line but never crosses.
  // (0,1) can never be undone, so targets on the negative side are Exact(0).
  const std::vector<Pt> closed{{1, 0}, {-1, 0}, {0, 1}};
  CHECK(count_walks(closed, {0, -1}).count == WalkCount::exact(0));
  CHECK(count_walks(closed, {3, 0}).count.is_infinite());
}

TEST_CASE("constrained counts: ballot paths give Catalan numbers") {
  const Constraint below = Constraint::below_diagonal();
  const std::vector<BigInt> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(catalan.size()); ++n)
    CHECK(count_walks(kEN, {n, n}, below).count == WalkCount::exact(catalan[n]));
  // Off-region targets are unreachable.
  CHECK(count_walks(kEN, {1, 3}, below).count == WalkCount::exact(0));
}

TEST_CASE("constrained infinite verdicts carry replayable pumping evidence") {
  const Constraint punct = Constraint::punctured_quadrant();
  // (1,1) can be pumped: U, U then S/W loops inside the quadrant.
  const CountOutcome o = count_walks(kNESWU, {2, 2}, punct);
  CHECK(o.count.is_infinite());
  REQUIRE(o.evidence.has_value());
  CHECK(o.evidence->replay(kNESWU, punct, {2, 2}));

  // The origin itself is reached only by the empty walk: no step of X is the
  // negative of a region member.
  CHECK(count_walks(kNESWU, {0, 0}, punct).count == WalkCount::exact(1));
}

TEST_CASE("dead-frontier sweeps terminate with exact counts") {
  // Under the diagonal chain, no step of NESW is ever admissible.
  const Constraint diag = Constraint::diagonal_chain();
  CHECK(count_walks(kNESW, {0, 0}, diag).count == WalkCount::exact(1));
  CHECK(count_walks(kNESW, {1, 1}, diag).count == WalkCount::exact(0));
}

TEST_CASE("cutoff sweeps report a lower bound when nothing certifies") {
  // Steps this long inflate the bounded-analysis region past its cell budget,
  // and the admissible set has no half-plane witness: the solver falls back
  // to the cutoff sweep and refuses to claim exactness.
  const std::vector<Pt> X{{-2000, 1}, {0, -1}, {2000, 1}};
  const Constraint punct = Constraint::punctured_quadrant();
  const CountOutcome o = count_walks(X, {2000, 1}, punct, 8);
  CHECK(o.count.kind == CountKind::AtLeast);
  CHECK(o.count.cutoff == 8);
  CHECK(o.count.value >= 2);  // the 1-step walk plus pumped 5-step variants

  // Without a cutoff the same query is rejected rather than guessed at.
  CHECK_THROWS_AS(count_walks(X, {2000, 1}, punct), ValidationError);
}

TEST_CASE("window tables agree with pointwise counts") {
  const Window w = Window::square(0, 3);
  const CountTable table = count_table(kEN, w);
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t b = 0; b <= 3; ++b) {
      const auto it = table.counts.find({a, b});
      REQUIRE(it != table.counts.end());
      CHECK(it->second == WalkCount::exact(binomial(a + b, a)));
    }

  // Infinite tables share one pumping witness.
  const CountTable inf = count_table(kNESW, Window::square(-1, 1));
  REQUIRE(inf.evidence.has_value());
  CHECK(inf.evidence->replay(kNESW, Constraint::full_plane(),
                             inf.evidence->base()));
  CHECK(inf.counts.at({0, 0}).is_infinite());

  // O is always keyed, even when the window misses it.
  const CountTable off = count_table(kEN, Window{2, 3, 2, 3});
  CHECK(off.counts.count({0, 0}) == 1);
}

TEST_CASE("closed-walk search") {
  const auto loop = find_closed_walk(kNESW, Constraint::full_plane(), 8);
  REQUIRE(loop.has_value());
  CHECK(loop->size() == 2);  // shortest possible
  CHECK(walk_endpoint(*loop) == kOrigin);
  CHECK_FALSE(find_closed_walk(kEN, Constraint::full_plane(), 8).has_value());

  // Constrained: the loop must stay inside the region.
  const auto quad = find_closed_walk(kNESWU, Constraint::punctured_quadrant(), 8);
  CHECK_FALSE(quad.has_value());  // nothing re-enters O from P^2
}

TEST_CASE("admissible steps under the diagonal chain") {
  const AdmissibleReport rep =
      admissible_steps(kNESWU, Constraint::diagonal_chain(), 16);
  CHECK(rep.complete());
  CHECK(rep.confirmed_steps() == std::vector<Pt>{{1, 1}});
  CHECK(rep.refuted.size() == 4);  // the four unit steps can never re-enter
  for (const AdmissibleStep& s : rep.confirmed) {
    Walk extended = s.witness;
    extended.push_back(s.step);
    CHECK(walk_is_constrained(extended, Constraint::diagonal_chain()));
  }
}

TEST_CASE("admissible steps via the cone shortcut") {
  const AdmissibleReport rep =
      admissible_steps(kNESWU, Constraint::punctured_quadrant(), 16);
  CHECK(rep.complete());
  CHECK(rep.confirmed.size() == kNESWU.size());
  CHECK(rep.all_confirmed_via_cone);
  REQUIRE(rep.cone_point_witness.has_value());
  CHECK(walk_is_constrained(*rep.cone_point_witness,
                            Constraint::punctured_quadrant()));
}

TEST_CASE("origin incoming-step test") {
  CHECK(origin_has_incoming_step(kNESW, Constraint::full_plane()));
  CHECK_FALSE(origin_has_incoming_step(kNESWU, Constraint::punctured_quadrant()));
  // On the full plane every nonempty step set can re-enter the origin; only a
  // region that excludes all negated steps can rule it out.
  CHECK(origin_has_incoming_step(kEN, Constraint::full_plane()));
  CHECK_FALSE(origin_has_incoming_step(kEN, Constraint::below_diagonal()));
}

TEST_CASE("closed walks materialize from hull certificates") {
  const OriginInHull hull = origin_in_hull(kNESW);
  REQUIRE(hull.certificate.has_value());
  const Walk w = closed_walk_from_certificate(*hull.certificate);
  CHECK_FALSE(w.empty());
  CHECK(walk_endpoint(w) == kOrigin);
}

TEST_CASE("sublattice bases decide membership") {
  const LatticeBasis unit = lattice_basis(kEN);
  CHECK(unit.member({-7, 11}));

  const LatticeBasis even = lattice_basis({{2, 0}, {0, 2}});
  CHECK(even.member({4, -2}));
  CHECK_FALSE(even.member({1, 0}));
  CHECK_FALSE(even.member({2, 1}));

  const LatticeBasis ray = lattice_basis({{2, 1}});
  CHECK(ray.member({4, 2}));
  CHECK_FALSE(ray.member({6, 2}));
  CHECK_FALSE(ray.member({3, 1}));

  CHECK_FALSE(lattice_basis({}).member({1, 0}));
  CHECK(lattice_basis({}).member({0, 0}));
}

TEST_CASE("brute-force oracle agrees with the sweep on seeded instances") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3);
  std::uniform_int_distribution<int> size(1, 4);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 60; ++trial) {
    std::vector<Pt> X;
    for (int i = 0, n = size(gen); i < n; ++i) {
      const Pt p{coord(gen), coord(gen)};
      if (!p.is_origin()) X.push_back(p);
    }
    if (X.empty() || !check_LC(X).holds) continue;
    const Pt target{coord(gen), coord(gen)};
    const CountOutcome o = count_walks(X, target);
    REQUIRE(o.count.is_exact());
    // A half-plane witness bounds walk lengths by u . target.
    const auto u = check_LC(X).witness->u;
    const long long L = std::max<long long>(0, static_cast<long long>(dot(u, target)));
    if (L > 7) continue;
    CHECK(o.count.value == naive_count(X, target, Constraint::full_plane(), L));
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("work budgets are enforced") {
  EnumLimits tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(
      count_walks(kEN, {40, 40}, Constraint::full_plane(), {}, tiny),
      BudgetError);
  CHECK_THROWS_AS(naive_count(kNESW, {0, 0}, Constraint::full_plane(), 20, 100),
                  BudgetError);
}

}  // namespace
}  // namespace latwalk
