// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latwalk/bigint.hpp"
#include "latwalk/geometry.hpp"
#include "latwalk/point.hpp"
#include "latwalk/stepset.hpp"

namespace latwalk {

// ---------------------------------------------------------------------------
// Counts
// ---------------------------------------------------------------------------

enum class CountKind { Exact, Infinite, AtLeast };

// Tagged walk count.  Exact(n) is provably complete; Infinite is backed by a
// replayable pumping certificate; AtLeast(n, L) means exactly n qualifying
// walks of length <= L were found and termination could not be certified.
struct WalkCount {
  CountKind kind = CountKind::Exact;
  BigInt value = 0;
  long long cutoff = 0;  // AtLeast only: the length bound used

  static WalkCount exact(BigInt n) { return {CountKind::Exact, std::move(n), 0}; }
  static WalkCount infinite() { return {CountKind::Infinite, 0, 0}; }
  static WalkCount at_least(BigInt n, long long L) {
    return {CountKind::AtLeast, std::move(n), L};
  }

  bool is_exact() const { return kind == CountKind::Exact; }
  bool is_infinite() const { return kind == CountKind::Infinite; }

  // "12", "inf", ">=12" — shared by the DOT and TikZ emitters.
  std::string str() const;

  friend bool operator==(const WalkCount&, const WalkCount&) = default;
};

// Pumping certificate for an Infinite verdict: `prefix` walks from O to a
// base point, `cycle` is a nonempty closed walk at that base, `suffix`
// continues to the target; prefix+cycle^n+suffix are pairwise-distinct
// constrained walks to the target for every n >= 0.
struct InfiniteEvidence {
  Walk prefix;
  Walk cycle;
  Walk suffix;

  Pt base() const { return walk_endpoint(prefix); }
  // Exact re-verification: all steps drawn from X, cycle nonempty and closed,
  // and both prefix+suffix and prefix+cycle+suffix are constrained walks
  // ending at `target` (which pumps to every repetition count).
  bool replay(const std::vector<Pt>& X, const Constraint& C, Pt target) const;
};

struct CountOutcome {
  WalkCount count;
  std::optional<InfiniteEvidence> evidence;  // set for Infinite verdicts
};

// Work limits for the enumeration routines.  `budget` caps the total number
// of position expansions in any sweep; exceeding it raises BudgetError.
struct EnumLimits {
  unsigned long long budget = 50'000'000;
  long long admissible_bound = 24;  // BFS depth for admissible-step search
};

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

// Exact number of (X,C)-walks from O to `target`, when a termination
// certificate exists:
//   - a half-plane witness for X (or for the complete admissible set) bounds
//     every walk length by u . target, and a layered sweep returns Exact;
//   - without any line condition and C = Z², reachability is decided exactly
//     (collinear both-signs case, full-rank sublattice case, and the boundary
//     case of a closed half-plane), giving Infinite or Exact(0);
//   - under a proper constraint, a closed constrained walk on a constrained
//     path to the target yields Infinite; a sweep whose frontier dies yields
//     Exact; the no-step-enters-O rule yields Exact(1) at the origin.
// Otherwise the sweep runs to `max_len` and reports AtLeast; a missing
// `max_len` without any certificate raises ValidationError.
CountOutcome count_walks(const std::vector<Pt>& X, Pt target,
                         const Constraint& C = {},
                         std::optional<long long> max_len = {},
                         const EnumLimits& limits = {});

struct CountTable {
  std::map<Pt, WalkCount> counts;  // keyed points are reachable; O always keyed
  Window window;
  std::string stepset_desc;
  std::string constraint_desc;
  std::optional<InfiniteEvidence> evidence;  // shared witness for Infinite rows
};

// Per-point counts over a window in one shared sweep, same verdict rules as
// count_walks.  Unreachable points are omitted; O is always present.
CountTable count_table(const std::vector<Pt>& X, const Window& window,
                       const Constraint& C = {},
                       std::optional<long long> max_len = {},
                       const EnumLimits& limits = {});

// Brute-force oracle: enumerates every word over X of length <= L and counts
// those that are constrained walks ending at `target`.  The word count
// sum_{l<=L} |X|^l must fit in `budget` (BudgetError otherwise).
BigInt naive_count(const std::vector<Pt>& X, Pt target, const Constraint& C,
                   long long L, unsigned long long budget = 20'000'000);

// Shortest nonempty (X,C)-walk from `base` back to `base` (all positions in
// C) of length <= L, if one exists; deterministic (steps tried in lex order).
// Absence is not a proof that none exists beyond L.
std::optional<Walk> find_closed_walk(const std::vector<Pt>& X, const Constraint& C,
                                     long long L, Pt base = kOrigin,
                                     const EnumLimits& limits = {});

// ---------------------------------------------------------------------------
// Admissible steps
// ---------------------------------------------------------------------------

struct AdmissibleStep {
  Pt step;
  // A constrained walk u from O whose endpoint P has P + step in C, so
  // u + step is itself a constrained walk using `step`.
  Walk witness;
};

struct AdmissibleReport {
  std::vector<AdmissibleStep> confirmed;
  std::vector<Pt> refuted;       // exact structural refutations
  std::vector<Pt> undetermined;  // neither confirmed within bound nor refuted
  bool all_confirmed_via_cone = false;
  std::optional<std::pair<Pt, Pt>> cone;  // normal pair of the cone used
  std::optional<Walk> cone_point_witness; // constrained walk into the cone

  bool complete() const { return undetermined.empty(); }
  std::vector<Pt> confirmed_steps() const;
};

// Which steps of X occur in at least one (X,C)-walk.  Confirmation is by
// breadth-first search over constrained-reachable points up to `bound` steps
// (each confirmation carries a witness walk).  When C contains a verified
// open lattice cone — `cone` if supplied, else the constraint's default —
// and the search reaches a point strictly inside it, every step of X is
// confirmed at once (the cone absorbs any single step after enough
// repetitions of the reached point's walk).  Unconfirmed steps are refuted
// when the region's shape makes them unusable, else left undetermined.
AdmissibleReport admissible_steps(const std::vector<Pt>& X, const Constraint& C,
                                  long long bound,
                                  std::optional<std::pair<Pt, Pt>> cone = {},
                                  const EnumLimits& limits = {});

// ---------------------------------------------------------------------------
// Reachability helpers (exposed for the classification layer)
// ---------------------------------------------------------------------------

// True iff some step of X can be the last step of a nonempty closed
// constrained walk, i.e. exists B in X with -B in C \ {O}.  When false, the
// empty walk is the only closed (X,C)-walk at O, so the origin count is
// exactly 1.
bool origin_has_incoming_step(const std::vector<Pt>& X, const Constraint& C);

// Materializes a nonempty closed walk at O from a hull certificate (each
// point repeated by its coefficient).  BudgetError if a coefficient is too
// large to expand into steps.
Walk closed_walk_from_certificate(const HullCertificate& cert);

// Basis of the sublattice of Z² generated by the steps, in Hermite-like
// form: `first` has the minimal positive x among lattice members with x != 0
// (or is zero), `second` is vertical (0, m) with m >= 0.  Membership in the
// generated lattice is then a direct divisibility test.
struct LatticeBasis {
  Pt v1{0, 0};
  Pt v2{0, 0};  // always of the form (0, m), m >= 0

  bool member(Pt p) const;
};

LatticeBasis lattice_basis(const std::vector<Pt>& X);

}  // namespace latwalk
