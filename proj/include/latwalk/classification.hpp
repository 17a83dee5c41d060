// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latwalk/bigint.hpp"
#include "latwalk/enumeration.hpp"
#include "latwalk/geometry.hpp"
#include "latwalk/point.hpp"
#include "latwalk/stepset.hpp"

namespace latwalk {

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class TriBool { Yes, No, Unknown };

std::string tri_name(TriBool t);

// The ten consistent rows of the condition/property matrix.  Columns are the
// three half-plane/cone conditions (cone, offset half-plane, half-plane) and
// the three walk-count properties (finite counts, bounded lengths, absence of
// infinite counts).
enum class Combination { I, II, III, IV, V, VI, VII, VIII, IX, X, Unknown };

std::string combination_label(Combination c);  // "(I)" .. "(X)", "Unknown"
std::optional<Combination> combination_from_label(std::string_view label);

// Maps a fully decided flag pattern to its row.  `ipp` is the property
// itself (true = some count is infinite).  Throws std::logic_error when the
// flags violate the implication hierarchy:
//   cc => slc => lc,  fpp => bpp,  bpp => !ipp,  cc => fpp,  slc => bpp,
//   lc => !ipp.
Combination combination_from_flags(bool cc, bool slc, bool lc, bool fpp,
                                   bool bpp, bool ipp);

enum class GroupIso { Trivial, Z, Z2, NotGroup };

std::string group_iso_name(GroupIso g);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct ClassificationReport {
  // Geometric conditions of the step set itself, each with a witness when it
  // holds (cone pair, offset half-plane, half-plane, closed half-plane).
  ConditionResult cc, slc, lc, wlc;

  TriBool fpp = TriBool::Unknown;  // all walk counts finite
  TriBool bpp = TriBool::Unknown;  // all walk lengths bounded per target
  TriBool ipp = TriBool::Unknown;  // every reachable target has infinite count
  std::string fpp_rationale, bpp_rationale, ipp_rationale;

  std::optional<Walk> ipp_cycle;  // nonempty closed walk at O backing ipp=Yes
  std::optional<HullCertificate> units_certificate;  // backing units_nontrivial
  std::optional<HullCertificate> fpp_refutation;  // admissible hull capture
  std::optional<AdmissibleReport> admissible;     // constrained runs only

  Combination combination = Combination::Unknown;

  // Structure of the full (unconstrained) walk monoid of X.
  bool units_nontrivial = false;
  bool is_group = false;
  GroupIso group_iso = GroupIso::NotGroup;

  long long bound_used = 0;  // search bound backing any Unknown verdict
};

// Aborts with std::logic_error if the decided fields violate the implication
// hierarchy above; Unknown fields are skipped.  Called on every report
// before it is returned.
void audit_hierarchy(const ClassificationReport& report);

// ---------------------------------------------------------------------------
// Unconstrained classification
// ---------------------------------------------------------------------------

// Complete classification of a finite explicit step set.  The three
// conditions coincide for finite sets, and the verdict is a dichotomy: a
// half-plane witness gives row (I); otherwise O lies in the convex hull of
// the steps and the set is row (X) with an explicit closed-walk certificate.
// No field is ever Unknown.
ClassificationReport classify_finite(const std::vector<Pt>& X);

// Group structure of the walk monoid: Trivial for empty X; for X inside a
// line through O, Z exactly when steps point both ways; for planar X, Z2
// exactly when no closed half-plane through O contains X.  Cross-validated
// against the relative-interior criterion.
GroupIso group_structure(const std::vector<Pt>& X);

// Isomorphism type of the walk monoid for one or two steps.
struct MonoidType {
  enum class Kind {
    FreeOnOneGenerator,
    NumericalMonoid,
    GroupZ,
    FreeCommutativeRankTwo,
  };
  Kind kind = Kind::FreeOnOneGenerator;
  long long k = 0, l = 0;  // NumericalMonoid: reduced generator pair, k <= l
  long long scale = 1;     // gcd removed from the raw multiple pair
};

std::string monoid_type_name(const MonoidType& m);

// |X| must be 1 or 2 (ValidationError otherwise).  Two steps spanning the
// plane give the free commutative monoid of rank two; steps on a common ray
// give the numerical monoid generated by their multiples of the shared
// primitive vector; opposite rays give the group Z.
MonoidType small_stepset_monoid(const std::vector<Pt>& X);

// a_0 = 1, a_n = 0 for n < 0, a_n = a_{n-k} + a_{n-l}; returns a_0..a_n_max.
// Counts walks to successive multiples of the primitive vector for a step
// pair with multiples {k, l}; (1,2) gives the Fibonacci numbers.
std::vector<BigInt> recurrence_sequence(long long k, long long l,
                                        long long n_max);

// ---------------------------------------------------------------------------
// Constrained classification
// ---------------------------------------------------------------------------

struct ConstrainedOptions {
  long long bound = 16;        // BFS depth: admissible search, reach truncation
  long long cycle_length = 32; // cap for the closed-walk search at O
  EnumLimits limits;
};

// Three-valued classification of the pair (X, region).  The region must be a
// submonoid: built-in kinds are; custom predicates must declare closure and
// pass a randomized spot check (ValidationError otherwise).  When the
// admissible-step set is fully determined, the finite/bounded verdicts come
// from whether the admissible steps capture O in their convex hull; the
// infinite-count verdict is Yes on a closed-walk certificate and No on a
// half-plane witness or when no step can land on O from inside the region.
// Undecidable-at-bound fields stay Unknown with the bound recorded.
ClassificationReport classify_constrained(const std::vector<Pt>& X,
                                          const Constraint& C,
                                          const ConstrainedOptions& opts = {});

struct UnitsGroupReport {
  TriBool units = TriBool::Unknown;  // endpoint monoid has a nonzero unit
  TriBool group = TriBool::Unknown;  // endpoint monoid is a group
  std::string rationale;
  std::optional<std::pair<Walk, Walk>> units_witness;  // walks to P and -P
  long long bound_used = 0;
};

// Unit and group structure of the constrained endpoint monoid, decided from
// the bound-truncated reachable set.  Yes verdicts are monotone-sufficient
// (they survive enlarging the truncation): an antipodal reachable pair for
// units; O strictly inside the reachable hull — or inside the reachable
// segment when the region confines walks to a line — for group.  Exact
// verdicts replace the truncation analysis when the region is the full
// plane.
UnitsGroupReport constrained_units_and_group(const std::vector<Pt>& X,
                                             const Constraint& C,
                                             const ConstrainedOptions& opts = {});

// ---------------------------------------------------------------------------
// Structural fast path
// ---------------------------------------------------------------------------

// Vertical-slice guard: every step lies in the closed right half-plane and
// none sits on the positive y-axis.  A step family with this shape whose
// vertical slices are all finite has the finite-paths property: a walk to
// (a,b) only uses slices 0..a, and those finitely many steps admit a cone
// witness.  Used by the registry rows whose families are infinite.
bool vertical_slice_guard(const std::vector<Pt>& steps);

}  // namespace latwalk
