// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latwalk/point.hpp"
#include "latwalk/quadfield.hpp"

namespace latwalk {

// ---------------------------------------------------------------------------
// Step-set families
// ---------------------------------------------------------------------------

// Named step-set families shipped with the library.  The fixed families (EN,
// NESW, NES) materialize to the same small set regardless of truncation; the
// parameterized ones are infinite and materialize to a finite truncation that
// grows monotonically with the truncation bound.
enum class Family {
  EN,                  // {E, N} = {(1,0), (0,1)}
  NESW,                // four unit steps
  NES,                 // {N, E, S}
  OneTimesZ,           // {1} x Z
  OneTimesN,           // {1} x N
  OneTimesP,           // {1} x P (P = positive integers)
  NorthPlusOneTimesP,  // {N} ∪ ({1} x P)
  AASquared,           // {(1,0)} ∪ {(a, ±a²) : a ∈ P}
  Middle,              // {(0,-1)} ∪ {(a, a²) : a ∈ P}
  IrrationalHalfplane, // lattice points strictly on one side of y = x·√d
  Sqrt2IV,             // band 0 < √2·x − y < 2 in P², plus one point per rhombus
  IX,                  // {(0,-1)} ∪ ({1} x N)
  AppendixV,           // quadratic-monoid construction: {A_i} ∪ {B_i, C_i}
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

// Axis-aligned closed lattice rectangle.
struct Window {
  std::int64_t xmin = 0;
  std::int64_t xmax = 0;
  std::int64_t ymin = 0;
  std::int64_t ymax = 0;

  static Window square(std::int64_t lo, std::int64_t hi) { return {lo, hi, lo, hi}; }

  bool contains(Pt p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  bool valid() const { return xmin <= xmax && ymin <= ymax; }

  friend bool operator==(const Window&, const Window&) = default;
};

// How much of an infinite family to materialize.  `bound` is the family's
// index bound (e.g. |b| ≤ bound for {1} x Z, the largest rhombus index for
// Sqrt2IV, the sequence depth for AppendixV); `window` is a spatial clip,
// required by the plane-region families (IrrationalHalfplane, Sqrt2IV).
struct Truncation {
  std::int64_t bound = 0;
  std::optional<Window> window;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Parameters of the irrational families: the radicand of the quadratic field
// and which side of the line y = x·√d the set lives on.
struct FamilyParams {
  long long d = 2;
  HalfplaneSide side = HalfplaneSide::Below;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// A step set is given either explicitly (a finite list of nonzero lattice
// points) or as a named family plus truncation.
struct StepSetSpec {
  std::optional<Family> family;
  std::vector<Pt> explicit_steps;
  Truncation truncation;
  FamilyParams params;

  static StepSetSpec from_steps(std::vector<Pt> steps);
  static StepSetSpec from_family(Family f, Truncation t, FamilyParams p = {});

  friend bool operator==(const StepSetSpec&, const StepSetSpec&) = default;
};

struct MaterializedStepSet {
  std::vector<Pt> steps;  // lex-sorted, deduplicated, origin-free
  std::string description;
  std::optional<Family> family;

  bool contains(Pt p) const;
};

// Deterministically produces the finite step list for a spec.  Throws
// ValidationError for unknown/ill-formed specs and truncations too small to
// contain any step; BudgetError when an AppendixV truncation exceeds the
// supported depth.
MaterializedStepSet materialize(const StepSetSpec& spec);

// Helper step lists without a registry entry: {0} x P and P², truncated.
std::vector<Pt> zero_times_p_steps(std::int64_t bound);
std::vector<Pt> p_squared_steps(std::int64_t bound);

// ---------------------------------------------------------------------------
// Constraint sets
// ---------------------------------------------------------------------------

enum class ConstraintKind {
  FullPlane,
  HalfplaneIntersection,  // { p : u·p ≥ 0 for every listed normal u }
  PuncturedQuadrant,      // {O} ∪ P²
  DiagonalChain,          // { (a,a) : a ∈ Z }
  BelowDiagonal,          // { (a,b) ∈ N² : b ≤ a }
  CustomPredicate,
};

std::string_view constraint_kind_name(ConstraintKind k);

// Shape of the region cut out by a list of closed half-plane constraints
// through the origin.
enum class HalfplaneRegionShape { Plane, HalfPlane, Wedge, Line, Ray, PointOnly };

// A constraint set C ⊆ Z² with O ∈ C.  Every built-in kind except
// CustomPredicate is a submonoid of Z² by construction.  The structural
// queries below answer "No" only when an exact refutation exists; they never
// guess.
class Constraint {
 public:
  Constraint() = default;  // full plane

  static Constraint full_plane();
  // Normals must be nonzero; the region is the set of lattice points
  // weakly on the positive side of every normal.
  static Constraint halfplane_intersection(std::vector<Pt> normals);
  static Constraint punctured_quadrant();
  static Constraint diagonal_chain();
  static Constraint below_diagonal();
  // `asserts_submonoid` records the caller's claim that the predicate's
  // member set is closed under addition and contains O; theorem-backed
  // classification refuses to run when the claim is absent or fails the
  // randomized spot check.
  static Constraint custom(std::function<bool(Pt)> member, std::string description,
                           bool asserts_submonoid);

  ConstraintKind kind() const { return kind_; }
  const std::string& description() const { return description_; }
  bool is_full_plane() const { return kind_ == ConstraintKind::FullPlane; }
  bool asserts_submonoid() const;
  bool contains(Pt p) const;
  // Normal list (HalfplaneIntersection only; empty otherwise).
  const std::vector<Pt>& normals() const { return normals_; }

  // Shape of the region when it is structurally known: Plane for FullPlane,
  // Wedge for the quadrant kinds, Line for the diagonal chain, the exact
  // shape for HalfplaneIntersection, nullopt for CustomPredicate.
  std::optional<HalfplaneRegionShape> region_shape() const;

  // If C ⊆ Z·D for a primitive direction D, returns D.
  std::optional<Pt> restricted_to_line() const;

  // True when C ∩ (−C) = {O} is certain (then the reachable-set monoid can
  // have no nontrivial units).  False means "not established", not "fails".
  bool trivial_intersection_with_negation() const;

  // False only when no (X,C)-walk can ever use `step`, proved from the
  // region's shape alone (e.g. a non-diagonal step inside the diagonal
  // chain).  True means "not refuted".
  bool step_can_ever_enter(Pt step) const;

  // A default open lattice cone {p : u1·p > 0 ∧ u2·p > 0} whose lattice
  // points all lie inside C, when one exists; the pair returned is the
  // normal pair (u1, u2).  Feeds the all-steps-admissible shortcut.
  std::optional<std::pair<Pt, Pt>> inner_cone() const;

  // Exact check that the open cone with normal pair (u1, u2) is proper,
  // nonempty, and has every lattice point inside C.  Only structural kinds
  // can verify; CustomPredicate always answers false.
  bool cone_inside(Pt u1, Pt u2) const;

  // Randomized closure test: `trials` random member pairs must sum to a
  // member, and O must be a member.  Built-ins pass by construction; the
  // check exists for CustomPredicate.
  bool closure_spot_check(std::uint64_t seed, int trials = 1000,
                          std::int64_t range = 8) const;

 private:
  ConstraintKind kind_ = ConstraintKind::FullPlane;
  std::vector<Pt> normals_;
  std::function<bool(Pt)> member_;
  std::string description_ = "Z^2";
  bool asserts_submonoid_ = true;
};

// True iff every prefix endpoint of the walk (including O and the full
// endpoint) lies in C.
bool walk_is_constrained(const Walk& w, const Constraint& c);

// ---------------------------------------------------------------------------
// Published classification rows for the named families
// ---------------------------------------------------------------------------

// The frozen classification of each full (untruncated) family: the three
// geometric conditions, the three finiteness properties, and the combination
// label "(I)".."(X)" of the ten-row condition/property matrix.  Exactly nine
// distinct labels occur; the row "(VIII)" (no line condition yet bounded
// non-finite counts) is impossible and absent.
struct RegistryEntry {
  Family family;
  std::string label;
  bool cc, slc, lc;
  bool fpp, bpp, ipp;
  std::string rationale;
};

const std::vector<RegistryEntry>& registry_classification();
const RegistryEntry& registry_lookup(Family f);

}  // namespace latwalk
