// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact integer planar geometry: convex hulls, origin-membership tests with
// replayable certificates, and the four half-plane/cone containment
// conditions on finite step sets.  No floating point anywhere.

#ifndef LATWALK_GEOMETRY_HPP
#define LATWALK_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "latwalk/bigint.hpp"
#include "latwalk/errors.hpp"
#include "latwalk/point.hpp"

namespace latwalk {

enum class HullKind { Empty, Point, Segment, Polygon };

struct HullResult {
  HullKind kind = HullKind::Empty;
  // Counterclockwise, strictly convex for Polygon (no three consecutive
  // vertices collinear); the two extreme points for Segment.
  std::vector<Pt> vertices;

  bool on_boundary(Pt p) const;
};

HullResult convex_hull(std::vector<Pt> points);

// Positive integer combination of 1-3 input points summing to the origin.
struct HullCertificate {
  std::vector<Pt> points;
  std::vector<BigInt> coeffs;

  bool replay() const;
};

struct OriginInHull {
  bool inside = false;
  std::optional<HullCertificate> certificate;

  explicit operator bool() const { return inside; }
};

// True iff O lies in Conv(X) (boundary included).  When true, a certificate
// with all coefficients >= 1 is attached.  Requires O to not be an element
// of X.
OriginInHull origin_in_hull(const std::vector<Pt>& X);

// True iff O lies in the relative interior of Conv(X): strict interior for
// two-dimensional hulls, strictly between the endpoints for segments through
// the origin, false for points and the empty set.
bool origin_in_relative_interior(const std::vector<Pt>& X);

enum class ConditionKind { LC, SLC, CC, WLC };

struct ConditionWitness {
  ConditionKind kind = ConditionKind::LC;
  Pt u{1, 0};              // primitive normal of the witnessing line
  long long offset = 0;    // SLC only: the line u.x = offset with offset >= 1
  std::optional<Pt> u2;    // CC only: second bounding normal, not parallel to u

  // Re-verifies the claimed condition against every step, exactly:
  //   LC:   u.A > 0 for all A
  //   WLC:  u.A >= 0 for all A
  //   SLC:  u.A >= offset + 1 for all A, and offset >= 1
  //   CC:   u.A > 0 and u2.A > 0 for all A, and u, u2 not parallel
  bool replay(const std::vector<Pt>& X) const;
};

struct ConditionResult {
  bool holds = false;
  std::optional<ConditionWitness> witness;

  explicit operator bool() const { return holds; }
};

// Containment of X in an open half-plane bounded by a line through O.
// Decided by an angular sweep over the primitive step directions,
// independently of the hull-based origin test.  Empty X holds vacuously.
ConditionResult check_LC(const std::vector<Pt>& X);

// Containment in a half-plane whose opposite open half-plane contains O;
// for finite sets this coincides with check_LC, and the emitted witness is
// the explicit line u.x = 1 with u.A >= 2 for every step.
ConditionResult check_SLC(const std::vector<Pt>& X);

// Containment in an open cone with vertex O (two bounding half-planes with
// non-parallel boundary lines); coincides with check_LC for finite sets.
ConditionResult check_CC(const std::vector<Pt>& X);

// Containment in the closure of a half-plane determined by a line through O.
ConditionResult check_WLC(const std::vector<Pt>& X);

// Which parallels of the line u.x = 0 contain lattice points: the squared
// distance from O is quantized as k^2/(a^2+b^2); `unit_solution` is an
// integer point (s,t) with a*s + b*t = 1, so k*(s,t) lies on level k.
struct LineSpacing {
  BigRat spacing_sq;
  Pt unit_solution;

  Pt point_on_level(long long k) const {
    return {k * unit_solution.x, k * unit_solution.y};
  }
};

// Throws ValidationError unless u is primitive and nonzero.
LineSpacing lines_with_lattice_points(Pt u);

// True iff all points lie on a single line through the origin.
bool collinear_through_origin(const std::vector<Pt>& X);

// Primitive directions of the nonzero input points, deduplicated and sorted
// counterclockwise by angle from the positive x-axis.
std::vector<Pt> primitive_directions(const std::vector<Pt>& X);

// The extreme directions (lo, hi) of an angle-sorted direction list spanning
// an arc strictly shorter than pi, if one exists: every direction is then a
// nonnegative combination of lo and hi.  (lo, lo) for a single direction.
std::optional<std::pair<Pt, Pt>> open_halfplane_extremes(
    const std::vector<Pt>& sorted_dirs);

}  // namespace latwalk

#endif  // LATWALK_GEOMETRY_HPP
