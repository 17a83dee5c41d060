// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace latwalk {
namespace {

bool point_on_segment(Pt p, Pt a, Pt b) {
  if (cross(b - a, p - a) != 0) return false;
  return dot(p - a, p - b) <= 0;
}

// Angular comparator over nonzero vectors: angles in [0, 2pi) measured from
// the positive x-axis, ties broken never (inputs are distinct primitives).
int half_of(Pt d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool angle_less(Pt a, Pt b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace

std::vector<Pt> primitive_directions(const std::vector<Pt>& X) {
  std::vector<Pt> dirs;
  dirs.reserve(X.size());
  for (Pt a : X) {
    if (a.is_origin()) throw ValidationError("step set contains the origin");
    dirs.push_back(primitive(a));
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  std::sort(dirs.begin(), dirs.end(), angle_less);
  return dirs;
}

// The returned pair additionally satisfies cross(lo, hi) >= 0, zero only when
// lo == hi.
std::optional<std::pair<Pt, Pt>> open_halfplane_extremes(const std::vector<Pt>& sorted_dirs) {
  const auto& d = sorted_dirs;
  std::size_t m = d.size();
  if (m == 0) return std::nullopt;
  if (m == 1) return std::make_pair(d[0], d[0]);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = (i + 1) % m;
    if (cross(d[i], d[j]) < 0) return std::make_pair(d[j], d[i]);
  }
  return std::nullopt;
}

bool HullResult::on_boundary(Pt p) const {
  switch (kind) {
    case HullKind::Empty:
      return false;
    case HullKind::Point:
      return p == vertices[0];
    case HullKind::Segment:
      return point_on_segment(p, vertices[0], vertices[1]);
    case HullKind::Polygon: {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        Pt a = vertices[i];
        Pt b = vertices[(i + 1) % vertices.size()];
        if (point_on_segment(p, a, b)) return true;
      }
      return false;
    }
  }
  return false;
}

HullResult convex_hull(std::vector<Pt> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  HullResult result;
  if (points.empty()) {
    result.kind = HullKind::Empty;
    return result;
  }
  if (points.size() == 1) {
    result.kind = HullKind::Point;
    result.vertices = points;
    return result;
  }

  // Monotone chain with strict turns; collinear boundary points are dropped.
  std::vector<Pt> hull(2 * points.size());
  std::size_t k = 0;
  for (Pt p : points) {  // lower hull
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  std::size_t lower = k + 1;
  for (std::size_t i = points.size() - 1; i-- > 0;) {  // upper hull
    Pt p = points[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);

  if (hull.size() == 2) {
    result.kind = HullKind::Segment;
    result.vertices = hull;
    return result;
  }
  result.kind = HullKind::Polygon;
  result.vertices = hull;
  return result;
}

bool HullCertificate::replay() const {
  if (points.empty() || points.size() != coeffs.size()) return false;
  BigInt sx = 0, sy = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (coeffs[i] < 1) return false;
    sx += coeffs[i] * points[i].x;
    sy += coeffs[i] * points[i].y;
  }
  return sx == 0 && sy == 0;
}

OriginInHull origin_in_hull(const std::vector<Pt>& X) {
  OriginInHull out;
  HullResult hull = convex_hull(X);
  switch (hull.kind) {
    case HullKind::Empty:
    case HullKind::Point:
      return out;
    case HullKind::Segment:
      out.inside = point_on_segment(kOrigin, hull.vertices[0], hull.vertices[1]);
      break;
    case HullKind::Polygon: {
      out.inside = true;
      for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
        Pt a = hull.vertices[i];
        Pt b = hull.vertices[(i + 1) % hull.vertices.size()];
        if (cross(b - a, kOrigin - a) < 0) {
          out.inside = false;
          break;
        }
      }
      break;
    }
  }
  if (!out.inside) return out;

  // Two-point certificate: an antipodal pair of steps.  This covers every
  // case where O sits on the hull boundary.
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      if (cross(X[i], X[j]) == 0 && dot(X[i], X[j]) < 0) {
        Pt d = primitive(X[i]);
        std::int64_t p = (d.x != 0) ? X[i].x / d.x : X[i].y / d.y;
        std::int64_t q = (d.x != 0) ? -X[j].x / d.x : -X[j].y / d.y;
        std::int64_t g = std::gcd(p, q);
        HullCertificate cert;
        cert.points = {X[i], X[j]};
        cert.coeffs = {BigInt(q / g), BigInt(p / g)};
        LATWALK_CHECK(cert.replay(), "antipodal certificate failed to replay");
        out.certificate = std::move(cert);
        return out;
      }
    }
  }

  // No antipodal pair, so O is strictly inside a two-dimensional hull: fan
  // triangulation, then integer barycentric coefficients
  //   cross(B,C) * A + cross(C,A) * B + cross(A,B) * C = O  (all positive).
  const auto& v = hull.vertices;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    Pt a = v[0], b = v[i], c = v[i + 1];
    if (cross(b - a, kOrigin - a) < 0) continue;
    if (cross(c - b, kOrigin - b) < 0) continue;
    if (cross(a - c, kOrigin - c) < 0) continue;
    // Full-precision conversion of the 128-bit cross products.
    auto wide_to_big = [](Wide w) {
      bool neg = w < 0;
      unsigned __int128 uw = neg ? static_cast<unsigned __int128>(-(w + 1)) + 1
                                 : static_cast<unsigned __int128>(w);
      BigInt r = static_cast<std::uint64_t>(uw >> 64);
      r <<= 64;
      r += static_cast<std::uint64_t>(uw & 0xFFFFFFFFFFFFFFFFULL);
      return neg ? -r : r;
    };
    BigInt ca = wide_to_big(cross(b, c));
    BigInt cb = wide_to_big(cross(c, a));
    BigInt cc = wide_to_big(cross(a, b));
    LATWALK_CHECK(ca > 0 && cb > 0 && cc > 0, "degenerate barycentric coefficients");
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(ca, cb), cc);
    HullCertificate cert;
    cert.points = {a, b, c};
    cert.coeffs = {ca / g, cb / g, cc / g};
    LATWALK_CHECK(cert.replay(), "triangle certificate failed to replay");
    out.certificate = std::move(cert);
    return out;
  }
  LATWALK_CHECK(false, "origin inside hull but no containing fan triangle");
  return out;
}

bool origin_in_relative_interior(const std::vector<Pt>& X) {
  HullResult hull = convex_hull(X);
  switch (hull.kind) {
    case HullKind::Empty:
    case HullKind::Point:
      return false;
    case HullKind::Segment: {
      Pt a = hull.vertices[0], b = hull.vertices[1];
      return cross(a, b) == 0 && dot(a, b) < 0;
    }
    case HullKind::Polygon: {
      for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
        Pt a = hull.vertices[i];
        Pt b = hull.vertices[(i + 1) % hull.vertices.size()];
        if (cross(b - a, kOrigin - a) <= 0) return false;
      }
      return true;
    }
  }
  return false;
}

bool ConditionWitness::replay(const std::vector<Pt>& X) const {
  switch (kind) {
    case ConditionKind::LC:
      for (Pt a : X)
        if (dot(u, a) <= 0) return false;
      return true;
    case ConditionKind::WLC:
      for (Pt a : X)
        if (dot(u, a) < 0) return false;
      return true;
    case ConditionKind::SLC:
      if (offset < 1) return false;
      for (Pt a : X)
        if (dot(u, a) < offset + 1) return false;
      return true;
    case ConditionKind::CC: {
      if (!u2 || cross(u, *u2) == 0) return false;
      for (Pt a : X)
        if (dot(u, a) <= 0 || dot(*u2, a) <= 0) return false;
      return true;
    }
  }
  return false;
}

ConditionResult check_LC(const std::vector<Pt>& X) {
  ConditionResult r;
  if (X.empty()) {
    r.holds = true;
    r.witness = ConditionWitness{ConditionKind::LC, Pt{1, 0}, 0, std::nullopt};
    return r;
  }
  auto dirs = primitive_directions(X);
  auto extremes = open_halfplane_extremes(dirs);
  if (!extremes) return r;
  auto [lo, hi] = *extremes;
  Pt u = (lo == hi) ? lo : primitive(rot90ccw(lo) + rot90cw(hi));
  ConditionWitness w{ConditionKind::LC, u, 0, std::nullopt};
  LATWALK_CHECK(w.replay(X), "half-plane witness failed to replay");
  r.holds = true;
  r.witness = w;
  return r;
}

ConditionResult check_SLC(const std::vector<Pt>& X) {
  ConditionResult lc = check_LC(X);
  if (!lc.holds) return {};
  // An integer LC normal gives u.A >= 1; doubling makes every value >= 2,
  // so the line (2u).x = 1 separates X from the opposite half-plane
  // containing O.
  Pt u2 = {2 * lc.witness->u.x, 2 * lc.witness->u.y};
  ConditionWitness w{ConditionKind::SLC, u2, 1, std::nullopt};
  LATWALK_CHECK(w.replay(X), "offset half-plane witness failed to replay");
  return {true, w};
}

ConditionResult check_CC(const std::vector<Pt>& X) {
  ConditionResult r;
  if (X.empty()) {
    ConditionWitness w{ConditionKind::CC, Pt{1, 0}, 0, Pt{0, 1}};
    return {true, w};
  }
  auto dirs = primitive_directions(X);
  auto extremes = open_halfplane_extremes(dirs);
  if (!extremes) return r;
  auto [lo, hi] = *extremes;
  Pt u1, u2;
  if (lo == hi) {
    u1 = primitive(lo + rot90ccw(lo));
    u2 = primitive(lo + rot90cw(lo));
  } else {
    Pt a = rot90ccw(lo);
    Pt b = rot90cw(hi);
    u1 = primitive(2 * a + b);
    u2 = primitive(a + 2 * b);
  }
  ConditionWitness w{ConditionKind::CC, u1, 0, u2};
  LATWALK_CHECK(w.replay(X), "cone witness failed to replay");
  return {true, w};
}

ConditionResult check_WLC(const std::vector<Pt>& X) {
  if (X.empty()) {
    ConditionWitness w{ConditionKind::WLC, Pt{1, 0}, 0, std::nullopt};
    return {true, w};
  }
  std::vector<Pt> candidates;
  std::vector<Pt> sorted(X);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Pt a : sorted) {
    if (a.is_origin()) throw ValidationError("step set contains the origin");
    Pt d = primitive(a);
    candidates.push_back(rot90ccw(d));
    candidates.push_back(rot90cw(d));
  }
  HullResult hull = convex_hull(sorted);
  if (hull.kind == HullKind::Polygon) {
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
      Pt e = hull.vertices[(i + 1) % hull.vertices.size()] - hull.vertices[i];
      Pt n = primitive(rot90ccw(e));
      candidates.push_back(n);
      candidates.push_back(-n);
    }
  }
  for (Pt u : candidates) {
    ConditionWitness w{ConditionKind::WLC, u, 0, std::nullopt};
    if (w.replay(sorted)) return {true, w};
  }
  return {};
}

LineSpacing lines_with_lattice_points(Pt u) {
  if (u.is_origin()) throw ValidationError("direction must be nonzero");
  if (primitive(u) != u) throw ValidationError("direction must be primitive");
  // Extended gcd on (a, b) to produce a*s + b*t = 1.
  std::int64_t a = u.x, b = u.y;
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  LATWALK_CHECK(old_r == 1, "extended gcd of a primitive vector is not 1");
  LineSpacing out;
  out.spacing_sq = BigRat(1, BigInt(a) * a + BigInt(b) * b);
  out.unit_solution = {old_s, old_t};
  LATWALK_CHECK(dot(u, out.unit_solution) == 1, "unit solution does not satisfy the gcd identity");
  return out;
}

bool collinear_through_origin(const std::vector<Pt>& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (cross(X[i], X[j]) != 0) return false;
  return true;
}

}  // namespace latwalk
