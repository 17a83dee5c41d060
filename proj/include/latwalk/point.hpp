// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATWALK_POINT_HPP
#define LATWALK_POINT_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace latwalk {

// Planar lattice point / integer vector.  Products are widened to 128 bits so
// every orientation and dot-product predicate is exact for 64-bit inputs.
struct Pt {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Pt operator-(Pt a) { return {-a.x, -a.y}; }
  friend constexpr Pt operator*(std::int64_t k, Pt a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Pt a, Pt b) = default;
  friend constexpr auto operator<=>(Pt a, Pt b) = default;  // lexicographic (x, then y)

  constexpr bool is_origin() const { return x == 0 && y == 0; }
};

inline constexpr Pt kOrigin{0, 0};

using Wide = __int128;

constexpr Wide cross(Pt a, Pt b) {
  return static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
}

constexpr Wide dot(Pt a, Pt b) {
  return static_cast<Wide>(a.x) * b.x + static_cast<Wide>(a.y) * b.y;
}

constexpr int sgn(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Quarter-turn rotations.
constexpr Pt rot90ccw(Pt a) { return {-a.y, a.x}; }
constexpr Pt rot90cw(Pt a) { return {a.y, -a.x}; }

// Reduce a nonzero vector to its primitive representative (gcd of the
// absolute coordinates divided out, orientation preserved).
inline Pt primitive(Pt a) {
  std::int64_t g = std::gcd(a.x < 0 ? -a.x : a.x, a.y < 0 ? -a.y : a.y);
  if (g <= 1) return a;
  return {a.x / g, a.y / g};
}

inline std::string to_string(Pt p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// A walk is a word over a step set; steps are applied left to right.
using Walk = std::vector<Pt>;

inline Pt walk_endpoint(const Walk& w) {
  Pt s = kOrigin;
  for (Pt a : w) s = s + a;
  return s;
}

struct PtHash {
  std::size_t operator()(Pt p) const {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace latwalk

#endif  // LATWALK_POINT_HPP
