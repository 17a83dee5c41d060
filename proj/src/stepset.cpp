// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/stepset.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "latwalk/errors.hpp"
#include "latwalk/geometry.hpp"

namespace latwalk {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 13> kFamilyNames{{
    {Family::EN, "EN"},
    {Family::NESW, "NESW"},
    {Family::NES, "NES"},
    {Family::OneTimesZ, "one_times_Z"},
    {Family::OneTimesN, "one_times_N"},
    {Family::OneTimesP, "one_times_P"},
    {Family::NorthPlusOneTimesP, "north_plus_one_times_P"},
    {Family::AASquared, "a_a_squared"},
    {Family::Middle, "middle"},
    {Family::IrrationalHalfplane, "irrational_halfplane"},
    {Family::Sqrt2IV, "sqrt2_IV"},
    {Family::IX, "IX"},
    {Family::AppendixV, "appendix_V"},
}};

constexpr std::int64_t kMaxMaterializedSteps = 10'000'000;

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

void require_budget(bool cond, const std::string& msg) {
  if (!cond) throw BudgetError(msg);
}

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw BudgetError(std::string(what) + " exceeds the 64-bit lattice range");
  return static_cast<std::int64_t>(v);
}

BigInt qx_ceil(const QuadExt& x) { return -((-x).floor()); }

bool squarefree_radicand(long long d) {
  if (d < 2) return false;
  for (long long f = 2; f * f <= d; ++f)
    if (d % (f * f) == 0) return false;
  return true;
}

// Lexicographically least lattice point of the open rhombus
//   2p < sqrt(2)*x - y < 2p + 2,   -sqrt(2)*(q+1) < y < -sqrt(2)*q.
Pt rhombus_representative(std::int64_t p, std::int64_t q) {
  const QuadExt xi = QuadExt::sqrt_d(2);
  const QuadExt band_lo = QuadExt::rational(BigRat(2 * p), 2);
  const QuadExt band_hi = QuadExt::rational(BigRat(2 * p + 2), 2);
  const QuadExt y_lo = -(xi * QuadExt::rational(BigRat(q + 1), 2));
  const QuadExt y_hi = -(xi * QuadExt::rational(BigRat(q), 2));

  const std::int64_t ymin = to_i64(y_lo.floor() + 1, "rhombus scan");
  const std::int64_t ymax = to_i64(qx_ceil(y_hi) - 1, "rhombus scan");
  // x must satisfy (2p + y) / sqrt(2) < x < (2p + 2 + y) / sqrt(2) for some
  // admissible y, so the full scan range comes from the extreme y values.
  const std::int64_t xmin =
      to_i64(((band_lo + QuadExt::rational(BigRat(ymin), 2)) / xi).floor() + 1,
             "rhombus scan");
  const std::int64_t xmax = to_i64(
      qx_ceil((band_hi + QuadExt::rational(BigRat(ymax), 2)) / xi) - 1, "rhombus scan");

  for (std::int64_t x = xmin; x <= xmax; ++x) {
    const QuadExt sx = xi * QuadExt::rational(BigRat(x), 2);
    const std::int64_t band_ymin = to_i64((sx - band_hi).floor() + 1, "rhombus scan");
    const std::int64_t band_ymax = to_i64(qx_ceil(sx - band_lo) - 1, "rhombus scan");
    const std::int64_t y = std::max(band_ymin, ymin);
    if (y > std::min(band_ymax, ymax)) continue;
    const QuadExt t = sx - QuadExt::rational(BigRat(y), 2);
    LATWALK_CHECK((t - band_lo).sign() > 0 && (band_hi - t).sign() > 0,
                  "rhombus representative escapes the diagonal band");
    const QuadExt yy = QuadExt::rational(BigRat(y), 2);
    LATWALK_CHECK((yy - y_lo).sign() > 0 && (y_hi - yy).sign() > 0,
                  "rhombus representative escapes the vertical band");
    return Pt{x, y};
  }
  throw std::logic_error("open rhombus unexpectedly contains no lattice point");
}

std::string window_str(const Window& w) {
  std::ostringstream os;
  os << "[" << w.xmin << ".." << w.xmax << "]x[" << w.ymin << ".." << w.ymax << "]";
  return os.str();
}

const Window& required_window(const StepSetSpec& spec, const char* family) {
  require(spec.truncation.window.has_value(),
          std::string(family) + " requires a truncation window");
  const Window& w = *spec.truncation.window;
  require(w.valid(), "truncation window has empty extent");
  return w;
}

void check_cell_budget(const Window& w) {
  const auto cells = static_cast<Wide>(w.xmax - w.xmin + 1) * (w.ymax - w.ymin + 1);
  require_budget(cells <= kMaxMaterializedSteps, "truncation window too large");
}

// ---------------------------------------------------------------------------
// Half-plane-intersection region analysis
// ---------------------------------------------------------------------------

struct RegionInfo {
  HalfplaneRegionShape shape = HalfplaneRegionShape::Plane;
  Pt lo{1, 0};        // Wedge: extreme normals; HalfPlane: the normal (in lo)
  Pt hi{1, 0};
  Pt line_dir{0, 0};  // Line: region = Z*line_dir; Ray: region = N*line_dir
};

RegionInfo analyze_halfplanes(const std::vector<Pt>& normals) {
  RegionInfo info;
  if (normals.empty()) return info;
  const std::vector<Pt> dirs = primitive_directions(normals);
  if (dirs.size() == 1) {
    info.shape = HalfplaneRegionShape::HalfPlane;
    info.lo = info.hi = dirs[0];
    return info;
  }
  std::optional<Pt> anti;
  for (Pt u : dirs) {
    if (std::find(dirs.begin(), dirs.end(), -u) != dirs.end()) {
      anti = u;
      break;
    }
  }
  if (anti) {
    const Pt u = *anti;
    const Pt D = rot90ccw(u);
    bool pos = false, neg = false;
    for (Pt w : dirs) {
      if (w == u || w == -u) continue;
      (dot(w, D) > 0 ? pos : neg) = true;
    }
    if (pos && neg) {
      info.shape = HalfplaneRegionShape::PointOnly;
    } else if (pos || neg) {
      info.shape = HalfplaneRegionShape::Ray;
      info.line_dir = pos ? D : -D;
    } else {
      info.shape = HalfplaneRegionShape::Line;
      info.line_dir = D;
    }
    return info;
  }
  const auto ext = open_halfplane_extremes(dirs);
  if (!ext) {
    // The normals positively span the plane: only the origin survives.
    info.shape = HalfplaneRegionShape::PointOnly;
    return info;
  }
  info.shape = HalfplaneRegionShape::Wedge;
  info.lo = ext->first;
  info.hi = ext->second;
  return info;
}

}  // namespace

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  throw std::logic_error("unmapped family enumerator");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [fam, fname] : kFamilyNames)
    if (fname == name) return fam;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& [fam, name] : kFamilyNames) v.push_back(fam);
    return v;
  }();
  return fams;
}

StepSetSpec StepSetSpec::from_steps(std::vector<Pt> steps) {
  StepSetSpec spec;
  spec.explicit_steps = std::move(steps);
  return spec;
}

StepSetSpec StepSetSpec::from_family(Family f, Truncation t, FamilyParams p) {
  StepSetSpec spec;
  spec.family = f;
  spec.truncation = std::move(t);
  spec.params = p;
  return spec;
}

bool MaterializedStepSet::contains(Pt p) const {
  return std::binary_search(steps.begin(), steps.end(), p);
}

MaterializedStepSet materialize(const StepSetSpec& spec) {
  MaterializedStepSet out;
  out.family = spec.family;
  std::vector<Pt>& steps = out.steps;
  std::ostringstream desc;

  if (!spec.family) {
    for (Pt p : spec.explicit_steps)
      require(!p.is_origin(), "explicit step set contains the origin");
    steps = spec.explicit_steps;
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    desc << "explicit {";
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i) desc << ", ";
      if (i == 8 && steps.size() > 9) {
        desc << "... " << steps.size() << " steps";
        break;
      }
      desc << to_string(steps[i]);
    }
    desc << "}";
    out.description = desc.str();
    return out;
  }

  const std::int64_t m = spec.truncation.bound;
  require_budget(m <= kMaxMaterializedSteps, "truncation bound too large");

  switch (*spec.family) {
    case Family::EN:
      steps = {{1, 0}, {0, 1}};
      desc << "{E, N}";
      break;
    case Family::NESW:
      steps = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
      desc << "{N, E, S, W}";
      break;
    case Family::NES:
      steps = {{0, 1}, {1, 0}, {0, -1}};
      desc << "{N, E, S}";
      break;
    case Family::OneTimesZ:
      require(m >= 0, "one_times_Z needs bound >= 0");
      for (std::int64_t b = -m; b <= m; ++b) steps.push_back({1, b});
      desc << "{1} x {" << -m << ".." << m << "}";
      break;
    case Family::OneTimesN:
      require(m >= 0, "one_times_N needs bound >= 0");
      for (std::int64_t b = 0; b <= m; ++b) steps.push_back({1, b});
      desc << "{1} x {0.." << m << "}";
      break;
    case Family::OneTimesP:
      require(m >= 1, "one_times_P needs bound >= 1");
      for (std::int64_t b = 1; b <= m; ++b) steps.push_back({1, b});
      desc << "{1} x {1.." << m << "}";
      break;
    case Family::NorthPlusOneTimesP:
      require(m >= 1, "north_plus_one_times_P needs bound >= 1");
      steps.push_back({0, 1});
      for (std::int64_t b = 1; b <= m; ++b) steps.push_back({1, b});
      desc << "{N} U ({1} x {1.." << m << "})";
      break;
    case Family::AASquared:
      require(m >= 1, "a_a_squared needs bound >= 1");
      require_budget(m <= 3'000'000, "a_a_squared bound too large");
      steps.push_back({1, 0});
      for (std::int64_t a = 1; a <= m; ++a) {
        steps.push_back({a, a * a});
        steps.push_back({a, -a * a});
      }
      desc << "{E} U {(a, a^2), (a, -a^2) : 1 <= a <= " << m << "}";
      break;
    case Family::Middle:
      require(m >= 1, "middle needs bound >= 1");
      require_budget(m <= 3'000'000, "middle bound too large");
      steps.push_back({0, -1});
      for (std::int64_t a = 1; a <= m; ++a) steps.push_back({a, a * a});
      desc << "{S} U {(a, a^2) : 1 <= a <= " << m << "}";
      break;
    case Family::IrrationalHalfplane: {
      const Window& w = required_window(spec, "irrational_halfplane");
      check_cell_budget(w);
      require(squarefree_radicand(spec.params.d),
              "radicand must be a squarefree integer >= 2");
      for (std::int64_t x = w.xmin; x <= w.xmax; ++x)
        for (std::int64_t y = w.ymin; y <= w.ymax; ++y) {
          const Pt p{x, y};
          if (p.is_origin()) continue;
          if (side_value_sign(p, spec.params.d, spec.params.side) > 0)
            steps.push_back(p);
        }
      require(!steps.empty(), "window contains no step on the requested side");
      desc << "lattice points of " << window_str(w) << " strictly "
           << (spec.params.side == HalfplaneSide::Below ? "below" : "above")
           << " y = x*sqrt(" << spec.params.d << ")";
      break;
    }
    case Family::Sqrt2IV: {
      const Window& w = required_window(spec, "sqrt2_IV");
      check_cell_budget(w);
      require(m >= 0, "sqrt2_IV needs bound >= 0");
      require_budget(m <= 3'000'000, "sqrt2_IV bound too large");
      for (std::int64_t x = std::max<std::int64_t>(1, w.xmin); x <= w.xmax; ++x)
        for (std::int64_t y = std::max<std::int64_t>(1, w.ymin); y <= w.ymax; ++y) {
          // 0 < sqrt(2)*x - y < 2 with x, y >= 1: square both strict sides.
          const Wide xx = static_cast<Wide>(x) * x;
          if (2 * xx > static_cast<Wide>(y) * y &&
              2 * xx < static_cast<Wide>(y + 2) * (y + 2))
            steps.push_back({x, y});
        }
      for (std::int64_t p = 0; p <= m; ++p)
        steps.push_back(rhombus_representative(p, p * p));
      desc << "band 0 < x*sqrt(2) - y < 2 over " << window_str(w)
           << ", plus rhombus points A_0..A_" << m;
      break;
    }
    case Family::IX:
      require(m >= 0, "IX needs bound >= 0");
      steps.push_back({0, -1});
      for (std::int64_t b = 0; b <= m; ++b) steps.push_back({1, b});
      desc << "{S} U ({1} x {0.." << m << "})";
      break;
    case Family::AppendixV: {
      require(m >= 1, "appendix_V needs bound >= 1");
      require(squarefree_radicand(spec.params.d),
              "radicand must be a squarefree integer >= 2");
      AppendixContext ctx(spec.params.d);
      const ExampleVTruncation trunc = example_v_steps(m, ctx);
      steps = trunc.steps;
      desc << "quadratic-monoid steps A_1..A_" << m << " and B_1 = C_1 = (2,0), d = "
           << spec.params.d;
      break;
    }
  }

  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  for (Pt p : steps) LATWALK_CHECK(!p.is_origin(), "materialized step set contains O");
  out.description = desc.str();
  return out;
}

std::vector<Pt> zero_times_p_steps(std::int64_t bound) {
  require(bound >= 1, "{0} x P needs bound >= 1");
  std::vector<Pt> steps;
  for (std::int64_t b = 1; b <= bound; ++b) steps.push_back({0, b});
  return steps;
}

std::vector<Pt> p_squared_steps(std::int64_t bound) {
  require(bound >= 1, "P^2 needs bound >= 1");
  require_budget(bound * bound <= kMaxMaterializedSteps, "P^2 bound too large");
  std::vector<Pt> steps;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b) steps.push_back({a, b});
  return steps;
}

// ---------------------------------------------------------------------------
// Constraints
// ---------------------------------------------------------------------------

std::string_view constraint_kind_name(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::FullPlane: return "full_plane";
    case ConstraintKind::HalfplaneIntersection: return "halfplane_intersection";
    case ConstraintKind::PuncturedQuadrant: return "punctured_quadrant";
    case ConstraintKind::DiagonalChain: return "diagonal_chain";
    case ConstraintKind::BelowDiagonal: return "below_diagonal";
    case ConstraintKind::CustomPredicate: return "custom";
  }
  throw std::logic_error("unmapped constraint kind");
}

Constraint Constraint::full_plane() { return {}; }

Constraint Constraint::halfplane_intersection(std::vector<Pt> normals) {
  require(!normals.empty(), "half-plane intersection needs at least one normal");
  for (Pt u : normals) require(!u.is_origin(), "half-plane normal must be nonzero");
  Constraint c;
  c.kind_ = ConstraintKind::HalfplaneIntersection;
  c.normals_ = std::move(normals);
  std::ostringstream os;
  os << "{p : ";
  for (std::size_t i = 0; i < c.normals_.size(); ++i)
    os << (i ? ", " : "") << to_string(c.normals_[i]) << ".p >= 0";
  os << "}";
  c.description_ = os.str();
  return c;
}

Constraint Constraint::punctured_quadrant() {
  Constraint c;
  c.kind_ = ConstraintKind::PuncturedQuadrant;
  c.description_ = "{O} U P^2";
  return c;
}

Constraint Constraint::diagonal_chain() {
  Constraint c;
  c.kind_ = ConstraintKind::DiagonalChain;
  c.description_ = "{(a,a) : a in Z}";
  return c;
}

Constraint Constraint::below_diagonal() {
  Constraint c;
  c.kind_ = ConstraintKind::BelowDiagonal;
  c.description_ = "{(a,b) in N^2 : b <= a}";
  return c;
}

Constraint Constraint::custom(std::function<bool(Pt)> member, std::string description,
                              bool asserts_submonoid) {
  require(static_cast<bool>(member), "custom constraint needs a membership predicate");
  Constraint c;
  c.kind_ = ConstraintKind::CustomPredicate;
  c.member_ = std::move(member);
  c.description_ = std::move(description);
  c.asserts_submonoid_ = asserts_submonoid;
  require(c.member_(kOrigin), "constraint set must contain the origin");
  return c;
}

bool Constraint::asserts_submonoid() const {
  return kind_ == ConstraintKind::CustomPredicate ? asserts_submonoid_ : true;
}

bool Constraint::contains(Pt p) const {
  switch (kind_) {
    case ConstraintKind::FullPlane:
      return true;
    case ConstraintKind::HalfplaneIntersection:
      for (Pt u : normals_)
        if (dot(u, p) < 0) return false;
      return true;
    case ConstraintKind::PuncturedQuadrant:
      return p.is_origin() || (p.x >= 1 && p.y >= 1);
    case ConstraintKind::DiagonalChain:
      return p.x == p.y;
    case ConstraintKind::BelowDiagonal:
      return p.y >= 0 && p.y <= p.x;
    case ConstraintKind::CustomPredicate:
      return member_(p);
  }
  throw std::logic_error("unmapped constraint kind");
}

std::optional<HalfplaneRegionShape> Constraint::region_shape() const {
  switch (kind_) {
    case ConstraintKind::FullPlane: return HalfplaneRegionShape::Plane;
    case ConstraintKind::HalfplaneIntersection: return analyze_halfplanes(normals_).shape;
    case ConstraintKind::PuncturedQuadrant: return HalfplaneRegionShape::Wedge;
    case ConstraintKind::BelowDiagonal: return HalfplaneRegionShape::Wedge;
    case ConstraintKind::DiagonalChain: return HalfplaneRegionShape::Line;
    case ConstraintKind::CustomPredicate: return std::nullopt;
  }
  throw std::logic_error("unmapped constraint kind");
}

std::optional<Pt> Constraint::restricted_to_line() const {
  if (kind_ == ConstraintKind::DiagonalChain) return Pt{1, 1};
  if (kind_ == ConstraintKind::HalfplaneIntersection) {
    const RegionInfo info = analyze_halfplanes(normals_);
    if (info.shape == HalfplaneRegionShape::Line ||
        info.shape == HalfplaneRegionShape::Ray)
      return info.line_dir;
  }
  return std::nullopt;
}

bool Constraint::trivial_intersection_with_negation() const {
  switch (kind_) {
    case ConstraintKind::PuncturedQuadrant:
    case ConstraintKind::BelowDiagonal:
      return true;
    case ConstraintKind::HalfplaneIntersection: {
      const auto shape = analyze_halfplanes(normals_).shape;
      return shape == HalfplaneRegionShape::Wedge ||
             shape == HalfplaneRegionShape::Ray ||
             shape == HalfplaneRegionShape::PointOnly;
    }
    default:
      return false;
  }
}

bool Constraint::step_can_ever_enter(Pt step) const {
  if (step.is_origin()) return false;
  switch (kind_) {
    case ConstraintKind::DiagonalChain:
      return step.x == step.y;
    case ConstraintKind::HalfplaneIntersection: {
      const RegionInfo info = analyze_halfplanes(normals_);
      switch (info.shape) {
        case HalfplaneRegionShape::PointOnly:
          return false;
        case HalfplaneRegionShape::Line:
        case HalfplaneRegionShape::Ray:
          return cross(step, info.line_dir) == 0;
        default:
          return true;
      }
    }
    default:
      return true;
  }
}

std::optional<std::pair<Pt, Pt>> Constraint::inner_cone() const {
  std::optional<std::pair<Pt, Pt>> cone;
  switch (kind_) {
    case ConstraintKind::FullPlane:
    case ConstraintKind::PuncturedQuadrant:
      cone = std::make_pair(Pt{1, 0}, Pt{0, 1});
      break;
    case ConstraintKind::BelowDiagonal:
      cone = std::make_pair(Pt{0, 1}, Pt{1, -1});
      break;
    case ConstraintKind::HalfplaneIntersection: {
      const RegionInfo info = analyze_halfplanes(normals_);
      if (info.shape == HalfplaneRegionShape::Wedge)
        cone = std::make_pair(info.lo, info.hi);
      else if (info.shape == HalfplaneRegionShape::HalfPlane)
        cone = std::make_pair(info.lo + rot90ccw(info.lo), info.lo + rot90cw(info.lo));
      break;
    }
    default:
      break;
  }
  if (cone)
    LATWALK_CHECK(cone_inside(cone->first, cone->second),
                  "default inner cone fails its own containment check");
  return cone;
}

bool Constraint::cone_inside(Pt u1, Pt u2) const {
  if (cross(u1, u2) == 0) return false;  // not a proper cone
  // Boundary-ray directions of the closed cone {u1.p >= 0, u2.p >= 0}: the
  // open cone's lattice points lie in C whenever both rays satisfy every
  // structural half-plane requirement weakly.
  const Pt g1 = cross(u1, u2) > 0 ? rot90ccw(u1) : rot90cw(u1);
  const Pt g2 = cross(u1, u2) > 0 ? rot90cw(u2) : rot90ccw(u2);
  LATWALK_CHECK(dot(u2, g1) > 0 && dot(u1, g2) > 0, "cone ray orientation");
  std::vector<Pt> required;
  switch (kind_) {
    case ConstraintKind::FullPlane:
      return true;
    case ConstraintKind::PuncturedQuadrant:
      required = {{1, 0}, {0, 1}};
      break;
    case ConstraintKind::BelowDiagonal:
      required = {{0, 1}, {1, -1}};
      break;
    case ConstraintKind::HalfplaneIntersection:
      required = normals_;
      break;
    case ConstraintKind::DiagonalChain:
    case ConstraintKind::CustomPredicate:
      return false;  // a proper open cone never fits in a line / unverifiable
  }
  for (Pt w : required)
    if (dot(w, g1) < 0 || dot(w, g2) < 0) return false;
  return true;
}

bool Constraint::closure_spot_check(std::uint64_t seed, int trials,
                                    std::int64_t range) const {
  if (!contains(kOrigin)) return false;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::vector<Pt> members;
  const int attempts = trials * 50;
  for (int i = 0; i < attempts && static_cast<int>(members.size()) < 4 * trials; ++i) {
    const Pt p{coord(gen), coord(gen)};
    if (contains(p)) members.push_back(p);
  }
  if (members.empty()) return true;  // nothing but O: trivially closed
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int i = 0; i < trials; ++i) {
    const Pt a = members[pick(gen)];
    const Pt b = members[pick(gen)];
    if (!contains(a + b)) return false;
  }
  return true;
}

bool walk_is_constrained(const Walk& w, const Constraint& c) {
  Pt pos = kOrigin;
  if (!c.contains(pos)) return false;
  for (Pt step : w) {
    pos = pos + step;
    if (!c.contains(pos)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

const std::vector<RegistryEntry>& registry_classification() {
  // Columns: cc, slc, lc | fpp, bpp, ipp.
  static const std::vector<RegistryEntry> rows = {
      {Family::EN, "(I)", true, true, true, true, true, false,
       "two steps inside a proper open cone with vertex O: every condition and "
       "finiteness property takes its strongest value"},
      {Family::NESW, "(X)", false, false, false, false, false, true,
       "contains the opposite pairs N,S and E,W, so closed walks pass through "
       "every reachable point and all counts are infinite"},
      {Family::NES, "(X)", false, false, false, false, false, true,
       "contains the opposite pair N,S, so closed walks exist and every "
       "reachable point has infinitely many walks"},
      {Family::OneTimesZ, "(III)", false, true, true, false, true, false,
       "every step advances x by exactly 1, so walks to (a,b) all have length a "
       "(bounded), but unbounded vertical choices make the count infinite; the "
       "strip clears the line x = 1/2 yet fits in no cone"},
      {Family::OneTimesN, "(I)", true, true, true, true, true, false,
       "the quarter-strip fits in the proper open cone with normals (1,0) and "
       "(1,1), forcing finiteness everywhere"},
      {Family::OneTimesP, "(I)", true, true, true, true, true, false,
       "fits in the open first-quadrant cone (normals (1,0) and (0,1))"},
      {Family::NorthPlusOneTimesP, "(I)", true, true, true, true, true, false,
       "fits in the proper open cone with normals (1,1) and (0,1)"},
      {Family::AASquared, "(II)", false, true, true, true, true, false,
       "steps escape toward both vertical directions, so no cone contains them, "
       "but all lie on or beyond the line x = 1 and counts stay finite because "
       "x never stalls"},
      {Family::Middle, "(VII)", false, false, false, true, true, false,
       "no half-plane through O strictly contains both S and the parabola "
       "points, yet x never decreases and southward depth is limited by the "
       "x-advance, so all counts are finite"},
      {Family::IrrationalHalfplane, "(VI)", false, false, true, false, false, false,
       "an open half-plane bounded by an irrational line through O: the line "
       "condition holds, but lattice points hug the boundary arbitrarily "
       "closely, so there is no strict gap, no cone, and arbitrarily long walks "
       "reach fixed targets"},
      {Family::Sqrt2IV, "(IV)", false, false, true, true, true, false,
       "every step keeps a positive irrational margin x*sqrt(2) - y whose sum "
       "bounds walk length, so counts are finite, yet the set creeps toward the "
       "boundary line: no strict line gap and no cone"},
      {Family::IX, "(IX)", false, false, false, false, false, false,
       "x never decreases and pure-south walks never return, so there are no "
       "closed walks, but the infinite column over x = 1 defeats every line "
       "condition and every finiteness property"},
      {Family::AppendixV, "(V)", false, false, true, false, true, false,
       "every step has positive value a + b*sqrt(2), which bounds walk length "
       "to any fixed target, yet one target admits infinitely many two-step "
       "walks; step values approach 0, so no strict gap and no cone"},
  };
  return rows;
}

const RegistryEntry& registry_lookup(Family f) {
  for (const RegistryEntry& row : registry_classification())
    if (row.family == f) return row;
  throw std::logic_error("family missing from the classification registry");
}

}  // namespace latwalk
