// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/classification.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

std::vector<Pt> normalized_steps(const std::vector<Pt>& X) {
  std::vector<Pt> steps = X;
  for (Pt a : steps)
    if (a.is_origin()) throw ValidationError("step set contains the origin");
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

// Built-in region kinds are submonoids by construction; custom predicates
// must carry the closure claim and survive a randomized check.
void require_submonoid_region(const Constraint& C) {
  if (C.kind() != ConstraintKind::CustomPredicate) return;
  if (!C.asserts_submonoid())
    throw ValidationError(
        "constrained classification needs a region declared closed under addition");
  if (!C.contains(kOrigin))
    throw ValidationError("the declared region must contain O");
  if (!C.closure_spot_check(0xC0FFEEULL))
    throw ValidationError("custom region failed the submonoid closure spot check");
}

// Constrained-reachable points from O within `depth` steps, with parents for
// witness reconstruction.  Deterministic: lexicographic step order.
// `complete` is set when the frontier died, i.e. the map holds the entire
// reachable set, not a truncation.
struct ReachResult {
  std::map<Pt, std::pair<Pt, Pt>> parent;
  bool complete = false;
};

ReachResult constrained_reach(const std::vector<Pt>& steps, const Constraint& C,
                              long long depth) {
  ReachResult out;
  out.parent.emplace(kOrigin, std::make_pair(kOrigin, kOrigin));
  std::vector<Pt> frontier{kOrigin};
  for (long long d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Pt> next;
    for (Pt p : frontier)
      for (Pt b : steps) {
        const Pt q = p + b;
        if (!C.contains(q) || out.parent.contains(q)) continue;
        out.parent.emplace(q, std::make_pair(p, b));
        next.push_back(q);
      }
    frontier.swap(next);
  }
  out.complete = frontier.empty();
  return out;
}

Walk walk_to(const std::map<Pt, std::pair<Pt, Pt>>& parent, Pt to) {
  Walk w;
  for (Pt c = to; !(parent.at(c).first == c);) {
    const auto& [prev, s] = parent.at(c);
    w.push_back(s);
    c = prev;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool collinear_through_origin(const std::vector<Pt>& steps, Pt* dir_out) {
  if (steps.empty()) return false;
  const Pt d = primitive(steps.front());
  for (Pt a : steps)
    if (cross(d, a) != 0) return false;
  if (dir_out) *dir_out = d;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string tri_name(TriBool t) {
  switch (t) {
    case TriBool::Yes: return "Yes";
    case TriBool::No: return "No";
    case TriBool::Unknown: return "Unknown";
  }
  throw std::logic_error("unmapped verdict");
}

std::string combination_label(Combination c) {
  switch (c) {
    case Combination::I: return "(I)";
    case Combination::II: return "(II)";
    case Combination::III: return "(III)";
    case Combination::IV: return "(IV)";
    case Combination::V: return "(V)";
    case Combination::VI: return "(VI)";
    case Combination::VII: return "(VII)";
    case Combination::VIII: return "(VIII)";
    case Combination::IX: return "(IX)";
    case Combination::X: return "(X)";
    case Combination::Unknown: return "Unknown";
  }
  throw std::logic_error("unmapped combination");
}

std::optional<Combination> combination_from_label(std::string_view label) {
  static constexpr Combination all[] = {
      Combination::I,  Combination::II, Combination::III, Combination::IV,
      Combination::V,  Combination::VI, Combination::VII, Combination::VIII,
      Combination::IX, Combination::X,
  };
  for (Combination c : all)
    if (combination_label(c) == label) return c;
  return std::nullopt;
}

Combination combination_from_flags(bool cc, bool slc, bool lc, bool fpp,
                                   bool bpp, bool ipp) {
  if (cc && !slc) throw std::logic_error("cone witness without an offset half-plane");
  if (slc && !lc) throw std::logic_error("offset half-plane without a half-plane");
  if (fpp && !bpp) throw std::logic_error("finite counts but unbounded lengths");
  if (bpp && ipp) throw std::logic_error("bounded lengths alongside infinite counts");
  if (cc && !fpp) throw std::logic_error("cone witness with an infinite count");
  if (slc && !bpp) throw std::logic_error("offset half-plane with unbounded lengths");
  if (lc && ipp) throw std::logic_error("half-plane witness with infinite counts");
  const int key = (cc << 5) | (slc << 4) | (lc << 3) | (fpp << 2) | (bpp << 1) |
                  static_cast<int>(ipp);
  switch (key) {
    case 0b111110: return Combination::I;
    case 0b011110: return Combination::II;
    case 0b011010: return Combination::III;
    case 0b001110: return Combination::IV;
    case 0b001010: return Combination::V;
    case 0b001000: return Combination::VI;
    case 0b000110: return Combination::VII;
    case 0b000010: return Combination::VIII;
    case 0b000000: return Combination::IX;
    case 0b000001: return Combination::X;
  }
  throw std::logic_error("flag pattern escapes the ten-row table");
}

std::string group_iso_name(GroupIso g) {
  switch (g) {
    case GroupIso::Trivial: return "trivial group";
    case GroupIso::Z: return "Z";
    case GroupIso::Z2: return "Z^2";
    case GroupIso::NotGroup: return "not a group";
  }
  throw std::logic_error("unmapped group tag");
}

void audit_hierarchy(const ClassificationReport& r) {
  const bool cc = r.cc.holds, slc = r.slc.holds, lc = r.lc.holds;
  LATWALK_CHECK(!(cc && !slc), "hierarchy: cone implies offset half-plane");
  LATWALK_CHECK(!(slc && !lc), "hierarchy: offset half-plane implies half-plane");
  LATWALK_CHECK(!(lc && !r.wlc.holds), "hierarchy: open half-plane implies closed");
  const auto yes = [](TriBool t) { return t == TriBool::Yes; };
  const auto no = [](TriBool t) { return t == TriBool::No; };
  LATWALK_CHECK(!(yes(r.fpp) && no(r.bpp)), "hierarchy: finite counts bound lengths");
  LATWALK_CHECK(!(yes(r.bpp) && yes(r.ipp)),
                "hierarchy: bounded lengths exclude infinite counts");
  LATWALK_CHECK(!(cc && no(r.fpp)), "hierarchy: cone forces finite counts");
  LATWALK_CHECK(!(slc && no(r.bpp)), "hierarchy: offset half-plane bounds lengths");
  LATWALK_CHECK(!(lc && yes(r.ipp)), "hierarchy: half-plane excludes infinite counts");
  LATWALK_CHECK(!(yes(r.ipp) && (yes(r.fpp) || yes(r.bpp))),
                "hierarchy: infinite counts defeat finiteness");
}

// ---------------------------------------------------------------------------

GroupIso group_structure(const std::vector<Pt>& X) {
  const std::vector<Pt> steps = normalized_steps(X);
  GroupIso iso;
  if (steps.empty()) {
    iso = GroupIso::Trivial;
  } else if (Pt dir{0, 0}; collinear_through_origin(steps, &dir)) {
    bool pos = false, neg = false;
    for (Pt a : steps) (dot(dir, a) > 0 ? pos : neg) = true;
    iso = (pos && neg) ? GroupIso::Z : GroupIso::NotGroup;
  } else {
    iso = check_WLC(steps).holds ? GroupIso::NotGroup : GroupIso::Z2;
  }
  LATWALK_CHECK(iso == GroupIso::Trivial ||
                    (iso != GroupIso::NotGroup) == origin_in_relative_interior(steps),
                "group verdict disagrees with the relative-interior criterion");
  return iso;
}

ClassificationReport classify_finite(const std::vector<Pt>& X) {
  const std::vector<Pt> steps = normalized_steps(X);
  ClassificationReport r;
  r.lc = check_LC(steps);
  r.slc = check_SLC(steps);
  r.cc = check_CC(steps);
  r.wlc = check_WLC(steps);
  LATWALK_CHECK(r.cc.holds == r.lc.holds && r.slc.holds == r.lc.holds,
                "the three conditions must coincide on a finite set");

  const OriginInHull hull = origin_in_hull(steps);
  LATWALK_CHECK(hull.inside == !r.lc.holds,
                "hull membership must mirror the half-plane test");

  if (r.lc.holds) {
    r.fpp = r.bpp = TriBool::Yes;
    r.ipp = TriBool::No;
    r.fpp_rationale = r.bpp_rationale =
        "half-plane witness " + to_string(r.lc.witness->u) +
        ": every walk to P has length at most u.P";
    r.ipp_rationale = "half-plane witness: no nonempty walk returns to O";
    r.combination = Combination::I;
  } else {
    r.fpp = r.bpp = TriBool::No;
    r.ipp = TriBool::Yes;
    r.units_certificate = hull.certificate;
    try {
      r.ipp_cycle = closed_walk_from_certificate(*hull.certificate);
    } catch (const BudgetError&) {
      // certificate coefficients too large to expand; the certificate itself
      // remains as evidence
    }
    r.fpp_rationale = r.bpp_rationale = r.ipp_rationale =
        "a positive step combination returns to O; repeating it pumps every "
        "reachable target";
    r.combination = Combination::X;
  }

  r.units_nontrivial = hull.inside;
  if (hull.inside) r.units_certificate = hull.certificate;
  r.group_iso = group_structure(steps);
  r.is_group = r.group_iso != GroupIso::NotGroup;

  LATWALK_CHECK(combination_from_flags(r.cc.holds, r.slc.holds, r.lc.holds,
                                       r.fpp == TriBool::Yes, r.bpp == TriBool::Yes,
                                       r.ipp == TriBool::Yes) == r.combination,
                "combination must match the flag table");
  LATWALK_CHECK(
      r.combination == Combination::I || r.combination == Combination::X,
      "finite sets admit only the all-or-nothing rows");
  audit_hierarchy(r);
  return r;
}

MonoidType small_stepset_monoid(const std::vector<Pt>& X) {
  const std::vector<Pt> steps = normalized_steps(X);
  if (steps.empty() || steps.size() > 2)
    throw ValidationError("monoid-type classification covers one or two steps");
  MonoidType m;
  if (steps.size() == 1) {
    m.kind = MonoidType::Kind::FreeOnOneGenerator;
    return m;
  }
  const Pt a = steps[0], b = steps[1];
  if (cross(a, b) != 0) {
    m.kind = MonoidType::Kind::FreeCommutativeRankTwo;
    return m;
  }
  if (dot(a, b) < 0) {
    m.kind = MonoidType::Kind::GroupZ;
    return m;
  }
  const Pt d = primitive(a);
  const auto mult = [&](Pt p) { return d.x != 0 ? p.x / d.x : p.y / d.y; };
  long long k = mult(a), l = mult(b);
  LATWALK_CHECK(k > 0 && l > 0, "same-ray multiples must be positive");
  const long long g = std::gcd(k, l);
  k /= g;
  l /= g;
  if (k > l) std::swap(k, l);
  m.kind = MonoidType::Kind::NumericalMonoid;
  m.k = k;
  m.l = l;
  m.scale = g;
  return m;
}

std::string monoid_type_name(const MonoidType& m) {
  switch (m.kind) {
    case MonoidType::Kind::FreeOnOneGenerator: return "free monogenic monoid";
    case MonoidType::Kind::NumericalMonoid: {
      std::ostringstream os;
      os << "numerical monoid <" << m.k << "," << m.l << ">";
      if (m.scale != 1) os << " (scaled by " << m.scale << ")";
      return os.str();
    }
    case MonoidType::Kind::GroupZ: return "group Z";
    case MonoidType::Kind::FreeCommutativeRankTwo:
      return "free commutative monoid of rank 2";
  }
  throw std::logic_error("unmapped monoid tag");
}

std::vector<BigInt> recurrence_sequence(long long k, long long l, long long n_max) {
  if (k < 1 || l <= k) throw ValidationError("recurrence needs 1 <= k < l");
  if (n_max < 0) throw ValidationError("sequence length must be nonnegative");
  std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1);
  for (long long n = 0; n <= n_max; ++n) {
    if (n == 0) {
      a[0] = 1;
      continue;
    }
    BigInt v = 0;
    if (n - k >= 0) v += a[static_cast<std::size_t>(n - k)];
    if (n - l >= 0) v += a[static_cast<std::size_t>(n - l)];
    a[static_cast<std::size_t>(n)] = v;
  }
  return a;
}

// ---------------------------------------------------------------------------

ClassificationReport classify_constrained(const std::vector<Pt>& X,
                                          const Constraint& C,
                                          const ConstrainedOptions& opts) {
  const std::vector<Pt> steps = normalized_steps(X);
  require_submonoid_region(C);
  ClassificationReport r;
  r.bound_used = opts.bound;

  r.lc = check_LC(steps);
  r.slc = check_SLC(steps);
  r.cc = check_CC(steps);
  r.wlc = check_WLC(steps);

  const OriginInHull hull = origin_in_hull(steps);
  r.units_nontrivial = hull.inside;
  if (hull.inside) r.units_certificate = hull.certificate;
  r.group_iso = group_structure(steps);
  r.is_group = r.group_iso != GroupIso::NotGroup;

  // Finite/bounded verdicts through the admissible-step refinement: walks of
  // the pair are exactly walks over the admissible subset, so when that
  // subset is fully determined its hull decides both properties.
  const AdmissibleReport adm =
      admissible_steps(steps, C, opts.bound, {}, opts.limits);
  r.admissible = adm;
  std::vector<Pt> Y;
  bool y_known = adm.complete();
  if (y_known) {
    Y = adm.confirmed_steps();
    const OriginInHull yhull = origin_in_hull(Y);
    if (!yhull.inside) {
      r.fpp = r.bpp = TriBool::Yes;
      r.fpp_rationale = r.bpp_rationale =
          "the admissible steps stay strictly inside a half-plane, so walk "
          "lengths to any target are bounded";
    } else {
      r.fpp = r.bpp = TriBool::No;
      r.fpp_refutation = yhull.certificate;
      r.fpp_rationale = r.bpp_rationale =
          "a positive combination of admissible steps returns to O, which "
          "defeats both finiteness properties";
    }
  } else {
    r.fpp = r.bpp = TriBool::Unknown;
    std::ostringstream os;
    os << "admissible steps undetermined within " << opts.bound << " layers";
    r.fpp_rationale = r.bpp_rationale = os.str();
  }

  // Infinite-count verdict: a nonempty closed walk at O settles Yes (its
  // powers pump every reachable target through the region's closure); a
  // half-plane witness over X or over the admissible subset settles No, as
  // does the absence of any step landing on O from inside the region.
  if (auto cycle = find_closed_walk(steps, C, opts.cycle_length, kOrigin, opts.limits)) {
    r.ipp = TriBool::Yes;
    r.ipp_cycle = std::move(cycle);
    r.ipp_rationale = "nonempty closed walk at O inside the region";
  } else if (r.lc.holds) {
    r.ipp = TriBool::No;
    r.ipp_rationale = "half-plane witness: no nonempty walk returns to O";
  } else if (!origin_has_incoming_step(steps, C)) {
    r.ipp = TriBool::No;
    r.ipp_rationale = "no step can land on O from inside the region";
  } else if (y_known && check_LC(Y).holds) {
    r.ipp = TriBool::No;
    r.ipp_rationale =
        "half-plane witness over the admissible steps: no return to O";
  } else {
    r.ipp = TriBool::Unknown;
    std::ostringstream os;
    os << "no closed walk found within length " << opts.cycle_length
       << " and no structural refutation";
    r.ipp_rationale = os.str();
  }

  if (r.fpp != TriBool::Unknown && r.ipp != TriBool::Unknown)
    r.combination =
        combination_from_flags(r.cc.holds, r.slc.holds, r.lc.holds,
                               r.fpp == TriBool::Yes, r.bpp == TriBool::Yes,
                               r.ipp == TriBool::Yes);
  audit_hierarchy(r);
  return r;
}

UnitsGroupReport constrained_units_and_group(const std::vector<Pt>& X,
                                             const Constraint& C,
                                             const ConstrainedOptions& opts) {
  const std::vector<Pt> steps = normalized_steps(X);
  require_submonoid_region(C);
  UnitsGroupReport out;
  out.bound_used = opts.bound;

  const ReachResult reach = constrained_reach(steps, C, opts.bound);
  std::vector<Pt> reached;
  reached.reserve(reach.parent.size());
  for (const auto& [p, unused] : reach.parent)
    if (!p.is_origin()) reached.push_back(p);

  // Antipodal reachable pair = unit certificate (their walks concatenate to
  // a closed walk at O).
  for (Pt p : reached) {
    if (!(p < -p)) continue;  // visit each pair once
    if (!reach.parent.contains(-p)) continue;
    out.units = TriBool::Yes;
    out.units_witness = {walk_to(reach.parent, p), walk_to(reach.parent, -p)};
    break;
  }

  // A dead frontier means the map holds the entire endpoint monoid, so both
  // questions are decidable by inspection.
  if (reach.complete) {
    if (out.units != TriBool::Yes) {
      out.units = TriBool::No;
      out.rationale = "the reachable set was fully explored; no antipodal pair";
    }
    bool symmetric = true;
    for (Pt p : reached)
      if (!reach.parent.contains(-p)) {
        symmetric = false;
        break;
      }
    out.group = symmetric ? TriBool::Yes : TriBool::No;
    if (reached.empty())
      out.rationale += "; the endpoint monoid is {O}";
    return out;
  }

  std::optional<std::vector<Pt>> Y;  // complete admissible set, when known
  if (out.units != TriBool::Yes) {
    if (C.is_full_plane()) {
      out.units = origin_in_hull(steps).inside ? TriBool::Yes : TriBool::No;
      out.rationale = "unconstrained: units exist exactly when O lies in the "
                      "hull of the steps";
    } else if (C.trivial_intersection_with_negation()) {
      out.units = TriBool::No;
      out.rationale = "the region meets its negation only at O";
    } else if (check_LC(steps).holds) {
      out.units = TriBool::No;
      out.rationale = "half-plane witness forbids antipodal endpoints";
    } else {
      const AdmissibleReport adm =
          admissible_steps(steps, C, opts.bound, {}, opts.limits);
      if (adm.complete()) {
        Y = adm.confirmed_steps();
        if (Y->empty() || check_LC(*Y).holds) {
          out.units = TriBool::No;
          out.rationale =
              "the admissible steps stay strictly inside a half-plane";
        }
      }
      if (out.units != TriBool::No) {
        out.units = TriBool::Unknown;
        out.rationale = "no antipodal pair within the truncation and no "
                        "structural refutation";
      }
    }
  }

  // Group verdict.  Yes answers must be monotone: they may only rely on
  // facts that survive enlarging the truncated reachable set.
  if (C.is_full_plane()) {
    out.group = group_structure(steps) != GroupIso::NotGroup ? TriBool::Yes
                                                             : TriBool::No;
    return out;
  }
  if (out.units == TriBool::No) {
    if (!reached.empty()) {
      out.group = TriBool::No;  // a non-unit nonzero element exists
      return out;
    }
    if (Y && Y->empty()) {
      out.group = TriBool::Yes;  // provably the trivial monoid {O}
      out.rationale += "; no step is admissible, so the endpoint monoid is {O}";
      return out;
    }
    out.group = TriBool::Unknown;
    return out;
  }

  if (!origin_in_relative_interior(reached)) {
    out.group = TriBool::Unknown;  // a deeper truncation could widen the hull
    return out;
  }
  const HullResult hull = convex_hull(reached);
  if (hull.kind == HullKind::Polygon) {
    out.group = TriBool::Yes;  // O strictly inside: monotone under growth
    return out;
  }
  // Collinear truncation with O in the open segment: monotone only when the
  // whole reachable set provably stays on that line.
  Pt dir{0, 0};
  const bool on_line = collinear_through_origin(reached, &dir);
  const auto line_dir = C.restricted_to_line();
  const bool region_line = line_dir && on_line && cross(*line_dir, dir) == 0;
  const bool steps_line = [&] {
    Pt sd{0, 0};
    return collinear_through_origin(steps, &sd) && on_line && cross(sd, dir) == 0;
  }();
  if (region_line || steps_line) {
    out.group = TriBool::Yes;
    return out;
  }
  out.group = TriBool::Unknown;
  return out;
}

bool vertical_slice_guard(const std::vector<Pt>& steps) {
  for (Pt a : steps) {
    if (a.x < 0) return false;
    if (a.x == 0 && a.y > 0) return false;
  }
  return true;
}

}  // namespace latwalk
