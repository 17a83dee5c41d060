// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/enumeration.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "latwalk/errors.hpp"
#include "latwalk/geometry.hpp"

namespace latwalk {
namespace {

constexpr long long kMaxWalkMaterialize = 1'000'000;
constexpr long long kMaxGraphCells = 4'000'000;

struct BudgetMeter {
  unsigned long long left;

  void spend(unsigned long long n) {
    if (n > left) throw BudgetError("enumeration work budget exceeded");
    left -= n;
  }
};

std::vector<Pt> normalized_steps(const std::vector<Pt>& X) {
  std::vector<Pt> steps = X;
  for (Pt a : steps)
    if (a.is_origin()) throw ValidationError("step set contains the origin");
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

long long checked_count(const BigInt& v, const char* what) {
  if (v < 0 || v > kMaxWalkMaterialize)
    throw BudgetError(std::string(what) + " too large to materialize as a walk");
  return static_cast<long long>(v);
}

void append_repeated(Walk& w, Pt step, long long times) {
  if (times > kMaxWalkMaterialize)
    throw BudgetError("walk materialization exceeds the repetition cap");
  for (long long i = 0; i < times; ++i) w.push_back(step);
}

// --- layered exact sweep under a strict half-plane witness ------------------
//
// Every step satisfies u . A >= 1, so a walk to any position P has length at
// most u . P; positions beyond `ubound` can never return.  Returns total walk
// counts per reachable position with u . P <= ubound.
std::unordered_map<Pt, BigInt, PtHash> lc_exact_counts(const std::vector<Pt>& steps,
                                                       const Constraint& C, Pt u,
                                                       Wide ubound, BudgetMeter& meter) {
  std::unordered_map<Pt, BigInt, PtHash> total;
  if (ubound < 0) return total;
  std::unordered_map<Pt, BigInt, PtHash> cur;
  cur[kOrigin] = 1;
  total[kOrigin] = 1;
  while (!cur.empty()) {
    std::unordered_map<Pt, BigInt, PtHash> next;
    for (const auto& [p, n] : cur) {
      meter.spend(steps.size());
      for (Pt b : steps) {
        const Pt q = p + b;
        if (dot(u, q) > ubound) continue;
        if (!C.contains(q)) continue;
        next[q] += n;
      }
    }
    for (const auto& [q, n] : next) total[q] += n;
    cur.swap(next);
  }
  return total;
}

// --- collinear step sets -----------------------------------------------------

struct CollinearInfo {
  bool collinear = false;
  Pt dir{0, 0};  // primitive direction
  std::vector<std::pair<long long, Pt>> multiples;  // (m, step) with step = m*dir
  long long g = 0;  // gcd of |m|
  bool both_signs = false;
};

long long component_along(Pt p, Pt dir) {
  return dir.x != 0 ? p.x / dir.x : p.y / dir.y;
}

CollinearInfo collinear_info(const std::vector<Pt>& steps) {
  CollinearInfo info;
  if (steps.empty()) return info;
  info.dir = primitive(steps.front());
  bool pos = false, neg = false;
  for (Pt a : steps) {
    if (cross(info.dir, a) != 0) return info;
    const long long m = component_along(a, info.dir);
    info.multiples.emplace_back(m, a);
    info.g = std::gcd(info.g, m < 0 ? -m : m);
    (m > 0 ? pos : neg) = true;
  }
  info.collinear = true;
  info.both_signs = pos && neg;
  return info;
}

// Shortest walk over collinear steps from O to t*dir; exists whenever both
// signs are present and g divides t.
Walk line_walk(const CollinearInfo& info, long long t_target, BudgetMeter& meter) {
  if (t_target == 0) return {};
  std::unordered_map<long long, std::pair<long long, Pt>> parent;
  std::deque<long long> queue;
  parent.emplace(0, std::make_pair(0, kOrigin));
  queue.push_back(0);
  while (!queue.empty()) {
    const long long t = queue.front();
    queue.pop_front();
    meter.spend(info.multiples.size());
    for (const auto& [m, step] : info.multiples) {
      const long long nt = t + m;
      if (parent.contains(nt)) continue;
      parent.emplace(nt, std::make_pair(t, step));
      if (nt == t_target) {
        Walk w;
        for (long long c = nt; c != 0;) {
          const auto& [prev, s] = parent.at(c);
          w.push_back(s);
          c = prev;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(nt);
    }
  }
  throw std::logic_error("line walk vanished despite divisibility certificate");
}

// Nonempty closed walk at O over collinear both-sign steps: take one positive
// and one negative multiple and pair them up.
Walk line_cycle(const CollinearInfo& info) {
  std::optional<std::pair<long long, Pt>> pos, neg;
  for (const auto& entry : info.multiples) {
    if (entry.first > 0 && !pos) pos = entry;
    if (entry.first < 0 && !neg) neg = entry;
  }
  LATWALK_CHECK(pos && neg, "closed line walk needs multiples of both signs");
  Walk w;
  append_repeated(w, pos->second, -neg->first);
  append_repeated(w, neg->second, pos->first);
  LATWALK_CHECK(walk_endpoint(w).is_origin(), "line cycle fails to close");
  return w;
}

// Closed walk at O materialized from an origin-in-hull certificate.
Walk certificate_cycle(const HullCertificate& cert) {
  LATWALK_CHECK(cert.replay(), "hull certificate fails replay");
  Walk w;
  for (std::size_t i = 0; i < cert.points.size(); ++i)
    append_repeated(w, cert.points[i],
                    checked_count(cert.coeffs[i], "hull certificate coefficient"));
  LATWALK_CHECK(walk_endpoint(w).is_origin(), "certificate cycle fails to close");
  return w;
}

// Unconstrained breadth-first walk search; the caller guarantees the target
// is reachable, the meter guards against runaway searches.
Walk bfs_walk(const std::vector<Pt>& steps, Pt target, BudgetMeter& meter) {
  if (target.is_origin()) return {};
  std::unordered_map<Pt, std::pair<Pt, Pt>, PtHash> parent;  // pos -> (prev, step)
  std::deque<Pt> queue;
  parent.emplace(kOrigin, std::make_pair(kOrigin, kOrigin));
  queue.push_back(kOrigin);
  while (!queue.empty()) {
    const Pt p = queue.front();
    queue.pop_front();
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt q = p + b;
      if (parent.contains(q)) continue;
      parent.emplace(q, std::make_pair(p, b));
      if (q == target) {
        Walk w;
        for (Pt c = q; !c.is_origin();) {
          const auto& [prev, s] = parent.at(c);
          w.push_back(s);
          c = prev;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(q);
    }
  }
  throw std::logic_error("walk search exhausted despite a reachability certificate");
}

// --- no-line-condition, unconstrained ---------------------------------------

CountOutcome unconstrained_no_lc(const std::vector<Pt>& steps, Pt target,
                                 BudgetMeter& meter) {
  const CollinearInfo col = collinear_info(steps);
  if (col.collinear) {
    LATWALK_CHECK(col.both_signs,
                  "steps on a line without the line condition must span both signs");
    if (cross(target, col.dir) != 0) return {WalkCount::exact(0), {}};
    const long long t = component_along(target, col.dir);
    if (col.g == 0 || t % col.g != 0) return {WalkCount::exact(0), {}};
    InfiniteEvidence ev{{}, line_cycle(col), line_walk(col, t, meter)};
    return {WalkCount::infinite(), std::move(ev)};
  }

  const OriginInHull oih = origin_in_hull(steps);
  LATWALK_CHECK(oih.inside,
                "a finite set failing the line condition must capture O in its hull");
  const Walk cycle = certificate_cycle(*oih.certificate);

  if (origin_in_relative_interior(steps)) {
    // The reachable set is the full sublattice generated by the steps.
    if (!lattice_basis(steps).member(target)) return {WalkCount::exact(0), {}};
    InfiniteEvidence ev{{}, cycle, bfs_walk(steps, target, meter)};
    return {WalkCount::infinite(), std::move(ev)};
  }

  // O sits on the hull boundary: X lies weakly on one side of a line through
  // O that carries steps of both signs; off-line steps advance u permanently.
  const ConditionResult wlc = check_WLC(steps);
  LATWALK_CHECK(wlc.holds, "hull-boundary case must admit a weak line witness");
  const Pt u = wlc.witness->u;
  std::vector<Pt> on_line, off_line;
  for (Pt a : steps) (dot(u, a) == 0 ? on_line : off_line).push_back(a);
  const CollinearInfo line = collinear_info(on_line);
  LATWALK_CHECK(line.collinear && line.both_signs,
                "the boundary line must carry steps of both signs");

  const Wide lam = dot(u, target);
  if (lam < 0) return {WalkCount::exact(0), {}};
  if (lam == 0) {
    if (cross(target, line.dir) != 0) return {WalkCount::exact(0), {}};
    const long long t = component_along(target, line.dir);
    if (t != 0 && (line.g == 0 || t % line.g != 0)) return {WalkCount::exact(0), {}};
    InfiniteEvidence ev{{}, line_cycle(line), line_walk(line, t, meter)};
    return {WalkCount::infinite(), std::move(ev)};
  }

  // Enumerate every off-line partial sum S with u . S == u . target; the
  // on-line remainder must then be a lattice multiple on the boundary line.
  std::unordered_map<Pt, std::pair<Pt, Pt>, PtHash> parent;
  parent.emplace(kOrigin, std::make_pair(kOrigin, kOrigin));
  std::vector<Pt> frontier{kOrigin};
  std::vector<Pt> full_layer_hits;
  while (!frontier.empty()) {
    std::vector<Pt> next;
    for (Pt p : frontier) {
      meter.spend(off_line.size());
      for (Pt b : off_line) {
        const Pt q = p + b;
        if (dot(u, q) > lam || parent.contains(q)) continue;
        parent.emplace(q, std::make_pair(p, b));
        if (dot(u, q) == lam)
          full_layer_hits.push_back(q);
        else
          next.push_back(q);
      }
    }
    frontier.swap(next);
  }
  std::sort(full_layer_hits.begin(), full_layer_hits.end());
  for (Pt s : full_layer_hits) {
    const Pt rem = target - s;
    if (cross(rem, line.dir) != 0) continue;
    const long long t = component_along(rem, line.dir);
    if (t != 0 && (line.g == 0 || t % line.g != 0)) continue;
    Walk suffix;
    for (Pt c = s; !c.is_origin();) {
      const auto& [prev, st] = parent.at(c);
      suffix.push_back(st);
      c = prev;
    }
    std::reverse(suffix.begin(), suffix.end());
    const Walk tail = line_walk(line, t, meter);
    suffix.insert(suffix.end(), tail.begin(), tail.end());
    InfiniteEvidence ev{{}, line_cycle(line), std::move(suffix)};
    return {WalkCount::infinite(), std::move(ev)};
  }
  return {WalkCount::exact(0), {}};
}

// --- constrained window graph ------------------------------------------------

struct WindowGraph {
  Window box;                              // the inflated search region
  std::map<Pt, std::pair<Pt, Pt>> parent;  // reachable point -> (prev, step)
  std::set<Pt> infinite;                   // reachable from a cycle vertex
  bool escape = false;                     // some reachable point exits the box
};

Window inflate(const Window& w, long long pad) {
  return {w.xmin - pad, w.xmax + pad, w.ymin - pad, w.ymax + pad};
}

long long max_step_magnitude(const std::vector<Pt>& steps) {
  std::int64_t m = 1;
  for (Pt a : steps) {
    m = std::max(m, a.x < 0 ? -a.x : a.x);
    m = std::max(m, a.y < 0 ? -a.y : a.y);
  }
  return m;
}

Walk path_from_parents(const std::map<Pt, std::pair<Pt, Pt>>& parent, Pt to) {
  Walk w;
  for (Pt c = to; !(parent.at(c).first == c);) {
    const auto& [prev, s] = parent.at(c);
    w.push_back(s);
    c = prev;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// Reachability graph of (X,C)-walks inside an inflated box, with cycle
// detection (strongly connected components) and infinite-count marking.
WindowGraph build_window_graph(const std::vector<Pt>& steps, const Constraint& C,
                               const Window& hull_box, BudgetMeter& meter) {
  WindowGraph g;
  const long long pad = 2 * max_step_magnitude(steps) + 2;
  Window box = inflate(hull_box, pad);
  box.xmin = std::min(box.xmin, static_cast<std::int64_t>(0));
  box.ymin = std::min(box.ymin, static_cast<std::int64_t>(0));
  box.xmax = std::max(box.xmax, static_cast<std::int64_t>(0));
  box.ymax = std::max(box.ymax, static_cast<std::int64_t>(0));
  g.box = box;
  const Wide cells =
      static_cast<Wide>(box.xmax - box.xmin + 1) * (box.ymax - box.ymin + 1);
  if (cells > kMaxGraphCells)
    throw BudgetError("constrained search region too large");

  // Forward reachability from O within the box.
  g.parent.emplace(kOrigin, std::make_pair(kOrigin, kOrigin));
  std::deque<Pt> queue{kOrigin};
  while (!queue.empty()) {
    const Pt p = queue.front();
    queue.pop_front();
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt q = p + b;
      if (!C.contains(q)) continue;
      if (!g.box.contains(q)) {
        g.escape = true;
        continue;
      }
      if (g.parent.contains(q)) continue;
      g.parent.emplace(q, std::make_pair(p, b));
      queue.push_back(q);
    }
  }

  // Iterative Tarjan over the reachable subgraph; vertices inside a
  // nontrivial strongly connected component lie on constrained cycles.
  std::map<Pt, int> index, low;
  std::vector<Pt> stack;
  std::set<Pt> on_stack;
  std::set<Pt> cycle_vertices;
  int counter = 0;
  struct Frame {
    Pt v;
    std::size_t next_step = 0;
  };
  for (const auto& [root, unused] : g.parent) {
    if (index.contains(root)) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack.insert(root);
    while (!call.empty()) {
      Frame& f = call.back();
      bool descended = false;
      while (f.next_step < steps.size()) {
        const Pt w = f.v + steps[f.next_step];
        ++f.next_step;
        if (!g.parent.contains(w)) continue;  // not reachable / outside box
        if (!index.contains(w)) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack.insert(w);
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack.contains(w)) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      // finished f.v
      if (low[f.v] == index[f.v]) {
        std::vector<Pt> comp;
        for (;;) {
          const Pt w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          comp.push_back(w);
          if (w == f.v) break;
        }
        if (comp.size() > 1)
          for (Pt w : comp) cycle_vertices.insert(w);
      }
      const Pt finished = f.v;
      call.pop_back();
      if (!call.empty())
        low[call.back().v] = std::min(low[call.back().v], low[finished]);
    }
  }

  // Everything reachable from a cycle vertex has infinitely many walks.
  std::deque<Pt> mark(cycle_vertices.begin(), cycle_vertices.end());
  g.infinite.insert(cycle_vertices.begin(), cycle_vertices.end());
  while (!mark.empty()) {
    const Pt p = mark.front();
    mark.pop_front();
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt q = p + b;
      if (!g.parent.contains(q) || g.infinite.contains(q)) continue;
      g.infinite.insert(q);
      mark.push_back(q);
    }
  }
  return g;
}

// Extracts a pumping certificate for `target` from a window graph: a path
// O -> base, a cycle at base, and a path base -> target.
std::optional<InfiniteEvidence> evidence_for(const WindowGraph& g,
                                             const std::vector<Pt>& steps,
                                             const Constraint& C, Pt target,
                                             BudgetMeter& meter) {
  if (!g.infinite.contains(target)) return std::nullopt;
  // Backward search from target (within the graph) to the nearest vertex that
  // lies on a cycle; then close the cycle by a forward search from that base.
  std::map<Pt, std::pair<Pt, Pt>> back;  // vertex -> (next vertex, step taken)
  std::deque<Pt> queue{target};
  back.emplace(target, std::make_pair(target, kOrigin));
  std::optional<Pt> base;
  const auto on_cycle = [&](Pt v) {
    // v lies on a cycle iff a nonempty path v -> v exists in the graph.
    std::set<Pt> seen;
    std::deque<Pt> q2;
    meter.spend(1);
    for (Pt b : steps) {
      const Pt w = v + b;
      if (g.parent.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        q2.push_back(w);
      }
    }
    while (!q2.empty()) {
      const Pt p = q2.front();
      q2.pop_front();
      if (p == v) return true;
      meter.spend(steps.size());
      for (Pt b : steps) {
        const Pt w = p + b;
        if (!g.parent.contains(w) || seen.contains(w)) continue;
        if (w == v) return true;
        seen.insert(w);
        q2.push_back(w);
      }
    }
    return false;
  };
  while (!queue.empty() && !base) {
    const Pt v = queue.front();
    queue.pop_front();
    if (on_cycle(v)) {
      base = v;
      break;
    }
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt p = v - b;
      if (!g.parent.contains(p) || back.contains(p)) continue;
      // edge p -> v must exist in the constrained graph
      back.emplace(p, std::make_pair(v, b));
      queue.push_back(p);
    }
  }
  if (!base) return std::nullopt;

  // Cycle at base: shortest nonempty return.
  std::map<Pt, std::pair<Pt, Pt>> cyc_parent;
  std::deque<Pt> q3;
  std::optional<Pt> last_before_base;
  Pt closing_step = kOrigin;
  meter.spend(steps.size());
  for (Pt b : steps) {
    const Pt w = *base + b;
    if (!g.parent.contains(w)) continue;
    if (w == *base) continue;  // impossible: steps are nonzero
    if (!cyc_parent.contains(w)) {
      cyc_parent.emplace(w, std::make_pair(w, b));  // root markers
      q3.push_back(w);
    }
  }
  Walk cycle;
  bool found = false;
  while (!q3.empty() && !found) {
    const Pt p = q3.front();
    q3.pop_front();
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt w = p + b;
      if (w == *base) {
        last_before_base = p;
        closing_step = b;
        found = true;
        break;
      }
      if (!g.parent.contains(w) || cyc_parent.contains(w)) continue;
      cyc_parent.emplace(w, std::make_pair(p, b));
      q3.push_back(w);
    }
  }
  LATWALK_CHECK(found, "cycle vertex lost its cycle during extraction");
  {
    Walk rev;
    Pt c = *last_before_base;
    for (;;) {
      const auto& [prev, s] = cyc_parent.at(c);
      rev.push_back(s);
      if (prev == c) break;  // root marker: first step away from base
      c = prev;
    }
    std::reverse(rev.begin(), rev.end());
    cycle = std::move(rev);
    cycle.push_back(closing_step);
  }

  Walk suffix;
  for (Pt c = *base; c != target;) {
    const auto& [next, s] = back.at(c);
    suffix.push_back(s);
    c = next;
  }
  InfiniteEvidence ev{path_from_parents(g.parent, *base), std::move(cycle),
                      std::move(suffix)};
  LATWALK_CHECK(ev.replay(steps, C, target), "pumping certificate fails replay");
  return ev;
}

// Exact counts over an escape-free window graph: outside-cycle vertices form
// a directed acyclic graph, processed in topological order.
std::map<Pt, BigInt> dag_counts(const WindowGraph& g, const std::vector<Pt>& steps,
                                BudgetMeter& meter) {
  std::map<Pt, int> indegree;
  for (const auto& [v, unused] : g.parent) {
    if (g.infinite.contains(v)) continue;
    indegree.try_emplace(v, 0);
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt w = v + b;
      if (!g.parent.contains(w) || g.infinite.contains(w)) continue;
      ++indegree[w];
    }
  }
  std::map<Pt, BigInt> counts;
  std::deque<Pt> queue;
  for (const auto& [v, deg] : indegree)
    if (deg == 0) queue.push_back(v);
  if (indegree.contains(kOrigin)) counts[kOrigin] = 1;
  while (!queue.empty()) {
    const Pt v = queue.front();
    queue.pop_front();
    const BigInt n = counts.contains(v) ? counts.at(v) : BigInt(0);
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt w = v + b;
      if (!g.parent.contains(w) || g.infinite.contains(w)) continue;
      counts[w] += n;
      if (--indegree[w] == 0) queue.push_back(w);
    }
  }
  return counts;
}

// Unclipped length-layered counting under a constraint.  Returns per-position
// totals for walks of length <= L plus whether the frontier died before L.
struct BoundedSweep {
  std::unordered_map<Pt, BigInt, PtHash> totals;
  bool frontier_died = false;
  long long length_used = 0;
};

BoundedSweep bounded_sweep(const std::vector<Pt>& steps, const Constraint& C,
                           long long L, BudgetMeter& meter) {
  BoundedSweep out;
  std::unordered_map<Pt, BigInt, PtHash> cur;
  cur[kOrigin] = 1;
  out.totals[kOrigin] = 1;
  for (long long len = 1; len <= L; ++len) {
    std::unordered_map<Pt, BigInt, PtHash> next;
    for (const auto& [p, n] : cur) {
      meter.spend(steps.size());
      for (Pt b : steps) {
        const Pt q = p + b;
        if (!C.contains(q)) continue;
        next[q] += n;
      }
    }
    if (next.empty()) {
      out.frontier_died = true;
      out.length_used = len - 1;
      return out;
    }
    for (const auto& [q, n] : next) out.totals[q] += n;
    cur.swap(next);
  }
  out.length_used = L;
  return out;
}

Window bounding_box(std::initializer_list<Pt> pts) {
  Window w{0, 0, 0, 0};
  bool first = true;
  for (Pt p : pts) {
    if (first) {
      w = {p.x, p.x, p.y, p.y};
      first = false;
    } else {
      w.xmin = std::min(w.xmin, p.x);
      w.xmax = std::max(w.xmax, p.x);
      w.ymin = std::min(w.ymin, p.y);
      w.ymax = std::max(w.ymax, p.y);
    }
  }
  return w;
}

std::string steps_brief(const std::vector<Pt>& steps) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) os << ", ";
    if (i == 8 && steps.size() > 9) {
      os << "... " << steps.size() << " steps";
      break;
    }
    os << to_string(steps[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

std::string WalkCount::str() const {
  switch (kind) {
    case CountKind::Exact: return value.str();
    case CountKind::Infinite: return "inf";
    case CountKind::AtLeast: return ">=" + value.str();
  }
  throw std::logic_error("unmapped count kind");
}

bool InfiniteEvidence::replay(const std::vector<Pt>& X, const Constraint& C,
                              Pt target) const {
  const std::vector<Pt> steps = normalized_steps(X);
  const auto in_x = [&](Pt s) {
    return std::binary_search(steps.begin(), steps.end(), s);
  };
  for (Pt s : prefix)
    if (!in_x(s)) return false;
  for (Pt s : cycle)
    if (!in_x(s)) return false;
  for (Pt s : suffix)
    if (!in_x(s)) return false;
  if (cycle.empty() || !walk_endpoint(cycle).is_origin()) return false;
  Walk once = prefix;
  once.insert(once.end(), suffix.begin(), suffix.end());
  Walk pumped = prefix;
  pumped.insert(pumped.end(), cycle.begin(), cycle.end());
  pumped.insert(pumped.end(), suffix.begin(), suffix.end());
  return walk_is_constrained(once, C) && walk_endpoint(once) == target &&
         walk_is_constrained(pumped, C) && walk_endpoint(pumped) == target;
}

std::vector<Pt> AdmissibleReport::confirmed_steps() const {
  std::vector<Pt> v;
  v.reserve(confirmed.size());
  for (const auto& a : confirmed) v.push_back(a.step);
  std::sort(v.begin(), v.end());
  return v;
}

Walk closed_walk_from_certificate(const HullCertificate& cert) {
  return certificate_cycle(cert);
}

bool origin_has_incoming_step(const std::vector<Pt>& X, const Constraint& C) {
  for (Pt b : X)
    if (!b.is_origin() && C.contains(-b)) return true;
  return false;
}

bool LatticeBasis::member(Pt p) const {
  if (v1.x == 0) {
    if (p.x != 0) return false;
    if (v2.y == 0) return p.y == 0;
    return p.y % v2.y == 0;
  }
  if (p.x % v1.x != 0) return false;
  const long long k = p.x / v1.x;
  const long long r = p.y - k * v1.y;
  if (v2.y == 0) return r == 0;
  return r % v2.y == 0;
}

LatticeBasis lattice_basis(const std::vector<Pt>& X) {
  LatticeBasis basis;
  std::int64_t ygcd = 0;
  Pt v1{0, 0};
  const auto extgcd = [](std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    return std::array<std::int64_t, 3>{old_r, old_s, old_t};
  };
  for (Pt w : X) {
    if (w.is_origin()) continue;
    if (w.x == 0) {
      ygcd = std::gcd(ygcd, w.y < 0 ? -w.y : w.y);
      continue;
    }
    if (v1.x == 0) {
      v1 = w.x < 0 ? -w : w;
      continue;
    }
    const auto [gg, s, t] = extgcd(v1.x, w.x);
    const Pt nv{gg, s * v1.y + t * w.y};
    const Pt r1 = v1 - (v1.x / gg) * nv;
    const Pt r2 = w - (w.x / gg) * nv;
    LATWALK_CHECK(r1.x == 0 && r2.x == 0, "lattice reduction pivot");
    ygcd = std::gcd(ygcd, r1.y < 0 ? -r1.y : r1.y);
    ygcd = std::gcd(ygcd, r2.y < 0 ? -r2.y : r2.y);
    v1 = nv.x < 0 ? -nv : nv;
  }
  if (v1.x != 0 && ygcd != 0) {
    // Canonical form: 0 <= v1.y < ygcd.
    std::int64_t ry = v1.y % ygcd;
    if (ry < 0) ry += ygcd;
    v1.y = ry;
  }
  basis.v1 = v1;
  basis.v2 = Pt{0, ygcd};
  return basis;
}

// ---------------------------------------------------------------------------

AdmissibleReport admissible_steps(const std::vector<Pt>& X, const Constraint& C,
                                  long long bound,
                                  std::optional<std::pair<Pt, Pt>> cone,
                                  const EnumLimits& limits) {
  const std::vector<Pt> steps = normalized_steps(X);
  BudgetMeter meter{limits.budget};
  AdmissibleReport report;
  if (steps.empty()) return report;
  if (bound < 0) throw ValidationError("admissible-step bound must be nonnegative");

  if (!cone) cone = C.inner_cone();
  const bool cone_ok =
      cone && C.asserts_submonoid() && C.cone_inside(cone->first, cone->second);

  // Breadth-first search over constrained-reachable points, layer by layer.
  std::map<Pt, std::pair<Pt, Pt>> parent;
  parent.emplace(kOrigin, std::make_pair(kOrigin, kOrigin));
  std::vector<Pt> frontier{kOrigin};
  std::set<Pt> unconfirmed(steps.begin(), steps.end());
  std::map<Pt, Walk> witnesses;
  std::optional<Pt> cone_point;

  const auto inspect = [&](Pt p) {
    if (cone_ok && !cone_point && dot(cone->first, p) > 0 && dot(cone->second, p) > 0)
      cone_point = p;
    for (auto it = unconfirmed.begin(); it != unconfirmed.end();) {
      if (C.contains(p + *it)) {
        witnesses.emplace(*it, path_from_parents(parent, p));
        it = unconfirmed.erase(it);
      } else {
        ++it;
      }
    }
  };

  inspect(kOrigin);
  for (long long depth = 1; depth <= bound; ++depth) {
    if (unconfirmed.empty() && (!cone_ok || cone_point)) break;
    std::vector<Pt> next;
    for (Pt p : frontier) {
      meter.spend(steps.size());
      for (Pt b : steps) {
        const Pt q = p + b;
        if (!C.contains(q) || parent.contains(q)) continue;
        parent.emplace(q, std::make_pair(p, b));
        next.push_back(q);
        inspect(q);
      }
    }
    frontier.swap(next);
    if (frontier.empty()) break;
  }

  if (cone_ok && cone_point) {
    // Every step is admissible: repeating the walk to the cone point drags
    // any single step back inside the cone, whose lattice points lie in C.
    report.all_confirmed_via_cone = true;
    report.cone = cone;
    const Walk to_cone = path_from_parents(parent, *cone_point);
    report.cone_point_witness = to_cone;
    const Pt P = *cone_point;
    for (Pt a : steps) {
      long long reps = 1;
      for (Pt u : {cone->first, cone->second}) {
        const Wide da = dot(u, a);
        if (da > 0) continue;
        const Wide dp = dot(u, P);
        const Wide need = (-da) / dp + 1;
        reps = std::max<long long>(reps, static_cast<long long>(need));
      }
      Walk w;
      for (long long i = 0; i < reps; ++i) w.insert(w.end(), to_cone.begin(), to_cone.end());
      LATWALK_CHECK(C.contains(reps * P + a), "cone absorption misses the region");
      LATWALK_CHECK(walk_is_constrained(w, C), "cone witness walk leaves the region");
      report.confirmed.push_back({a, std::move(w)});
    }
    return report;
  }

  for (Pt a : steps) {
    if (const auto it = witnesses.find(a); it != witnesses.end())
      report.confirmed.push_back({a, it->second});
    else if (!C.step_can_ever_enter(a))
      report.refuted.push_back(a);
    else
      report.undetermined.push_back(a);
  }
  return report;
}

std::optional<Walk> find_closed_walk(const std::vector<Pt>& X, const Constraint& C,
                                     long long L, Pt base, const EnumLimits& limits) {
  const std::vector<Pt> steps = normalized_steps(X);
  BudgetMeter meter{limits.budget};
  if (steps.empty() || L <= 0 || !C.contains(base)) return std::nullopt;
  std::unordered_map<Pt, std::pair<Pt, Pt>, PtHash> parent;
  std::unordered_map<Pt, long long, PtHash> depth;
  std::deque<Pt> queue{base};
  parent.emplace(base, std::make_pair(base, kOrigin));
  depth.emplace(base, 0);
  while (!queue.empty()) {
    const Pt p = queue.front();
    queue.pop_front();
    const long long d = depth.at(p);
    if (d + 1 > L) break;
    meter.spend(steps.size());
    for (Pt b : steps) {
      const Pt q = p + b;
      if (!C.contains(q)) continue;
      if (q == base) {
        Walk w;
        for (Pt c = p; c != base;) {
          const auto& [prev, s] = parent.at(c);
          w.push_back(s);
          c = prev;
        }
        std::reverse(w.begin(), w.end());
        w.push_back(b);
        return w;
      }
      if (parent.contains(q)) continue;
      parent.emplace(q, std::make_pair(p, b));
      depth.emplace(q, d + 1);
      queue.push_back(q);
    }
  }
  return std::nullopt;
}

BigInt naive_count(const std::vector<Pt>& X, Pt target, const Constraint& C,
                   long long L, unsigned long long budget) {
  const std::vector<Pt> steps = normalized_steps(X);
  if (L < 0) throw ValidationError("length cap must be nonnegative");
  BigInt words = 1, layer = 1;
  for (long long i = 1; i <= L; ++i) {
    layer *= static_cast<long long>(steps.size());
    words += layer;
    if (words > budget) throw BudgetError("naive enumeration exceeds the work budget");
  }
  BigInt count = 0;
  // Depth-first over words; a violated prefix prunes the whole subtree, which
  // cannot change the count (every extension shares the violating prefix).
  struct Rec {
    const std::vector<Pt>& steps;
    const Constraint& C;
    Pt target;
    long long L;
    BigInt& count;
    void operator()(Pt pos, long long len) const {
      if (pos == target) ++count;
      if (len == L) return;
      for (Pt b : steps) {
        const Pt q = pos + b;
        if (!C.contains(q)) continue;
        (*this)(q, len + 1);
      }
    }
  };
  if (C.contains(kOrigin)) Rec{steps, C, target, L, count}(kOrigin, 0);
  return count;
}

CountOutcome count_walks(const std::vector<Pt>& X, Pt target, const Constraint& C,
                         std::optional<long long> max_len, const EnumLimits& limits) {
  const std::vector<Pt> steps = normalized_steps(X);
  BudgetMeter meter{limits.budget};
  if (!C.contains(target)) return {WalkCount::exact(0), {}};

  // Strict half-plane witness: walk lengths to the target are bounded.
  const ConditionResult lc = check_LC(steps);
  if (lc.holds) {
    const Wide ubound = dot(lc.witness->u, target);
    if (ubound < 0) return {WalkCount::exact(0), {}};
    auto totals = lc_exact_counts(steps, C, lc.witness->u, ubound, meter);
    const auto it = totals.find(target);
    return {WalkCount::exact(it == totals.end() ? BigInt(0) : it->second), {}};
  }

  if (C.is_full_plane()) return unconstrained_no_lc(steps, target, meter);

  // Constrained without a line condition on X: refine to the admissible set.
  const AdmissibleReport adm =
      admissible_steps(steps, C, limits.admissible_bound, {}, limits);
  if (adm.complete()) {
    const std::vector<Pt> Y = adm.confirmed_steps();
    const ConditionResult lcY = check_LC(Y);
    if (lcY.holds) {
      const Wide ubound = dot(lcY.witness->u, target);
      if (ubound < 0) return {WalkCount::exact(0), {}};
      auto totals = lc_exact_counts(Y, C, lcY.witness->u, ubound, meter);
      const auto it = totals.find(target);
      return {WalkCount::exact(it == totals.end() ? BigInt(0) : it->second), {}};
    }
  }

  // Window-graph analysis around O and the target.
  try {
    const WindowGraph g =
        build_window_graph(steps, C, bounding_box({kOrigin, target}), meter);
    if (g.infinite.contains(target)) {
      auto ev = evidence_for(g, steps, C, target, meter);
      LATWALK_CHECK(ev.has_value(), "marked vertex must yield a certificate");
      return {WalkCount::infinite(), std::move(ev)};
    }
    if (!g.escape) {
      if (!g.parent.contains(target)) return {WalkCount::exact(0), {}};
      auto counts = dag_counts(g, steps, meter);
      const auto it = counts.find(target);
      return {WalkCount::exact(it == counts.end() ? BigInt(0) : it->second), {}};
    }
  } catch (const BudgetError&) {
    // region too large: fall through to the bounded sweep
  }

  if (target.is_origin() && !origin_has_incoming_step(steps, C))
    return {WalkCount::exact(1), {}};

  if (!max_len)
    throw ValidationError(
        "no termination certificate applies to this constrained count; supply max_len");
  const BoundedSweep sweep = bounded_sweep(steps, C, *max_len, meter);
  const auto it = sweep.totals.find(target);
  const BigInt n = it == sweep.totals.end() ? BigInt(0) : it->second;
  if (sweep.frontier_died) return {WalkCount::exact(n), {}};
  return {WalkCount::at_least(n, *max_len), {}};
}

CountTable count_table(const std::vector<Pt>& X, const Window& window,
                       const Constraint& C, std::optional<long long> max_len,
                       const EnumLimits& limits) {
  const std::vector<Pt> steps = normalized_steps(X);
  if (!window.valid()) throw ValidationError("count window has empty extent");
  BudgetMeter meter{limits.budget};
  CountTable table;
  table.window = window;
  table.stepset_desc = steps_brief(steps);
  table.constraint_desc = C.description();

  const auto keep = [&](Pt p) { return window.contains(p) || p.is_origin(); };

  // Route 1: a strict half-plane witness for X (or for the complete
  // admissible set) makes every window count exact in one sweep.
  std::optional<std::pair<std::vector<Pt>, Pt>> lc_route;
  if (const ConditionResult lc = check_LC(steps); lc.holds) {
    lc_route = {steps, lc.witness->u};
  } else if (!C.is_full_plane()) {
    const AdmissibleReport adm =
        admissible_steps(steps, C, limits.admissible_bound, {}, limits);
    if (adm.complete()) {
      const std::vector<Pt> Y = adm.confirmed_steps();
      if (const ConditionResult lcY = check_LC(Y); lcY.holds)
        lc_route = {Y, lcY.witness->u};
    }
  }
  if (lc_route) {
    const auto& [sweep_steps, u] = *lc_route;
    Wide ubound = 0;
    for (Pt corner : {Pt{window.xmin, window.ymin}, Pt{window.xmin, window.ymax},
                      Pt{window.xmax, window.ymin}, Pt{window.xmax, window.ymax}})
      ubound = std::max(ubound, dot(u, corner));
    auto totals = lc_exact_counts(sweep_steps, C, u, ubound, meter);
    for (const auto& [p, n] : totals)
      if (keep(p)) table.counts.emplace(p, WalkCount::exact(n));
    return table;
  }

  if (C.is_full_plane()) {
    // No line condition: every reachable point has infinitely many walks.
    const CollinearInfo col = collinear_info(steps);
    std::optional<LatticeBasis> basis;
    std::optional<CollinearInfo> line;
    std::optional<Pt> wlc_u;
    std::vector<Pt> off_line;
    std::set<Pt> full_layer;  // off-line sums S with u.S within window levels
    if (!col.collinear) {
      if (origin_in_relative_interior(steps)) {
        basis = lattice_basis(steps);
      } else {
        const ConditionResult wlc = check_WLC(steps);
        LATWALK_CHECK(wlc.holds, "hull-boundary case must admit a weak line witness");
        wlc_u = wlc.witness->u;
        std::vector<Pt> on_line;
        for (Pt a : steps) (dot(*wlc_u, a) == 0 ? on_line : off_line).push_back(a);
        line = collinear_info(on_line);
        LATWALK_CHECK(line->collinear && line->both_signs,
                      "the boundary line must carry steps of both signs");
        Wide lam_max = 0;
        for (Pt corner :
             {Pt{window.xmin, window.ymin}, Pt{window.xmin, window.ymax},
              Pt{window.xmax, window.ymin}, Pt{window.xmax, window.ymax}})
          lam_max = std::max(lam_max, dot(*wlc_u, corner));
        std::set<Pt> seen{kOrigin};
        std::vector<Pt> frontier{kOrigin};
        full_layer.insert(kOrigin);
        while (!frontier.empty()) {
          std::vector<Pt> next;
          for (Pt p : frontier) {
            meter.spend(off_line.size());
            for (Pt b : off_line) {
              const Pt q = p + b;
              if (dot(*wlc_u, q) > lam_max || seen.contains(q)) continue;
              seen.insert(q);
              full_layer.insert(q);
              next.push_back(q);
            }
          }
          frontier.swap(next);
        }
      }
    } else {
      LATWALK_CHECK(col.both_signs,
                    "steps on a line without the line condition must span both signs");
    }
    const auto reachable = [&](Pt p) {
      if (col.collinear) {
        if (cross(p, col.dir) != 0) return false;
        const long long t = component_along(p, col.dir);
        return t == 0 || (col.g != 0 && t % col.g == 0);
      }
      if (basis) return basis->member(p);
      const Wide lam = dot(*wlc_u, p);
      if (lam < 0) return false;
      for (Pt s : full_layer) {
        if (dot(*wlc_u, s) != lam) continue;
        const Pt rem = p - s;
        if (cross(rem, line->dir) != 0) continue;
        const long long t = component_along(rem, line->dir);
        if (t == 0 || (line->g != 0 && t % line->g == 0)) return true;
      }
      return false;
    };
    for (std::int64_t x = window.xmin; x <= window.xmax; ++x)
      for (std::int64_t y = window.ymin; y <= window.ymax; ++y) {
        const Pt p{x, y};
        meter.spend(1);
        if (reachable(p)) table.counts.emplace(p, WalkCount::infinite());
      }
    if (!table.counts.contains(kOrigin))
      table.counts.emplace(kOrigin, WalkCount::infinite());
    const Walk cycle = col.collinear ? line_cycle(col)
                       : line       ? line_cycle(*line)
                                    : certificate_cycle(*origin_in_hull(steps).certificate);
    table.evidence = InfiniteEvidence{{}, cycle, {}};
    LATWALK_CHECK(table.evidence->replay(steps, C, kOrigin),
                  "table pumping certificate fails replay");
    return table;
  }

  // Constrained, no usable line condition: window graph with cycle marking.
  try {
    const WindowGraph g = build_window_graph(steps, C, window, meter);
    for (const auto& p : g.infinite)
      if (keep(p)) table.counts.emplace(p, WalkCount::infinite());
    if (!g.infinite.empty()) {
      const Pt sample = keep(*g.infinite.begin())
                            ? *g.infinite.begin()
                            : table.counts.empty() ? *g.infinite.begin()
                                                   : table.counts.begin()->first;
      table.evidence = evidence_for(g, steps, C, sample, meter);
    }
    if (!g.escape) {
      const auto counts = dag_counts(g, steps, meter);
      for (const auto& [p, n] : counts)
        if (keep(p) && !table.counts.contains(p))
          table.counts.emplace(p, WalkCount::exact(n));
      if (!table.counts.contains(kOrigin))
        table.counts.emplace(kOrigin, WalkCount::exact(1));
      return table;
    }
  } catch (const BudgetError&) {
    // region too large: fall through to the bounded sweep
  }

  // Escaping region: exact claims need the bounded sweep to terminate.
  if (!max_len)
    throw ValidationError(
        "constrained table without a termination certificate needs max_len");
  const BoundedSweep sweep = bounded_sweep(steps, C, *max_len, meter);
  for (const auto& [p, n] : sweep.totals) {
    if (!keep(p) || table.counts.contains(p)) continue;
    if (sweep.frontier_died)
      table.counts.emplace(p, WalkCount::exact(n));
    else if (p.is_origin() && !origin_has_incoming_step(steps, C))
      table.counts.emplace(p, WalkCount::exact(1));
    else
      table.counts.emplace(p, WalkCount::at_least(n, *max_len));
  }
  if (!table.counts.contains(kOrigin))
    table.counts.emplace(kOrigin, WalkCount::exact(1));
  return table;
}

}  // namespace latwalk
