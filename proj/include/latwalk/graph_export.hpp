// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latwalk/enumeration.hpp"
#include "latwalk/point.hpp"
#include "latwalk/stepset.hpp"

namespace latwalk {

// One labelled edge source -> source+step.  `leaves_window` marks edges whose
// target falls outside the window; emit_tikz draws these as dotted stubs and
// emit_dot omits them.
struct GraphEdge {
  Pt source;
  Pt step;
  Pt target;
  bool leaves_window = false;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Window-restricted walk digraph: vertices are the reachable points inside
// the window labelled with their walk counts; edges follow the step set (and
// the region, in the constrained case).
struct LatticeGraph {
  std::map<Pt, WalkCount> vertices;  // lex-sorted by (x, y)
  std::vector<GraphEdge> edges;      // lex-sorted by (source, step)
  Window window;
  std::vector<Pt> steps;  // normalized step set, lex-sorted (palette order)
  std::string stepset_desc;
  std::string constraint_desc;
  std::string truncation_note;  // empty unless a length cutoff was used
};

// Builds the digraph over `window`.  Vertex labels come from count_table;
// edges connect each vertex to every step-successor allowed by the region,
// flagging successors that exit the window.
LatticeGraph build_graph(const std::vector<Pt>& X, const Window& window,
                         const Constraint& C = {},
                         std::optional<long long> max_len = {},
                         const EnumLimits& limits = {});

// Shared vertex-label formatter for both emitters ("12", "inf", ">=12").
std::string count_label(const WalkCount& c);

// Graphviz text.  Deterministic: node ids "n_{x}_{y}" (negatives as "m{|v|}"),
// pinned positions, vertices then edges in lexicographic order.
std::string emit_dot(const LatticeGraph& g);

// Standalone LaTeX/TikZ document with one labelled circle per vertex at its
// lattice position and step-colored directed edges (fixed 8-color palette in
// lex step order); window-leaving edges become dotted stubs.
std::string emit_tikz(const LatticeGraph& g);

}  // namespace latwalk
