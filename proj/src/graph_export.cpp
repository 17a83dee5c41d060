// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/graph_export.hpp"

#include <algorithm>
#include <sstream>

#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

std::string node_id(Pt p) {
  const auto coord = [](std::int64_t v) {
    return v < 0 ? "m" + std::to_string(-v) : std::to_string(v);
  };
  return "n_" + coord(p.x) + "_" + coord(p.y);
}

std::string pair_text(Pt p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Fixed-point coordinate base + frac/100, printed without float formatting
// so the emitted text is byte-stable across platforms.
std::string hundredths(std::int64_t hundredth_units) {
  std::string sign = hundredth_units < 0 ? "-" : "";
  if (hundredth_units < 0) hundredth_units = -hundredth_units;
  std::string out = sign + std::to_string(hundredth_units / 100);
  const std::int64_t frac = hundredth_units % 100;
  if (frac == 0) return out;
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
  return out;
}

constexpr const char* kPalette[8] = {
    "blue", "red", "green!55!black", "orange", "violet", "teal", "magenta",
    "brown",
};

const char* step_color(const std::vector<Pt>& steps, Pt step) {
  const auto it = std::lower_bound(steps.begin(), steps.end(), step);
  LATWALK_CHECK(it != steps.end() && *it == step, "edge step missing from set");
  return kPalette[static_cast<std::size_t>(it - steps.begin()) % 8];
}

}  // namespace

std::string count_label(const WalkCount& c) { return c.str(); }

LatticeGraph build_graph(const std::vector<Pt>& X, const Window& window,
                         const Constraint& C, std::optional<long long> max_len,
                         const EnumLimits& limits) {
  CountTable table = count_table(X, window, C, max_len, limits);

  LatticeGraph g;
  g.window = window;
  g.vertices = std::move(table.counts);
  g.stepset_desc = std::move(table.stepset_desc);
  g.constraint_desc = std::move(table.constraint_desc);
  if (max_len) g.truncation_note = "length cutoff " + std::to_string(*max_len);

  g.steps = X;
  std::sort(g.steps.begin(), g.steps.end());
  g.steps.erase(std::unique(g.steps.begin(), g.steps.end()), g.steps.end());

  // count_table omits unreachable window points and may key O outside the
  // window; keep exactly the in-window reachable vertices.
  std::erase_if(g.vertices,
                [&](const auto& kv) { return !window.contains(kv.first); });

  for (const auto& [src, unused] : g.vertices)
    for (Pt b : g.steps) {
      const Pt dst = src + b;
      if (!C.contains(dst)) continue;
      const bool leaves = !window.contains(dst);
      LATWALK_CHECK(leaves || g.vertices.contains(dst),
                    "in-window successor of a vertex must be a vertex");
      g.edges.push_back({src, b, dst, leaves});
    }
  // map iteration already sorts sources; steps are sorted, so edges are in
  // (source, step) lex order by construction
  return g;
}

std::string emit_dot(const LatticeGraph& g) {
  std::ostringstream os;
  os << "digraph lattice_walks {\n";
  os << "  // steps: " << g.stepset_desc << "\n";
  os << "  // region: " << g.constraint_desc << "\n";
  if (!g.truncation_note.empty()) os << "  // " << g.truncation_note << "\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (const auto& [p, count] : g.vertices)
    os << "  " << node_id(p) << " [label=\"" << count_label(count)
       << "\", pos=\"" << p.x << "," << p.y << "!\"];\n";
  for (const GraphEdge& e : g.edges) {
    if (e.leaves_window) continue;
    os << "  " << node_id(e.source) << " -> " << node_id(e.target)
       << " [label=\"" << pair_text(e.step) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_tikz(const LatticeGraph& g) {
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n";
  os << "\\begin{document}\n";
  os << "% steps: " << g.stepset_desc << "\n";
  os << "% region: " << g.constraint_desc << "\n";
  if (!g.truncation_note.empty()) os << "% " << g.truncation_note << "\n";
  for (std::size_t i = 0; i < g.steps.size(); ++i)
    os << "% step " << pair_text(g.steps[i]) << " -> " << kPalette[i % 8]
       << "\n";
  os << "\\begin{tikzpicture}[>=stealth, scale=1.4]\n";
  for (const auto& [p, count] : g.vertices)
    os << "  \\node[draw, circle, inner sep=1.5pt, font=\\scriptsize] ("
       << node_id(p) << ") at (" << p.x << "," << p.y << ") {"
       << count_label(count) << "};\n";
  for (const GraphEdge& e : g.edges) {
    const char* color = step_color(g.steps, e.step);
    if (e.leaves_window) {
      // dotted stub: a 0.45-step continuation hinting at the clipped edge
      const std::string tx = hundredths(100 * e.source.x + 45 * e.step.x);
      const std::string ty = hundredths(100 * e.source.y + 45 * e.step.y);
      os << "  \\draw[->, " << color << ", dotted] (" << node_id(e.source)
         << ") -- (" << tx << "," << ty << ");\n";
    } else {
      os << "  \\draw[->, " << color << "] (" << node_id(e.source) << ") -- ("
         << node_id(e.target) << ");\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  os << "\\end{document}\n";
  return os.str();
}

}  // namespace latwalk
