// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0
//
// Rewrites the frozen graph-export goldens under tests/golden/ from the
// current emitters.  Run after an intentional format change, inspect the
// diff, and commit the result; the unit and acceptance suites compare
// byte-for-byte against these files.

#include <fstream>
#include <iostream>
#include <string>

#include "latwalk/graph_export.hpp"
#include "latwalk/stepset.hpp"

namespace {

void write(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(1);
  }
  f << content;
  std::cout << "wrote " << path << " (" << content.size() << " bytes)\n";
}

}  // namespace

int main() {
  using namespace latwalk;
  const std::string dir = std::string(LATWALK_TEST_DATA_DIR) + "/golden";
  const std::vector<Pt> en{{0, 1}, {1, 0}};

  // Binomial-count corner of the grid: labels form Pascal's triangle.
  write(dir + "/pascal_corner.dot",
        emit_dot(build_graph(en, Window::square(0, 3))));

  // Same step set kept weakly below the diagonal: ballot-number labels.
  write(dir + "/ballot_corner.tex",
        emit_tikz(build_graph(en, Window::square(0, 3),
                              Constraint::below_diagonal())));

  // Smallest interesting window, used by the DOT format smoke test.
  write(dir + "/en_unit.dot", emit_dot(build_graph(en, Window::square(0, 1))));
  return 0;
}
