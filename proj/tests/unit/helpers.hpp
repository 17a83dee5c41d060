// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latwalk/point.hpp"

namespace latwalk::testing {

inline std::string test_data_dir() { return LATWALK_TEST_DATA_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("test data file missing: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

// Common step sets used across the suites.
inline const std::vector<Pt> kEN{{0, 1}, {1, 0}};
inline const std::vector<Pt> kNESW{{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
inline const std::vector<Pt> kNES{{0, -1}, {0, 1}, {1, 0}};
inline const std::vector<Pt> kNESWU{{-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};

}  // namespace latwalk::testing
