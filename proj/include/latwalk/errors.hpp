// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATWALK_ERRORS_HPP
#define LATWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latwalk {

// Malformed or inconsistent input: bad step lists, unknown family names,
// unusable truncations, missing required options.  CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed its declared work budget (naive enumeration
// blow-up, oversized truncations, runaway searches).  CLI exit code 2.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Remote sequence lookup failed (connection, timeout, or HTTP error) even
// after a retry.  CLI exit code 3.
class NetworkError : public std::runtime_error {
public:
  explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latwalk

// Always-on internal consistency check: certificate replays and result
// audits must hold in every build configuration, so these are not asserts.
#define LATWALK_CHECK(cond, msg)            \
  do {                                      \
    if (!(cond)) throw std::logic_error(msg); \
  } while (0)

#endif  // LATWALK_ERRORS_HPP
