// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latwalk/jobspec.hpp"

namespace latwalk {

// Runs one CLI invocation.  `args` excludes the program name.  Exit codes:
// 0 success, 1 validation/usage error, 2 work-budget exhaustion, 3 network
// failure, 4 failed verify suites.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Executes an already-validated job (the CLI subcommands and `job --file`
// both funnel here).  Same exit-code contract as run_cli.
int execute_job(const JobSpec& job, std::ostream& out);

}  // namespace latwalk
