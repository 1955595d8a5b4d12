// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tl::cli {

enum Exit : int { kOk = 0, kLogicalFailure = 1, kInputError = 2 };

// Runs one command line (argv[0] is the program name). Output that a script
// would consume goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tl::cli
