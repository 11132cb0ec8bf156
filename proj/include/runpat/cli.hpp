// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace runpat {

// Dispatches the command line (without the program name). Records go to out
// unless --out redirects them to a file; diagnostics go to err. Returns the
// process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace runpat
