#pragma once

#include <string>
#include <vector>

namespace affweyl {

// Command-line front end. args excludes the program name. Returns the
// process exit code: 0 success, 1 verification found counterexamples,
// 2 usage or input error, 3 internal invariant failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace affweyl
