#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fortcalc::cli {

// Exit codes: 0 success, 1 validation/usage error, 2 verification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace fortcalc::cli
