// cli.hpp
// The experiment harness behind the ptomo command-line tool. Kept as a
// library function so the subcommands are directly testable.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptomo::cli {

// Exit codes: 0 success, 1 validation error, 2 capacity error,
// 3 failed selftest.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// The condensed invariant suite behind `ptomo selftest`.
bool selftest(bool fast, std::ostream& out);

}  // namespace ptomo::cli
