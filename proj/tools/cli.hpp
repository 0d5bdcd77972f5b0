#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eltrans::cli {

/// Runs one subcommand. args excludes the program name; `in` backs
/// "--state -". Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eltrans::cli
