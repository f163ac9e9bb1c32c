#pragma once

/**
 * @file app.hpp
 * @brief Entry point of the `bern` command line tool, callable in-process.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace bern::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bern::cli
