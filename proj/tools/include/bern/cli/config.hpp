#pragma once

/**
 * @file config.hpp
 * @brief Run configuration for the `bern` tool and the argument parsers it needs.
 */

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bern/rational.hpp"

namespace bern::cli {

/// Bad input on the command line or in a config file. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

[[nodiscard]] const char* to_string(Format f);
[[nodiscard]] Format parse_format(std::string_view text);

struct RunConfig {
    unsigned n_max = 10;
    unsigned grid_density = 64;
    int bits = 64;
    std::vector<std::string> claims;
    std::string output_path;  ///< empty writes to stdout
    Format format = Format::Json;
    bool format_set = false;  ///< format came from a flag or the config file
    unsigned jobs = 0;        ///< 0 uses the hardware concurrency
};

/// Applies "key = value" lines. Blank lines and lines starting with '#' are
/// skipped. Keys: n_max, grid, bits, claims, out, format, jobs.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

/// Comma-separated claim ids, each checked against the registry and the suites.
[[nodiscard]] std::vector<std::string> parse_claim_list(std::string_view text);

/// "p/q" or an integer, with optional sign.
[[nodiscard]] Rational parse_rational_arg(std::string_view text);
/// A rational, or a decimal such as 1e-6 or 0.001 converted exactly. Must be positive.
[[nodiscard]] Rational parse_width(std::string_view text);

}  // namespace bern::cli
