#pragma once

/**
 * @file report.hpp
 * @brief JSON, CSV and text rendering of certificates, verification reports and tables.
 *
 * Rationals are written as "p/q" strings in JSON. CSV rows carry the same
 * strings plus *_approx columns with 15 significant digits.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "bern/certify.hpp"
#include "bern/inequalities.hpp"
#include "bern/cli/config.hpp"

namespace bern::cli {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const InstanceRecord& r);
[[nodiscard]] Json to_json(const VerificationReport& r);
[[nodiscard]] Json to_json(const MonotonicityCertificate& c);

/// 15 significant digits of "p/q", or of the midpoint of "[lo, hi]"; empty for other text.
[[nodiscard]] std::string approx(const std::string& value);
[[nodiscard]] std::string csv_field(const std::string& s);

[[nodiscard]] std::string render_reports(const std::vector<VerificationReport>& reports,
                                         const RunConfig& config, Format format);
[[nodiscard]] std::string render_certificates(const std::string& claim_id,
                                              const std::vector<MonotonicityCertificate>& certs,
                                              Format format);

/// A table as a header and string rows; rendered as JSON objects, CSV or aligned text.
/// JSON drops the *_approx columns.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

[[nodiscard]] std::string render_table(const Table& table, Format format);

}  // namespace bern::cli
