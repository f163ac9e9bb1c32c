#include "bern/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bern/inequalities.hpp"

namespace bern::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

unsigned parse_unsigned(std::string_view key, std::string_view value, unsigned min) {
    unsigned out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || out < min) {
        throw UsageError("config: " + std::string(key) + " expects an integer >= " +
                         std::to_string(min) + ", got '" + std::string(value) + "'");
    }
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

const char* to_string(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "json";
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw UsageError("unknown format '" + std::string(text) + "' (expected json, csv or text)");
}

void apply_config_text(RunConfig& config, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "n_max") {
            config.n_max = parse_unsigned(key, value, 1);
        } else if (key == "grid" || key == "grid_density") {
            config.grid_density = parse_unsigned(key, value, 0);
        } else if (key == "bits") {
            config.bits = static_cast<int>(parse_unsigned(key, value, 16));
        } else if (key == "jobs") {
            config.jobs = parse_unsigned(key, value, 0);
        } else if (key == "format") {
            config.format = parse_format(value);
            config.format_set = true;
        } else if (key == "out" || key == "output_path") {
            config.output_path = std::string(value);
        } else if (key == "claims") {
            config.claims = parse_claim_list(value);
        } else {
            throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" +
                             std::string(key) + "'");
        }
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_text(config, text.str());
}

std::vector<std::string> parse_claim_list(std::string_view text) {
    std::vector<std::string> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string id(trim(text.substr(0, comma)));
        if (!id.empty()) {
            if (!is_known_claim(id)) {
                std::string valid;
                for (const auto& e : inequality_registry()) valid += e.id + " ";
                for (const auto& s : suite_ids()) valid += s + " ";
                throw UsageError("unknown claim id '" + id + "'; valid ids: " + valid);
            }
            out.push_back(id);
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Rational parse_rational_arg(std::string_view text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Rational parse_width(std::string_view text) {
    Rational value;
    if (text.find('/') != std::string_view::npos || all_digits(text)) {
        value = parse_rational_arg(text);
    } else {
        // mantissa[.fraction][e[+-]exponent], converted without rounding
        std::string_view s = text;
        long exponent = 0;
        if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp = s.substr(e + 1);
            const bool neg = !exp.empty() && exp.front() == '-';
            if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) exp.remove_prefix(1);
            if (!all_digits(exp)) throw UsageError("malformed width '" + std::string(text) + "'");
            exponent = std::stol(std::string(exp)) * (neg ? -1 : 1);
            s = s.substr(0, e);
        }
        std::string digits;
        if (const auto dot = s.find('.'); dot != std::string_view::npos) {
            const std::string_view frac = s.substr(dot + 1);
            digits = std::string(s.substr(0, dot)) + std::string(frac);
            exponent -= static_cast<long>(frac.size());
        } else {
            digits = std::string(s);
        }
        if (!all_digits(digits)) throw UsageError("malformed width '" + std::string(text) + "'");
        const Rational mantissa(BigInt(digits, 10));
        value = exponent >= 0 ? mantissa * Rational::inverse_power_of_ten(static_cast<unsigned>(exponent)).reciprocal()
                              : mantissa * Rational::inverse_power_of_ten(static_cast<unsigned>(-exponent));
    }
    if (value.sign() <= 0) throw UsageError("width must be positive");
    return value;
}

}  // namespace bern::cli
