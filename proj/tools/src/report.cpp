#include "bern/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace bern::cli {

namespace {

Json coefficients(const Poly& p) {
    Json out = Json::array();
    for (const Rational& c : p.coefficients()) out.push_back(c.to_string());
    return out;
}

Json interval(const IsolatingInterval& iv) {
    return Json::array({iv.lo.to_string(), iv.hi.to_string()});
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

std::size_t failure_total(const std::vector<VerificationReport>& reports) {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.failures.size();
    return n;
}

std::size_t undecided_total(const std::vector<VerificationReport>& reports) {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.undecided();
    return n;
}

std::string describe(const InstanceRecord& r) {
    std::string s = r.claim_id + " " + r.part + " n=" + std::to_string(r.n);
    if (r.m) s += " m=" + std::to_string(*r.m);
    if (r.t) s += " t=" + r.t->to_string();
    return s;
}

}  // namespace

Json to_json(const InstanceRecord& r) {
    Json instance;
    instance["n"] = r.n;
    if (r.m) instance["m"] = *r.m;
    if (r.t) instance["t"] = r.t->to_string();
    instance["part"] = r.part;
    Json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = std::move(instance);
    j["status"] = to_string(r.status);
    j["relation"] = r.relation;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["precision_bits"] = r.precision_bits;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["claim_id"] = r.claim_id;
    j["passed"] = r.passed();
    j["instances_checked"] = r.instances_checked;
    j["undecided"] = r.undecided();
    j["precision_escalations"] = r.precision_escalations;
    j["wall_notes"] = r.wall_notes;
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    j["failures"] = std::move(failures);
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    j["records"] = std::move(records);
    return j;
}

Json to_json(const MonotonicityCertificate& c) {
    Json instance;
    instance["n"] = c.n;
    if (c.m) instance["m"] = *c.m;
    instance["interval"] = Json::array({c.lo.to_string(), c.hi.to_string()});
    Json j;
    j["claim_id"] = c.claim_id;
    j["instance"] = std::move(instance);
    j["status"] = c.passed() ? "passed" : "failed";
    j["ratio"] = c.label;
    j["expected"] = to_string(c.expected);
    j["conclusion"] = to_string(c.conclusion);
    j["f"] = coefficients(c.f);
    j["g"] = coefficients(c.g);
    j["wronskian"] = coefficients(c.wronskian);
    Json boundary = Json::array();
    for (const auto& b : c.boundary) {
        boundary.push_back({{"root", b.root.to_string()}, {"multiplicity", b.multiplicity}});
    }
    j["boundary"] = std::move(boundary);
    j["interior_root_count"] = c.interior_root_count;
    Json zeros = Json::array();
    for (const auto& z : c.wronskian_zeros) zeros.push_back(interval(z));
    j["wronskian_zeros"] = std::move(zeros);
    j["witness"] = {{"t", c.witness_point.to_string()}, {"sign", c.witness_sign}};
    Json poles = Json::array();
    for (const auto& z : c.denominator_zero_locations) poles.push_back(interval(z));
    j["denominator_zeros"] = std::move(poles);
    j["notes"] = c.notes;
    return j;
}

std::string approx(const std::string& value) {
    try {
        if (!value.empty() && value.front() == '[') {
            const auto comma = value.find(", ");
            if (comma == std::string::npos || value.back() != ']') return {};
            const Rational lo = Rational::parse(value.substr(1, comma - 1));
            const Rational hi = Rational::parse(value.substr(comma + 2, value.size() - comma - 3));
            return ((lo + hi) / Rational(2)).to_decimal(15);
        }
        return Rational::parse(value).to_decimal(15);
    } catch (const std::invalid_argument&) {
        return {};
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_reports(const std::vector<VerificationReport>& reports, const RunConfig& config,
                           Format format) {
    const std::size_t failures = failure_total(reports);
    const std::size_t undecided = undecided_total(reports);
    if (format == Format::Json) {
        Json j;
        Json claims = Json::array();
        for (const auto& c : config.claims) claims.push_back(c);
        j["config"] = {{"n_max", config.n_max},
                       {"grid_density", config.grid_density},
                       {"bits", config.bits},
                       {"claims", std::move(claims)}};
        j["summary"] = {{"reports", reports.size()},
                        {"failures", failures},
                        {"undecided", undecided},
                        {"passed", failures == 0}};
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        j["reports"] = std::move(list);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << join_csv({"claim_id", "part", "n", "m", "t", "t_approx", "status", "relation", "lhs",
                         "lhs_approx", "rhs", "rhs_approx", "precision_bits", "notes"});
        for (const auto& r : reports) {
            for (const auto& rec : r.records) {
                const std::string t = rec.t ? rec.t->to_string() : "";
                out << join_csv({rec.claim_id, rec.part, std::to_string(rec.n),
                                 rec.m ? std::to_string(*rec.m) : "", t, approx(t),
                                 to_string(rec.status), rec.relation, rec.lhs, approx(rec.lhs),
                                 rec.rhs, approx(rec.rhs), std::to_string(rec.precision_bits),
                                 rec.notes});
            }
        }
        return out.str();
    }
    for (const auto& r : reports) {
        std::size_t refuted = 0;
        for (const auto& rec : r.records) refuted += rec.status == InstanceStatus::Refuted;
        out << (r.passed() ? "PASS " : "FAIL ") << r.claim_id << ": " << r.instances_checked
            << " instances, " << r.failures.size() << " failures, " << r.undecided()
            << " undecided, " << refuted << " known counterexamples refuted, "
            << r.precision_escalations << " escalations (" << r.wall_notes << ")\n";
        for (const auto& f : r.failures) {
            out << "  " << to_string(f.status) << ": " << describe(f) << ": " << f.lhs << " "
                << f.relation << " " << f.rhs << (f.notes.empty() ? "" : " [" + f.notes + "]") << "\n";
        }
    }
    out << (failures == 0 ? "all claims verified" : "verification failed") << " (" << reports.size()
        << " reports, " << failures << " failures, " << undecided << " undecided)\n";
    return out.str();
}

std::string render_certificates(const std::string& claim_id,
                                const std::vector<MonotonicityCertificate>& certs, Format format) {
    const auto failed = static_cast<std::size_t>(
        std::count_if(certs.begin(), certs.end(), [](const auto& c) { return !c.passed(); }));
    if (format == Format::Json) {
        Json j;
        j["claim_id"] = claim_id;
        j["summary"] = {{"certificates", certs.size()}, {"failed", failed}};
        Json list = Json::array();
        for (const auto& c : certs) list.push_back(to_json(c));
        j["certificates"] = std::move(list);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << join_csv({"claim_id", "n", "m", "lo", "hi", "ratio", "expected", "conclusion",
                         "wronskian_degree", "interior_root_count", "witness_t", "witness_sign",
                         "status"});
        for (const auto& c : certs) {
            out << join_csv({c.claim_id, std::to_string(c.n), c.m ? std::to_string(*c.m) : "",
                             c.lo.to_string(), c.hi.to_string(), c.label, to_string(c.expected),
                             to_string(c.conclusion), std::to_string(c.wronskian.degree()),
                             std::to_string(c.interior_root_count), c.witness_point.to_string(),
                             std::to_string(c.witness_sign), c.passed() ? "passed" : "failed"});
        }
        return out.str();
    }
    for (const auto& c : certs) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.claim_id << " n=" << c.n;
        if (c.m) out << " m=" << *c.m;
        out << " " << c.label << " on (" << c.lo << ", " << c.hi << "): " << to_string(c.conclusion)
            << " (expected " << to_string(c.expected) << ", Wronskian degree " << c.wronskian.degree()
            << ")\n";
    }
    out << certs.size() << " certificates, " << failed << " failed\n";
    return out.str();
}

std::string render_table(const Table& table, Format format) {
    if (format == Format::Json) {
        Json j;
        j["table"] = table.name;
        Json rows = Json::array();
        for (const auto& row : table.rows) {
            Json r;
            for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) {
                if (table.columns[i].ends_with("_approx")) continue;  // JSON stays exact
                r[table.columns[i]] = row[i];
            }
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << join_csv(table.columns);
        for (const auto& row : table.rows) out << join_csv(row);
        return out.str();
    }
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < width.size() && i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string& c = i < cells.size() ? cells[i] : std::string();
            out << c;
            if (i + 1 < width.size()) out << std::string(width[i] - c.size() + 2, ' ');
        }
        out << "\n";
    };
    line(table.columns);
    for (const auto& row : table.rows) line(row);
    return out.str();
}

}  // namespace bern::cli
