#include "bern/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "bern/bernoulli.hpp"
#include "bern/certify.hpp"
#include "bern/cli/config.hpp"
#include "bern/cli/report.hpp"
#include "bern/enclosure.hpp"
#include "bern/inequalities.hpp"
#include "bern/roots.hpp"

namespace bern::cli {

namespace {

struct Output {
    int code = kExitOk;
    std::string text;
};

Format query_format(const RunConfig& cfg) { return cfg.format_set ? cfg.format : Format::Text; }

std::string scalar_json(const Json& j) { return j.dump(2) + "\n"; }

Output cmd_number(unsigned n, const RunConfig& cfg) {
    const Rational b = bernoulli_number(n);
    switch (query_format(cfg)) {
        case Format::Json: return {kExitOk, scalar_json({{"n", n}, {"value", b.to_string()}})};
        case Format::Csv:
            return {kExitOk, "n,value,value_approx\n" + std::to_string(n) + "," + b.to_string() + "," +
                                 b.to_decimal(15) + "\n"};
        case Format::Text: break;
    }
    return {kExitOk, b.to_string() + "\n"};
}

Output cmd_poly(unsigned n, const RunConfig& cfg) {
    const Poly& p = bernoulli_polynomial(n);
    const auto& c = p.coefficients();
    switch (query_format(cfg)) {
        case Format::Json: {
            Json coeffs = Json::array();
            for (const Rational& x : c) coeffs.push_back(x.to_string());
            return {kExitOk, scalar_json({{"n", n}, {"coefficients", coeffs}, {"polynomial", p.to_string()}})};
        }
        case Format::Csv: {
            std::string s = "power,coefficient,coefficient_approx\n";
            for (std::size_t i = 0; i < c.size(); ++i) {
                s += std::to_string(i) + "," + c[i].to_string() + "," + c[i].to_decimal(15) + "\n";
            }
            return {kExitOk, s};
        }
        case Format::Text: break;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i > 0 ? ", " : "") + c[i].to_string();
    return {kExitOk, s + "]\n"};
}

Output cmd_value(unsigned n, const std::string& t_text, const std::string& at, const RunConfig& cfg) {
    if (t_text.empty() == at.empty()) throw UsageError("value: give either t or --at half|quarter");
    Rational value;
    std::string where;
    if (at == "half") {
        value = bernoulli_at_half(n);
        where = "1/2";
    } else if (at == "quarter") {
        value = n == 0 ? Rational(1) : bernoulli_at_quarter(n);
        where = "1/4";
    } else {
        const Rational t = parse_rational_arg(t_text);
        value = bernoulli_polynomial(n).evaluate(t);
        where = t.to_string();
    }
    switch (query_format(cfg)) {
        case Format::Json:
            return {kExitOk, scalar_json({{"n", n}, {"t", where}, {"value", value.to_string()}})};
        case Format::Csv:
            return {kExitOk, "n,t,value,value_approx\n" + std::to_string(n) + "," + where + "," +
                                 value.to_string() + "," + value.to_decimal(15) + "\n"};
        case Format::Text: break;
    }
    return {kExitOk, value.to_string() + "\n"};
}

Output cmd_zero(unsigned n, const std::string& width_text, const RunConfig& cfg) {
    if (n < 1) throw UsageError("zero: n must be >= 1");
    const Rational width = parse_width(width_text);
    const IsolatingInterval iv = isolate_r2n(n, width);
    const bool sixth_quarter =
        compare_with_r2n(n, Rational(1, 6)) == Verdict::Less && compare_with_r2n(n, Rational(1, 4)) == Verdict::Greater;
    // 1/4 - 1/(2^(2n+1) pi) < r_2n; the gap is far below any useful width
    const bool lehmer = compare_lehmer_bound(n).verdict == Verdict::Less;
    const std::string mid = ((iv.lo + iv.hi) / Rational(2)).to_decimal(15);
    const std::string name = "r_" + std::to_string(2 * n);
    Output o{sixth_quarter && lehmer ? kExitOk : kExitFailure, {}};
    switch (query_format(cfg)) {
        case Format::Json:
            o.text = scalar_json({{"n", n},
                                  {"interval", Json::array({iv.lo.to_string(), iv.hi.to_string()})},
                                  {"width", iv.width().to_string()},
                                  {"bounds", {{"sixth_quarter", sixth_quarter}, {"lehmer", lehmer}}}});
            return o;
        case Format::Csv:
            o.text = "n,lo,hi,approx,sixth_quarter,lehmer\n" + std::to_string(n) + "," +
                     iv.lo.to_string() + "," + iv.hi.to_string() + "," + mid + "," +
                     (sixth_quarter ? "true" : "false") + "," + (lehmer ? "true" : "false") + "\n";
            return o;
        case Format::Text: break;
    }
    o.text = name + " in [" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]\n" +
             "  approx " + mid + ", width " + iv.width().to_decimal(3) + "\n" +
             "  1/6 < " + name + " < 1/4: " + (sixth_quarter ? "yes" : "no") + "\n" +
             "  1/4 - 1/(2^" + std::to_string(2 * n + 1) + " pi) < " + name + ": " +
             (lehmer ? "yes" : "no") + "\n";
    return o;
}

std::vector<std::string> certify_ids() {
    std::vector<std::string> ids = theorem_family_ids();
    for (const char* id : {"prop-5.7", "seq-t5", "seq-t6", "limits"}) ids.emplace_back(id);
    return ids;
}

VerifyOptions options_from(const RunConfig& cfg) {
    VerifyOptions o;
    o.n_max = cfg.n_max;
    o.grid_density = cfg.grid_density;
    o.bits = cfg.bits;
    o.jobs = cfg.jobs;
    o.claims = cfg.claims;
    return o;
}

Output cmd_certify(const std::string& id, const RunConfig& cfg) {
    const auto ids = certify_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::string valid;
        for (const auto& s : ids) valid += " " + s;
        throw UsageError("unknown certificate id '" + id + "'; valid ids:" + valid);
    }
    const auto& families = theorem_family_ids();
    if (std::find(families.begin(), families.end(), id) != families.end()) {
        const auto certs = certify_family(id, cfg.n_max, cfg.jobs);
        const bool ok = std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.passed(); });
        return {ok ? kExitOk : kExitFailure, render_certificates(id, certs, cfg.format)};
    }
    VerifyOptions o = options_from(cfg);
    o.scalar_n_max = cfg.n_max;
    const VerificationReport report = run_suite(id, o);
    RunConfig shown = cfg;
    shown.claims = {id};
    return {report.passed() ? kExitOk : kExitFailure, render_reports({report}, shown, cfg.format)};
}

Output cmd_verify(const RunConfig& cfg) {
    const auto reports = verify_all(options_from(cfg));
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return {ok ? kExitOk : kExitFailure, render_reports(reports, cfg, cfg.format)};
}

void add_bound_columns(Table& table, const std::string& name) {
    table.columns.push_back(name);
    table.columns.push_back(name + "_radius");
    table.columns.push_back(name + "_approx");
}

Table ratio_bounds_table(const RunConfig& cfg) {
    Table table{"ratio-bounds", {"n", "ratio", "ratio_approx"}, {}};
    for (const auto& [name, q] : ratio_bound_values(1)) add_bound_columns(table, name);
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
        const Rational ratio = (bernoulli_number(2 * n + 2) / bernoulli_number(2 * n)).abs();
        std::vector<std::string> row{std::to_string(n), ratio.to_string(), ratio.to_decimal(15)};
        for (const auto& [name, q] : ratio_bound_values(n)) {
            if (q.is_exact()) {
                row.insert(row.end(), {q.exact().to_string(), "0", q.exact().to_decimal(15)});
            } else {
                const RationalInterval e = q.enclose(cfg.bits);
                row.insert(row.end(), {e.midpoint().to_string(), e.radius().to_string(),
                                       e.midpoint().to_decimal(15)});
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table r2n_table(const RunConfig& cfg) {
    Table table{"r2n", {"n", "lo", "hi", "lo_approx", "hi_approx"}, {}};
    const Rational width = Rational::inverse_power_of_ten(12);
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
        const IsolatingInterval iv = isolate_r2n(n, width);
        table.rows.push_back({std::to_string(n), iv.lo.to_string(), iv.hi.to_string(),
                              iv.lo.to_decimal(15), iv.hi.to_decimal(15)});
    }
    return table;
}

Table zeta_table(const RunConfig& cfg) {
    Table table{"zeta", {"n", "c_n", "c_n_approx"}, {}};
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
        const Rational c = zeta_even_coefficient(n);
        table.rows.push_back({std::to_string(n), c.to_string(), c.to_decimal(15)});
    }
    return table;
}

Table limits_table(const RunConfig& cfg) {
    Table table{"limits", {"claim", "t", "n", "gap_lo", "gap_hi", "gap_approx"}, {}};
    const Rational t(1, 8);
    const Rational tol = Rational::inverse_power_of_ten(6);
    for (LimitClaim claim : {LimitClaim::Ratio2n2n1, LimitClaim::Ratio2n2nm1, LimitClaim::Asymptotic}) {
        if (claim == LimitClaim::Asymptotic && cfg.n_max < 2) continue;
        const LimitReport report = check_limit(claim, t, cfg.n_max, tol, cfg.bits);
        for (const LimitSample& s : report.samples) {
            const RationalInterval& g = s.gap_enclosure;
            table.rows.push_back({to_string(claim), t.to_string(), std::to_string(s.n),
                                  g.lo().to_string(), g.hi().to_string(), g.midpoint().to_decimal(15)});
        }
    }
    return table;
}

Output cmd_table(const std::string& kind, const RunConfig& cfg) {
    Table table;
    if (kind == "ratio-bounds") {
        table = ratio_bounds_table(cfg);
    } else if (kind == "r2n") {
        table = r2n_table(cfg);
    } else if (kind == "zeta") {
        table = zeta_table(cfg);
    } else if (kind == "limits") {
        table = limits_table(cfg);
    } else {
        throw UsageError("unknown table '" + kind + "' (expected ratio-bounds, r2n, zeta or limits)");
    }
    return {kExitOk, render_table(table, cfg.format)};
}

int emit(const Output& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.output_path.empty()) {
        out << o.text;
        return o.code;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    file << o.text;
    if (!file) {
        err << "error: cannot write '" << cfg.output_path << "'\n";
        return kExitFailure;
    }
    return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bernoulli numbers and polynomials, with certified monotonicity and "
                 "inequality checks.",
                 "bern"};
    app.require_subcommand(1);

    std::string config_path, format_text, out_path;
    unsigned n_max = 0, grid = 0, jobs = 0;
    int bits = 0;
    auto* o_config = app.add_option("--config", config_path, "Flat key=value config file");
    auto* o_n_max = app.add_option("--n-max", n_max, "Largest index n")->check(CLI::PositiveNumber);
    auto* o_grid = app.add_option("--grid", grid, "Grid density: t = k/(2*grid)");
    auto* o_bits = app.add_option("--bits", bits, "Starting enclosure precision")->check(CLI::Range(16, 4096));
    auto* o_format = app.add_option("--format", format_text, "json, csv or text")
                         ->check(CLI::IsMember({"json", "csv", "text"}));
    auto* o_out = app.add_option("--out", out_path, "Write output to this file");
    auto* o_jobs = app.add_option("--jobs", jobs, "Worker threads (0 = all cores)");

    unsigned n = 0;
    std::string t_text, at, width_text = "1e-12", claim_id, claims_text, kind;

    auto* number = app.add_subcommand("number", "Print the Bernoulli number B_n");
    number->add_option("n", n)->required();
    auto* poly = app.add_subcommand("poly", "Print the coefficients of B_n(t), lowest degree first");
    poly->add_option("n", n)->required();
    auto* value = app.add_subcommand("value", "Print B_n(t) for a rational t");
    value->add_option("n", n)->required();
    value->add_option("t", t_text, "Rational p/q");
    value->add_option("--at", at, "Use the closed form at 1/2 or 1/4")->check(CLI::IsMember({"half", "quarter"}));
    auto* zero = app.add_subcommand("zero", "Isolate the zero r_2n of B_2n in (0, 1/2)");
    zero->add_option("n", n)->required();
    zero->add_option("--width", width_text, "Largest interval width, e.g. 1e-6 or 1/1000");
    auto* certify = app.add_subcommand("certify", "Emit monotonicity and sequence certificates");
    certify->add_option("claim", claim_id)->required();
    auto* verify = app.add_subcommand("verify", "Run the inequality suite");
    auto* o_claims = verify->add_option("--claims", claims_text, "Comma-separated claim ids");
    auto* table = app.add_subcommand("table", "Write a comparison table");
    table->add_option("kind", kind, "ratio-bounds, r2n, zeta or limits")->required();
    for (CLI::App* sub : {number, poly, value, zero, certify, verify, table}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        RunConfig cfg;
        if (o_config->count() > 0) apply_config_file(cfg, config_path);
        if (o_n_max->count() > 0) cfg.n_max = n_max;
        if (o_grid->count() > 0) cfg.grid_density = grid;
        if (o_bits->count() > 0) cfg.bits = bits;
        if (o_format->count() > 0) {
            cfg.format = parse_format(format_text);
            cfg.format_set = true;
        }
        if (o_out->count() > 0) cfg.output_path = out_path;
        if (o_jobs->count() > 0) cfg.jobs = jobs;
        if (o_claims->count() > 0) cfg.claims = parse_claim_list(claims_text);

        Output o;
        if (*number) {
            o = cmd_number(n, cfg);
        } else if (*poly) {
            o = cmd_poly(n, cfg);
        } else if (*value) {
            o = cmd_value(n, t_text, at, cfg);
        } else if (*zero) {
            o = cmd_zero(n, width_text, cfg);
        } else if (*certify) {
            o = cmd_certify(claim_id, cfg);
        } else if (*verify) {
            o = cmd_verify(cfg);
        } else {
            o = cmd_table(kind, cfg);
        }
        return emit(o, cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace bern::cli
