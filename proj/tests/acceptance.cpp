// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. Pass the path of the `bern` executable as argv[1] to
// enable the determinism check.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "bern/bernoulli.hpp"
#include "bern/certify.hpp"
#include "bern/enclosure.hpp"
#include "bern/inequalities.hpp"
#include "bern/roots.hpp"
#include "oracles.hpp"

using namespace bern;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

const Rational kHalf(1, 2);

Outcome exact_core() {
    Outcome o;
    const auto b = testing::bernoulli_series_oracle(25);
    for (unsigned n = 0; n <= 24; ++n) o.require(bernoulli_number(n) == Rational(b[n]), "B_" + std::to_string(n));
    o.require(bernoulli_number(12) == Rational(-691, 2730), "B_12");
    const auto e = testing::euler_series_oracle(13);
    for (unsigned n = 0; n <= 12; ++n) o.require(euler_number(n) == e[n], "E_" + std::to_string(n));
    o.detail << "B_0..B_24 and E_0..E_12 match the series oracles";
    return o;
}

Outcome identities() {
    Outcome o;
    for (unsigned n = 0; n <= 60; ++n) {
        const Poly& p = bernoulli_polynomial(n);
        const std::string at = " at n = " + std::to_string(n);
        if (n > 0) o.require(p.derivative() == Rational(static_cast<long>(n)) * bernoulli_polynomial(n - 1), "derivative" + at);
        o.require(p.compose_affine(-1, 1) == (n % 2 == 0 ? p : -p), "reflection" + at);
        o.require(bernoulli_at_half(n) == p.evaluate(kHalf), "value at 1/2" + at);
        o.require(bernoulli_at_half(n) ==
                      -(Rational(1) - Rational::power_of_two(1 - static_cast<long>(n))) * bernoulli_number(n),
                  "closed form at 1/2" + at);
        if (n == 0) continue;
        const Rational q = p.evaluate(Rational(1, 4));
        o.require(bernoulli_at_quarter(n) == q, "value at 1/4" + at);
        const Rational q3 = p.evaluate(Rational(3, 4));
        o.require(q == (n % 2 == 0 ? q3 : -q3), "quarter symmetry" + at);
    }
    o.detail << "derivative, reflection, half and quarter identities exact for n <= 60";
    return o;
}

Outcome r2n_zeros() {
    Outcome o;
    const Rational margin = endpoint_margin();
    const Rational width = Rational::inverse_power_of_ten(12);
    for (unsigned n = 1; n <= 25; ++n) {
        const std::string at = " at n = " + std::to_string(n);
        o.require(count_roots(bernoulli_polynomial(2 * n), margin, kHalf - margin) == 1, "root count" + at);
        const IsolatingInterval iv = isolate_r2n(n, width);
        o.require(iv.width() <= width, "width" + at);
        o.require(compare_with_r2n(n, Rational(1, 6)) == Verdict::Less &&
                      compare_with_r2n(n, Rational(1, 4)) == Verdict::Greater,
                  "(1/6, 1/4)" + at);
        o.require(compare_lehmer_bound(n).verdict == Verdict::Less, "Lehmer bound" + at);
        if (n >= 8) o.require(Rational(1, 4) - iv.lo < Rational::inverse_power_of_ten(4), "1/4 - r < 1e-4" + at);
    }
    const R2nMonotoneResult mono = verify_r2n_monotone(25, width);
    o.require(mono.increasing, "r_2n increasing (first failure n = " + std::to_string(mono.first_failure) + ")");
    o.detail << "n = 1..25: one zero each, intervals <= 1e-12, both bounds decided by exact signs, strictly increasing";
    return o;
}

Outcome theorem_certificates() {
    Outcome o;
    const auto certs = certify_theorem_suite(12, 0);
    int max_degree = 0;
    std::size_t failed = 0;
    for (const auto& c : certs) {
        max_degree = std::max(max_degree, c.wronskian.degree());
        if (!c.passed()) {
            ++failed;
            o.require(false, c.claim_id + " " + c.label + " on (" + c.lo.to_string() + ", " + c.hi.to_string() + ")");
        }
    }
    o.require(!certs.empty(), "no certificates");
    o.detail << certs.size() << " certificates, " << failed << " failed, highest Wronskian degree " << max_degree;
    return o;
}

Outcome sequences_and_limits() {
    Outcome o;
    std::size_t checked = 0;
    for (const Rational& t : sequence_grid(16)) {
        for (SequenceClaim claim : {SequenceClaim::T5, SequenceClaim::T6}) {
            const auto cert = certify_sequence_in_n(t, claim, 12);
            o.require(cert.passed(), std::string(to_string(claim)) + " at t = " + t.to_string());
            ++checked;
        }
    }
    const Rational t(1, 8);
    const Rational tol = Rational::inverse_power_of_ten(6);
    const auto a = check_limit(LimitClaim::Ratio2n2n1, t, 15, tol);
    const auto b = check_limit(LimitClaim::Ratio2n2nm1, t, 15, tol);
    o.require(a.status == LimitStatus::WithinTolerance, "ratio_2n_2n1 gap at n = 15");
    o.require(b.status == LimitStatus::WithinTolerance, "ratio_2n_2nm1 gap at n = 15");
    const auto c = check_limit(LimitClaim::Asymptotic, t, 20, tol);
    o.require(c.decreasing_from(4) && c.undecided_comparisons == 0, "scaled gap decreasing over n = 4..20");
    o.detail << checked << " sequence certificates; gaps at n = 15: "
             << a.sample(15).gap_enclosure.hi().to_decimal(3) << ", " << b.sample(15).gap_enclosure.hi().to_decimal(3)
             << "; asymptotic gap decreasing from n = 4";
    return o;
}

Outcome inequality_suite() {
    Outcome o;
    VerifyOptions options;
    options.n_max = 10;
    options.scalar_n_max = 50;
    options.grid_density = 64;
    options.bits = 64;
    options.include_certify = false;
    const auto reports = verify_all(options);
    std::size_t instances = 0, refuted = 0, undecided = 0, failures = 0;
    auto has = [&](const std::string& id, const std::function<bool(const InstanceRecord&)>& pred) {
        for (const auto& r : reports) {
            if (r.claim_id != id) continue;
            return std::any_of(r.records.begin(), r.records.end(), pred);
        }
        return false;
    };
    for (const auto& r : reports) {
        instances += r.instances_checked;
        undecided += r.undecided();
        failures += r.failures.size();
        for (const auto& rec : r.records) refuted += rec.status == InstanceStatus::Refuted;
        o.require(r.passed(), r.claim_id + " has " + std::to_string(r.failures.size()) + " failures");
    }
    o.require(reports.size() == 17, "17 registry reports");
    o.require(undecided == 0, "undecided instances");
    o.require(has("R8", [](const auto& x) { return x.n == 1 && x.notes == "reversed at n = 1" && x.ok(); }),
              "R8 n = 1 reversal");
    o.require(has("R13", [](const auto& x) { return x.n == 0 && x.part == "lower" && x.ok(); }), "R13 n = 0");
    for (unsigned n = 1; n <= 8; ++n) {
        for (const char* part : {"sup", "quarter-lower", "quarter-upper"}) {
            o.require(has("R15", [&](const auto& x) { return x.n == n && x.part == part && x.ok(); }),
                      std::string("R15 ") + part + " n = " + std::to_string(n));
        }
    }
    for (unsigned n = 1; n <= 50; ++n) {
        o.require(has("R16", [&](const auto& x) { return x.n == n && x.part == "upper-R10<=upper-R13" && x.ok(); }),
                  "R16 n = " + std::to_string(n));
    }
    o.detail << reports.size() << " reports, " << instances << " instances, " << failures << " failures, " << undecided
             << " undecided, " << refuted << " stated counterexamples refuted";
    return o;
}

Outcome log_convexity() {
    Outcome o;
    const auto seqs = certify_logconvexity_sequences(100);
    for (const auto& s : seqs) o.require(s.passed(), s.claim_id);
    o.require(!seqs.empty(), "no sequences");
    o.detail << seqs.size() << " sequences checked for n = 1..100";
    return o;
}

Outcome determinism(const std::string& bern_path) {
    Outcome o;
    if (bern_path.empty()) {
        o.require(false, "no bern executable given");
        return o;
    }
    const auto dir = std::filesystem::temp_directory_path();
    const auto first = dir / "bern_acceptance_1.json";
    const auto second = dir / "bern_acceptance_2.json";
    for (const auto& f : {first, second}) {
        const std::string cmd = "\"" + bern_path + "\" verify --out \"" + f.string() + "\"";
        o.require(std::system(cmd.c_str()) == 0, "bern verify exit status");
    }
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string a = slurp(first), b = slurp(second);
    o.require(!a.empty() && a == b, "outputs differ");
    o.detail << "two runs, " << a.size() << " bytes each, identical";
    std::filesystem::remove(first);
    std::filesystem::remove(second);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string bern_path = argc > 1 ? argv[1] : "";
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"exact core matches oracles", exact_core},
        {"identity suite", identities},
        {"r_2n zeros and bounds", r2n_zeros},
        {"theorem certificates", theorem_certificates},
        {"sequence and limit checks", sequences_and_limits},
        {"full inequality suite", inequality_suite},
        {"log-convexity", log_convexity},
        {"determinism", [&] { return determinism(bern_path); }},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): " << o.detail.str()
                  << " [" << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    }
    return failed;
}
