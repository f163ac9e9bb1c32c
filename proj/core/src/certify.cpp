#include "bern/certify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "bern/bernoulli.hpp"
#include "bern/parallel.hpp"

namespace bern {

namespace {

const Rational kHalf(1, 2);

Rational parity_sign(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

const Poly& B(unsigned k) { return bernoulli_polynomial(k); }

std::string idx(long k) { return std::to_string(k); }

/// A point strictly inside (lo, hi) where both polynomials are nonzero.
Rational witness(const Rational& lo, const Rational& hi, const Poly& a, const Poly& b) {
    const Rational width = hi - lo;
    for (long den = 2; den < 4096; ++den) {
        for (long num = 1; num < den; ++num) {
            const Rational x = lo + width * Rational(num, den);
            if (a.sign_at(x) != 0 && b.sign_at(x) != 0) return x;
        }
    }
    throw std::logic_error("witness: no admissible point found");
}

Poly strip_endpoint_roots(Poly p, const Rational& lo, const Rational& hi,
                          std::vector<BoundaryFactor>* removed) {
    for (const Rational* e : {&lo, &hi}) {
        auto [q, k] = p.divide_out_root(*e);
        if (k > 0 && removed != nullptr) removed->push_back({*e, k});
        p = std::move(q);
    }
    return p;
}

struct Instance {
    std::string claim;
    std::string label;
    unsigned n;
    std::optional<unsigned> m;
    Poly f;
    Poly g;
    Rational lo;
    Rational hi;
    Direction expected;
};

void add_halves(std::vector<Instance>& out, const std::string& claim, const std::string& label,
                unsigned n, std::optional<unsigned> m, const Poly& f, const Poly& g,
                Direction left, Direction right) {
    out.push_back({claim, label, n, m, f, g, Rational(0), kHalf, left});
    out.push_back({claim, label, n, m, f, g, kHalf, Rational(1), right});
}

std::string sign_prefix(long exponent) { return exponent == 0 ? "" : "(-1)^" + idx(exponent) + " "; }

std::vector<Instance> family_instances(const std::string& id, unsigned N) {
    using D = Direction;
    std::vector<Instance> out;
    if (id == "thm-1.2") {
        for (unsigned n = 1; n <= N; ++n) {
            add_halves(out, id, "B_" + idx(2 * n - 1) + "/B_" + idx(2 * n + 1), n, std::nullopt,
                       B(2 * n - 1), B(2 * n + 1), D::Increasing, D::Decreasing);
        }
    } else if (id == "cor-3.1") {
        for (unsigned n = 2; n <= N; ++n) {
            for (unsigned m = 1; m < n; ++m) {
                const long e = static_cast<long>(n - m);
                add_halves(out, id, sign_prefix(e) + "B_" + idx(2 * m - 1) + "/B_" + idx(2 * n - 1),
                           n, m, parity_sign(e) * B(2 * m - 1), B(2 * n - 1), D::Decreasing,
                           D::Increasing);
            }
        }
    } else if (id == "cor-3.2") {
        for (unsigned n = 2; n <= N; ++n) {
            for (unsigned m = 1; m < n; ++m) {
                const long e = static_cast<long>(n - m);
                const Poly f0 = B(2 * m) - Poly::constant(bernoulli_number(2 * m));
                const Poly g0 = B(2 * n) - Poly::constant(bernoulli_number(2 * n));
                add_halves(out, id,
                           sign_prefix(e) + "(B_" + idx(2 * m) + "(t)-B_" + idx(2 * m) + ")/(B_" +
                               idx(2 * n) + "(t)-B_" + idx(2 * n) + ")",
                           n, m, parity_sign(e) * f0, g0, D::Decreasing, D::Increasing);
                const Poly fh = B(2 * m) - Poly::constant(bernoulli_at_half(2 * m));
                const Poly gh = B(2 * n) - Poly::constant(bernoulli_at_half(2 * n));
                add_halves(out, id,
                           sign_prefix(e) + "(B_" + idx(2 * m) + "(t)-B_" + idx(2 * m) +
                               "(1/2))/(B_" + idx(2 * n) + "(t)-B_" + idx(2 * n) + "(1/2))",
                           n, m, parity_sign(e) * fh, gh, D::Decreasing, D::Increasing);
            }
        }
    } else if (id == "thm-t5") {
        for (unsigned n = 0; n <= N; ++n) {
            add_halves(out, id, "B_" + idx(2 * n) + "/B_" + idx(2 * n + 1), n, std::nullopt,
                       B(2 * n), B(2 * n + 1), D::Decreasing, D::Decreasing);
        }
    } else if (id == "thm-t3") {
        for (unsigned n = 1; n <= N; ++n) {
            for (unsigned m = 0; m < n; ++m) {
                const long e = static_cast<long>(n - m);
                add_halves(out, id, sign_prefix(e) + "B_" + idx(2 * m) + "/B_" + idx(2 * n), n, m,
                           parity_sign(e) * B(2 * m), B(2 * n), D::Decreasing, D::Increasing);
            }
        }
    } else if (id == "thm-t6") {
        for (unsigned n = 1; n <= N; ++n) {
            add_halves(out, id, "B_" + idx(2 * n) + "/B_" + idx(2 * n - 1), n, std::nullopt,
                       B(2 * n), B(2 * n - 1), D::Increasing, D::Increasing);
        }
    } else if (id == "cor-logconcave") {
        for (unsigned n = 0; n <= N; ++n) {
            add_halves(out, id, idx(2 * n + 1) + " B_" + idx(2 * n) + "/B_" + idx(2 * n + 1), n,
                       std::nullopt, Rational(2 * static_cast<long>(n) + 1) * B(2 * n),
                       B(2 * n + 1), D::Decreasing, D::Decreasing);
        }
    } else if (id == "prop-5.1") {
        // |B_2n+1(t)| / |t(1/2-t)(1-t)|, and t(1/2-t)(1-t) = B_3(t).
        for (unsigned n = 2; n <= N; ++n) {
            const long sn = static_cast<long>(n);
            const std::string label = "|B_" + idx(2 * n + 1) + "|/|B_3|";
            out.push_back({id, label, n, std::nullopt, parity_sign(sn + 1) * B(2 * n + 1), B(3),
                           Rational(0), kHalf, D::Increasing});
            out.push_back({id, label, n, std::nullopt, parity_sign(sn) * B(2 * n + 1), -B(3),
                           kHalf, Rational(1), D::Decreasing});
        }
    } else {
        throw std::invalid_argument("unknown certificate family: " + id);
    }
    return out;
}

std::vector<MonotonicityCertificate> run_instances(std::vector<Instance> instances, unsigned jobs) {
    return parallel_map<MonotonicityCertificate>(instances.size(), jobs, [&](std::size_t i) {
        const Instance& in = instances[i];
        MonotonicityCertificate c = certify_ratio_monotone(in.f, in.g, in.lo, in.hi, in.expected);
        c.claim_id = in.claim;
        c.label = in.label;
        c.n = in.n;
        c.m = in.m;
        return c;
    });
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::Increasing ? "increasing" : "decreasing"; }

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Increasing: return "increasing";
        case Conclusion::Decreasing: return "decreasing";
        case Conclusion::Failed: return "failed";
    }
    return "failed";
}

Direction flipped(Direction d) {
    return d == Direction::Increasing ? Direction::Decreasing : Direction::Increasing;
}

bool MonotonicityCertificate::passed() const {
    return (conclusion == Conclusion::Increasing && expected == Direction::Increasing) ||
           (conclusion == Conclusion::Decreasing && expected == Direction::Decreasing);
}

MonotonicityCertificate certify_ratio_monotone(const Poly& f, const Poly& g, const Rational& lo,
                                               const Rational& hi, Direction expected) {
    if (!(lo < hi)) throw std::invalid_argument("certify_ratio_monotone: requires lo < hi");
    if (g.is_zero()) throw std::invalid_argument("certify_ratio_monotone: g is identically zero");

    MonotonicityCertificate c;
    c.f = f;
    c.g = g;
    c.lo = lo;
    c.hi = hi;
    c.expected = expected;
    c.wronskian = f.derivative() * g - f * g.derivative();
    if (c.wronskian.is_zero()) {
        c.notes = "Wronskian vanishes identically: the ratio is constant";
        return c;
    }

    const Poly reduced = strip_endpoint_roots(c.wronskian, lo, hi, &c.boundary);
    bool sign_change = false;
    if (!reduced.is_constant()) {
        const SturmCounter counter(reduced);
        c.interior_root_count = counter.count(lo, hi);
        if (c.interior_root_count > 0) {
            c.wronskian_zeros = isolate_roots(reduced, lo, hi, (hi - lo) * Rational::power_of_two(-24),
                                              "W");
            const int s0 = reduced.sign_at(lo);
            for (const auto& z : c.wronskian_zeros) {
                if (reduced.sign_at(z.lo) != s0 || reduced.sign_at(z.hi) != s0) sign_change = true;
            }
            if (reduced.sign_at(hi) != s0) sign_change = true;
        }
    }

    c.witness_point = witness(lo, hi, c.wronskian, g);
    c.witness_sign = c.wronskian.sign_at(c.witness_point);

    const Poly g_inner = strip_endpoint_roots(g, lo, hi, nullptr);
    if (!g_inner.is_constant()) {
        c.denominator_zero_locations =
            isolate_roots(g_inner, lo, hi, (hi - lo) * Rational::power_of_two(-32), "g");
    }

    if (sign_change) {
        c.conclusion = Conclusion::Failed;
        c.notes = "Wronskian changes sign inside the interval";
    } else {
        c.conclusion = c.witness_sign > 0 ? Conclusion::Increasing : Conclusion::Decreasing;
        if (c.interior_root_count > 0) c.notes = "Wronskian has interior zeros of even multiplicity only";
    }
    return c;
}

const std::vector<std::string>& theorem_family_ids() {
    static const std::vector<std::string> ids = {"thm-1.2", "cor-3.1",        "cor-3.2", "thm-t5",
                                                 "thm-t3",  "thm-t6", "cor-logconcave", "prop-5.1"};
    return ids;
}

std::vector<MonotonicityCertificate> certify_family(const std::string& id, unsigned n_max,
                                                    unsigned jobs) {
    return run_instances(family_instances(id, n_max), jobs);
}

std::vector<MonotonicityCertificate> certify_theorem_suite(unsigned n_max, unsigned jobs) {
    if (n_max < 2) throw std::invalid_argument("certify_theorem_suite: n_max must be >= 2");
    std::vector<Instance> all;
    for (const auto& id : theorem_family_ids()) {
        auto part = family_instances(id, n_max);
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return run_instances(std::move(all), jobs);
}

std::vector<MonotonicityCertificate> certify_logconcavity_odd(unsigned n_max, unsigned jobs) {
    return certify_family("cor-logconcave", n_max, jobs);
}

// ---------------------------------------------------------------------------

const char* to_string(SequenceClaim c) { return c == SequenceClaim::T5 ? "T5_seq" : "T6_seq"; }

const char* to_string(SequenceConclusion c) {
    switch (c) {
        case SequenceConclusion::Increasing: return "increasing";
        case SequenceConclusion::Decreasing: return "decreasing";
        case SequenceConclusion::LogConvex: return "log-convex";
        case SequenceConclusion::LogConcave: return "log-concave";
        case SequenceConclusion::Failed: return "failed";
    }
    return "failed";
}

namespace {

bool relation_holds(const Rational& a, const Rational& b, char rel) {
    switch (rel) {
        case '<': return a < b;
        case '>': return a > b;
        case 'L': return a <= b;
        case 'G': return a >= b;
        default: throw std::logic_error("unknown relation");
    }
}

/// Strict monotonicity of terms[k] = a_{n0 + k}.
SequenceCertificate monotone_certificate(std::string id, std::optional<Rational> t, unsigned n0,
                                         const std::vector<Rational>& terms,
                                         SequenceConclusion expected) {
    SequenceCertificate cert;
    cert.claim_id = std::move(id);
    cert.t = std::move(t);
    cert.n_lo = n0;
    cert.n_hi = n0 + static_cast<unsigned>(terms.size()) - 1;
    cert.expected = expected;
    const char rel = expected == SequenceConclusion::Increasing ? '<' : '>';
    bool all_up = true;
    bool all_down = true;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const Rational& a = terms[k - 1];
        const Rational& b = terms[k];
        all_up = all_up && a < b;
        all_down = all_down && a > b;
        cert.comparisons.push_back({n0 + static_cast<unsigned>(k), a, b, rel, relation_holds(a, b, rel)});
    }
    cert.conclusion = all_up ? SequenceConclusion::Increasing
                     : all_down ? SequenceConclusion::Decreasing
                                : SequenceConclusion::Failed;
    return cert;
}

/// a_n^2 <= a_{n-1} a_{n+1} (convex) or >= (concave) for terms[k] = a_{n0 + k}.
SequenceCertificate log_certificate(std::string id, unsigned n0, const std::vector<Rational>& terms,
                                    bool convex) {
    SequenceCertificate cert;
    cert.claim_id = std::move(id);
    cert.n_lo = n0;
    cert.n_hi = n0 + static_cast<unsigned>(terms.size()) - 1;
    cert.expected = convex ? SequenceConclusion::LogConvex : SequenceConclusion::LogConcave;
    const char rel = convex ? 'L' : 'G';
    bool ok = true;
    for (std::size_t k = 1; k + 1 < terms.size(); ++k) {
        const Rational lhs = terms[k] * terms[k];
        const Rational rhs = terms[k - 1] * terms[k + 1];
        const bool holds = terms[k].sign() > 0 && relation_holds(lhs, rhs, rel);
        ok = ok && holds;
        cert.comparisons.push_back({n0 + static_cast<unsigned>(k), lhs, rhs, rel, holds});
    }
    cert.conclusion = ok ? cert.expected : SequenceConclusion::Failed;
    return cert;
}

void check_sequence_point(const Rational& t) {
    if (t.sign() <= 0 || t >= Rational(1) || t == kHalf) {
        throw std::invalid_argument("sequence check: t must lie in (0,1/2) or (1/2,1), got " +
                                    t.to_string());
    }
}

}  // namespace

SequenceCertificate certify_sequence_in_n(const Rational& t, SequenceClaim claim, unsigned n_max) {
    check_sequence_point(t);
    if (n_max < 1) throw std::invalid_argument("certify_sequence_in_n: n_max must be >= 1");
    const bool left = t < kHalf;
    std::vector<Rational> terms;
    unsigned n0 = 0;
    SequenceConclusion expected;
    if (claim == SequenceClaim::T5) {
        for (unsigned n = 0; n <= n_max; ++n) {
            const Rational den = B(2 * n + 1).evaluate(t);
            if (den.is_zero()) {
                throw std::invalid_argument("T5_seq: B_" + idx(2 * n + 1) + " vanishes at t = " +
                                            t.to_string());
            }
            terms.push_back(Rational(2 * static_cast<long>(n) + 1) * B(2 * n).evaluate(t) / den);
        }
        expected = left ? SequenceConclusion::Increasing : SequenceConclusion::Decreasing;
    } else {
        n0 = 1;
        for (unsigned n = 1; n <= n_max; ++n) {
            const Rational den = Rational(static_cast<long>(n)) * B(2 * n - 1).evaluate(t);
            if (den.is_zero()) {
                throw std::invalid_argument("T6_seq: B_" + idx(2 * n - 1) + " vanishes at t = " +
                                            t.to_string());
            }
            terms.push_back(B(2 * n).evaluate(t) / den);
        }
        expected = left ? SequenceConclusion::Decreasing : SequenceConclusion::Increasing;
    }
    return monotone_certificate(to_string(claim), t, n0, terms, expected);
}

std::vector<Rational> sequence_grid(unsigned points) {
    std::vector<Rational> grid;
    for (unsigned k = 1; k <= points; ++k) {
        grid.emplace_back(static_cast<long>(k), 2 * static_cast<long>(points) + 1);
    }
    return grid;
}

std::vector<SequenceCertificate> certify_logconvexity_sequences(unsigned n_max) {
    if (n_max < 3) throw std::invalid_argument("certify_logconvexity_sequences: n_max must be >= 3");
    std::vector<Rational> b, h, z, eta, absb;
    for (unsigned n = 1; n <= n_max; ++n) {
        const Rational fact(factorial(2 * n));
        b.push_back(bernoulli_number(2 * n).abs() / fact);
        h.push_back(bernoulli_at_half(2 * n).abs() / fact);
        const Rational c = zeta_even_coefficient(n);
        z.push_back(c);
        eta.push_back((Rational(1) - Rational::power_of_two(1 - 2 * static_cast<long>(n))) * c);
    }
    std::vector<Rational> ratios;
    for (unsigned n = 0; n <= n_max; ++n) {
        absb.push_back(bernoulli_number(2 * n).abs());
        ratios.push_back((bernoulli_number(2 * n + 2) / bernoulli_number(2 * n)).abs());
    }
    std::vector<SequenceCertificate> out;
    out.push_back(log_certificate("abs-B2n-over-factorial-log-convex", 1, b, true));
    out.push_back(log_certificate("abs-B2n-half-over-factorial-log-concave", 1, h, false));
    out.push_back(log_certificate("zeta-even-log-convex", 1, z, true));
    out.push_back(log_certificate("eta-even-log-concave", 1, eta, false));
    out.push_back(monotone_certificate("abs-B2n-ratio-increasing", std::nullopt, 0, ratios,
                                       SequenceConclusion::Increasing));
    out.push_back(log_certificate("abs-B2n-log-convex", 0, absb, true));
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(LimitClaim c) {
    switch (c) {
        case LimitClaim::Ratio2n2n1: return "ratio_2n_2n1";
        case LimitClaim::Ratio2n2nm1: return "ratio_2n_2nm1";
        case LimitClaim::Asymptotic: return "asymptotic_24_11_5";
    }
    return "";
}

LimitClaim parse_limit_claim(const std::string& name) {
    for (auto c : {LimitClaim::Ratio2n2n1, LimitClaim::Ratio2n2nm1, LimitClaim::Asymptotic}) {
        if (name == to_string(c)) return c;
    }
    throw std::invalid_argument("unknown limit claim: " + name);
}

const char* to_string(LimitStatus s) {
    switch (s) {
        case LimitStatus::WithinTolerance: return "within_tolerance";
        case LimitStatus::OutsideTolerance: return "outside_tolerance";
        case LimitStatus::Undecided: return "undecided";
    }
    return "undecided";
}

bool LimitReport::decreasing_from(unsigned from) const {
    for (unsigned r = 0; r < stride; ++r) {
        const unsigned cls = n_lo + r;
        unsigned first = cls;
        while (first < from) first += stride;
        if (first > n_max) continue;
        const auto& m = monotone_from[r];
        if (!m || *m > first) return false;
    }
    return true;
}

const LimitSample& LimitReport::sample(unsigned n) const {
    if (n < n_lo || n > n_max) throw std::out_of_range("LimitReport::sample: index out of range");
    return samples[n - n_lo];
}

namespace {

/// pi^k, with enough working precision that the relative error stays below 2^-bits.
Quantity pi_power(unsigned k) {
    return Quantity(Quantity::Encloser([k](int bits) {
        const int extra = 8 + static_cast<int>(std::bit_width(k));
        const RationalInterval p = pi_enclosure(bits + extra);
        return RationalInterval(p.lo().pow(k), p.hi().pow(k)).round_outward(bits + 4);
    }));
}

}  // namespace

LimitReport check_limit(LimitClaim claim, const Rational& t, unsigned n_max, const Rational& tol,
                        int bits) {
    if (t.sign() <= 0 || t >= Rational(1) || t == kHalf) {
        throw std::invalid_argument("check_limit: t must lie in (0,1) with t != 1/2");
    }
    LimitReport rep;
    rep.claim = claim;
    rep.t = t;
    rep.tol = tol;
    rep.n_lo = claim == LimitClaim::Asymptotic ? 2 : 1;
    rep.n_max = n_max;
    rep.stride = claim == LimitClaim::Asymptotic ? 2 : 1;
    if (n_max < rep.n_lo) throw std::invalid_argument("check_limit: n_max too small");

    const Quantity pi = Quantity::pi();
    switch (claim) {
        case LimitClaim::Ratio2n2n1: rep.limit = Quantity(2) * pi * Quantity::cot_two_pi(t); break;
        case LimitClaim::Ratio2n2nm1: rep.limit = -Quantity::cot_two_pi(t) / pi; break;
        case LimitClaim::Asymptotic: rep.limit = Quantity(0); break;  // per-n target below
    }

    for (unsigned n = rep.n_lo; n <= n_max; ++n) {
        LimitSample s;
        s.n = n;
        if (claim == LimitClaim::Ratio2n2n1) {
            s.term = Quantity(Rational(2 * static_cast<long>(n) + 1) * B(2 * n).evaluate(t) /
                              B(2 * n + 1).evaluate(t));
            s.gap = (s.term - rep.limit).abs();
        } else if (claim == LimitClaim::Ratio2n2nm1) {
            s.term = Quantity(B(2 * n).evaluate(t) /
                              (Rational(static_cast<long>(n)) * B(2 * n - 1).evaluate(t)));
            s.gap = (s.term - rep.limit).abs();
        } else {
            const long sn = static_cast<long>(n);
            const Rational coeff = parity_sign(sn / 2 - 1) * Rational::power_of_two(sn - 1) /
                                   Rational(factorial(n)) * B(n).evaluate(t);
            s.term = Quantity(coeff) * pi_power(n);
            const Quantity target = n % 2 == 0 ? Quantity::cos_two_pi(t) : Quantity::sin_two_pi(t);
            s.gap = (s.term / target - Quantity(1)).abs();
        }
        s.gap_enclosure = s.gap.enclose(bits);
        rep.samples.push_back(std::move(s));
    }

    const ComparisonOutcome final_cmp = compare(rep.samples.back().gap, Quantity(tol), bits);
    rep.precision_used = final_cmp.precision_used;
    rep.status = final_cmp.verdict == Verdict::Less      ? LimitStatus::WithinTolerance
                 : final_cmp.verdict == Verdict::Greater ? LimitStatus::OutsideTolerance
                                                         : LimitStatus::Undecided;

    rep.monotone_from.assign(rep.stride, std::nullopt);
    for (unsigned r = 0; r < rep.stride; ++r) {
        unsigned last = rep.n_lo + r;
        if (last > n_max) continue;
        while (last + rep.stride <= n_max) last += rep.stride;
        unsigned from = last;
        while (from >= rep.n_lo + rep.stride) {
            const ComparisonOutcome c =
                compare(rep.sample(from).gap, rep.sample(from - rep.stride).gap, bits);
            rep.precision_used = std::max(rep.precision_used, c.precision_used);
            if (c.verdict == Verdict::Undecided) ++rep.undecided_comparisons;
            if (c.verdict != Verdict::Less) break;
            from -= rep.stride;
        }
        rep.monotone_from[r] = from;
    }
    return rep;
}

}  // namespace bern
