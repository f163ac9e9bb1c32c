#include "bern/inequalities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "bern/bernoulli.hpp"
#include "bern/certify.hpp"
#include "bern/parallel.hpp"
#include "bern/poly.hpp"
#include "bern/roots.hpp"

namespace bern {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

long L(unsigned n) { return static_cast<long>(n); }
Rational sign_pow(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }
Rational two_pow(long e) { return Rational::power_of_two(e); }
Rational abs_b(unsigned k) { return bernoulli_number(k).abs(); }
Rational b_at(unsigned k, const Rational& t) { return bernoulli_polynomial(k).evaluate(t); }
/// 1 - 2^{1-2n}
Rational alpha(unsigned n) { return Rational(1) - two_pow(1 - 2 * L(n)); }

Quantity pi_squared() {
    static const Quantity q = Quantity::pi() * Quantity::pi();
    return q;
}

struct Part {
    std::string name;
    Quantity lhs;
    Quantity rhs;
    bool strict = true;
    bool counterexample = false;
    std::string note;
};

Part lt(std::string name, Quantity a, Quantity b, std::string note = {}) {
    return {std::move(name), std::move(a), std::move(b), true, false, std::move(note)};
}
Part le(std::string name, Quantity a, Quantity b, std::string note = {}) {
    return {std::move(name), std::move(a), std::move(b), false, false, std::move(note)};
}
Part counterexample(Part p) {
    p.counterexample = true;
    return p;
}

using Parts = std::vector<Part>;
using PartFn = std::function<Parts(unsigned n, const Rational* t)>;
using DomainFn = std::function<bool(const Rational&)>;

struct ClaimDef {
    ClaimRegistryEntry entry;
    DomainFn domain;
    PartFn parts;
};

bool off_half(const Rational& t) { return t.sign() > 0 && t < Rational(1) && t != kHalf; }
bool left_half(const Rational& t) { return t.sign() > 0 && t < kHalf; }
bool left_half_off_quarter(const Rational& t) { return left_half(t) && t != kQuarter; }

/// A sup-norm value as a Quantity: exact when the enclosure collapses to a point.
Quantity supnorm_quantity(unsigned n, SupnormKind which) {
    const RationalInterval first = supnorm_bound(n, which, kDefaultBits);
    if (first.is_point()) return {first.lo()};
    return Quantity([n, which](int bits) { return supnorm_bound(n, which, bits); });
}

// Bounds of |B_2n+2 / B_2n| are c or c / pi^2 with c rational; orderings of two
// bounds of the same shape compare the coefficients only.
struct RatioBound {
    Rational c;
    bool over_pi2 = false;
    [[nodiscard]] Quantity value() const {
        return over_pi2 ? Quantity(c) / pi_squared() : Quantity(c);
    }
};

struct RatioBounds {
    RatioBound l9, u9, l10, u10, u11, l12, u12, l13, u13;
};

RatioBounds ratio_bounds(unsigned n) {
    const Rational x = Rational((L(n) + 1) * (2 * L(n) + 1));
    auto q = [n](long shift) { return two_pow(2 * L(n) + shift); };
    RatioBounds b;
    b.l9 = {q(2) / (q(2) - 1) * x / Rational(32), false};
    b.u9 = {(q(2) - 8) / (q(2) - 1) * x / Rational(8), false};
    b.l10 = {(q(0) - 2) / (q(1) - 1) * x, true};
    b.u10 = {(q(1) - 2) / (q(2) - 1) * x, true};
    b.u11 = {q(1) / (q(2) - 1) * x, true};
    b.l12 = b.l10;
    b.u12 = {x / Rational(2), true};
    b.l13 = {q(3) * (q(-1) - 1) / ((q(2) - 1) * (q(1) - 1)) * x, true};
    b.u13 = {two_pow(4 * L(n) + 2) / ((q(2) - 1) * (q(1) + 1)) * x, true};
    return b;
}

Part ordering(std::string name, const RatioBound& smaller, const RatioBound& larger) {
    if (smaller.over_pi2 == larger.over_pi2) {
        return le(std::move(name), smaller.c, larger.c,
                  smaller.over_pi2 ? "common factor 1/pi^2 cancelled" : "");
    }
    return le(std::move(name), smaller.value(), larger.value());
}

Rational ratio_abs(unsigned n) { return (bernoulli_number(2 * n + 2) / bernoulli_number(2 * n)).abs(); }

// ---------------------------------------------------------------------------
// Claims

Parts r1(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Rational x = b_at(2 * n + 1, t).abs() / (t * (kHalf - t) * (Rational(1) - t));
    const Rational lo = Rational(2 * (2 * L(n) + 1)) * abs_b(2 * n);
    const Rational hi = Rational(4 * (2 * L(n) + 1)) * alpha(n) * abs_b(2 * n);
    if (t < kHalf) return {lt("lower", lo, x), lt("upper", x, hi)};
    return {lt("lower", -hi, x, "mirrored bounds on (1/2,1)"),
            lt("upper", x, -lo, "mirrored bounds on (1/2,1)")};
}

Parts r2(unsigned n, const Rational* tp) {
    const Rational lhs = b_at(2 * n + 1, *tp).abs();
    const Rational c = alpha(n) * Rational(2 * L(n) + 1) * abs_b(2 * n) / Rational(9);
    return {lt("upper", lhs, Quantity::sqrt(Rational(3)) * Quantity(c))};
}

Parts r3(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Quantity s = t < kHalf ? Quantity::sin_two_pi(t) : -Quantity::sin_two_pi(t);
    const Quantity c = Quantity(Rational(2 * L(n) + 1) * abs_b(2 * n)) / (Quantity(2) * Quantity::pi());
    const Rational mid = b_at(2 * n + 1, t).abs();
    const std::string note = t < kHalf ? "" : "|sin| on (1/2,1)";
    Part upper = lt("upper", mid, c * s, note);
    if (n == 0) upper = counterexample(std::move(upper));
    return {lt("lower", Quantity(alpha(n)) * c * s, mid, note), std::move(upper)};
}

Parts r4(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Rational v = sign_pow(L(n) + 1) * b_at(2 * n, t);
    const Quantity c = Quantity::cos_two_pi(t);
    if (t < kQuarter) return {lt("first-quarter", v, Quantity(abs_b(2 * n)) * c)};
    return {lt("second-quarter", v, Quantity(alpha(n) * abs_b(2 * n)) * c)};
}

Parts r5(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Rational one(1);
    const Rational weight = one - two_pow(-2 * L(n));
    const Rational bn = b_at(2 * n, t);
    const Rational n2 = Rational(L(n) * (2 * L(n) - 1));
    Parts out;
    if (n >= 3) {
        const Rational y = sign_pow(L(n)) * (bn - bernoulli_number(2 * n)) / (t * t * (one - t) * (one - t));
        out.push_back(lt("about-zero-lower", n2 * abs_b(2 * n - 2), y));
        out.push_back(lt("about-zero-upper", y, Rational(32) * weight * abs_b(2 * n)));
    }
    const Rational d = t - kHalf;
    const Rational z = sign_pow(L(n) + 1) * (bn - bernoulli_at_half(2 * n)) / (d * d);
    out.push_back(lt("about-half-lower", Rational(8) * weight * abs_b(2 * n), z));
    out.push_back(lt("about-half-upper", z, n2 * (one - two_pow(3 - 2 * L(n))) * abs_b(2 * n - 2)));
    return out;
}

Parts r6(unsigned n, const Rational*) {
    return {le("sup", supnorm_quantity(n, SupnormKind::EvenDiff),
               (Rational(2) - two_pow(1 - 2 * L(n))) * abs_b(2 * n))};
}

Parts r7(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Rational one(1);
    const Rational weight = one - two_pow(-2 * L(n));
    const Rational v = sign_pow(L(n) + 1) * b_at(2 * n, t);
    const Rational u = t * (one - t);
    const Rational bound_one = (one - Rational(32) * weight * u * u) * abs_b(2 * n);
    const Rational d = t - kHalf;
    const Rational bound_two = (Rational(8) * weight * d * d - alpha(n)) * abs_b(2 * n);
    Parts out;
    if (n >= 3) out.push_back(lt("lower-one", bound_one, v));
    if (n >= 2) out.push_back(lt("lower-two", bound_two, v));
    out.push_back(lt("ordering", bound_two, bound_one,
                     n < 3 ? "bounds compared as formulas below the displayed range n >= 3" : ""));
    return out;
}

Parts r8(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Rational one(1);
    const Rational v = sign_pow(L(n) + 1) * b_at(2 * n, t);
    const Quantity c = Quantity::cos_two_pi(t);
    const Quantity k = Quantity(Rational(L(n) * (2 * L(n) - 1)) * abs_b(2 * n - 2)) /
                       (Quantity(2) * pi_squared());
    const Rational four_n = two_pow(2 * L(n));
    const Quantity lower_a =
        k * Quantity(one - two_pow(3 - 2 * L(n))) * (Quantity(1) + c) - Quantity(alpha(n) * abs_b(2 * n));
    const Quantity upper_a =
        (Quantity(1) + Quantity(four_n - one) * c) / Quantity(four_n) * Quantity(abs_b(2 * n));
    const Quantity single_b = Quantity(abs_b(2 * n)) - k * (Quantity(1) - c);
    Parts out;
    out.push_back(lt("cos-lower", lower_a, v));
    out.push_back(lt("cos-upper", v, upper_a));
    if (n >= 2) {
        out.push_back(lt("cos-single", single_b, v));
    } else {
        out.push_back(lt("cos-single", v, single_b, "reversed at n = 1"));
    }
    if (t < kQuarter) {
        out.push_back(lt("upper-vs-first-quarter", Quantity(abs_b(2 * n)) * c, upper_a));
    } else if (kQuarter < t && t < kHalf) {
        out.push_back(lt("upper-vs-second-quarter", Quantity(alpha(n) * abs_b(2 * n)) * c, upper_a));
    }
    return out;
}

Parts r9(unsigned n, const Rational*) {
    const RatioBounds b = ratio_bounds(n);
    const Rational r = ratio_abs(n);
    Parts out{le("lower", b.l9.c, r), le("upper", r, b.u9.c)};
    return out;
}

Parts r10(unsigned n, const Rational*) {
    const RatioBounds b = ratio_bounds(n);
    const Rational r = ratio_abs(n);
    return {lt("lower", b.l10.value(), r), lt("upper", r, b.u10.value())};
}

Parts r11(unsigned n, const Rational*) {
    return {lt("upper", ratio_abs(n), ratio_bounds(n).u11.value())};
}

Parts r12(unsigned n, const Rational*) {
    const RatioBounds b = ratio_bounds(n);
    const Rational r = ratio_abs(n);
    return {lt("lower", b.l12.value(), r), lt("upper", r, b.u12.value())};
}

Parts r13(unsigned n, const Rational*) {
    const RatioBounds b = ratio_bounds(n);
    const Rational r = ratio_abs(n);
    Parts out{le("lower", b.l13.value(), r)};
    if (n >= 1) out.push_back(le("upper", r, b.u13.value()));
    return out;
}

Parts r14(unsigned n, const Rational* tp) {
    const Rational& t = *tp;
    const Rational one(1);
    const Rational quad = Rational(6) * t * t - Rational(6) * t + one;
    const Rational m1 = Rational(2 * L(n) + 1) * b_at(2 * n, t) / b_at(2 * n + 1, t);
    const Rational l1 = quad / (t * (Rational(2) * t - one) * (t - one));
    const Quantity u1 = Quantity(2) * Quantity::pi() * Quantity::cot_two_pi(t);
    const Rational m2 = -b_at(2 * n, t) / (Rational(L(n)) * b_at(2 * n - 1, t));
    const Rational l2 = quad / (Rational(3) * (one - Rational(2) * t));
    const Quantity u2 = Quantity::cot_two_pi(t) / Quantity::pi();
    if (t < kHalf) {
        return {le("odd-ratio-lower", l1, m1), lt("odd-ratio-upper", m1, u1),
                le("even-ratio-lower", l2, m2), lt("even-ratio-upper", m2, u2)};
    }
    const std::string note = "reversed on (1/2,1)";
    return {le("odd-ratio-lower", m1, l1, note), lt("odd-ratio-upper", u1, m1, note),
            le("even-ratio-lower", m2, l2, note), lt("even-ratio-upper", u2, m2, note)};
}

Parts r15(unsigned n, const Rational*) {
    const Quantity c = Quantity(Rational(2 * L(n) + 1) * abs_b(2 * n)) / (Quantity(2) * Quantity::pi());
    const Rational quarter = bernoulli_at_quarter(2 * n + 1).abs();
    const Rational one(1);
    Parts out;
    if (n >= 1) out.push_back(lt("sup", supnorm_quantity(n, SupnormKind::OddPoly), c));
    out.push_back(lt("quarter-lower", Quantity(one - two_pow(1 - 2 * L(n))) * c, quarter));
    Part upper = lt("quarter-upper", quarter, c);
    if (n == 0) upper = counterexample(std::move(upper));
    out.push_back(std::move(upper));
    if (n >= 1) {
        out.push_back(le("quarter-weaker", Quantity(one - two_pow(2 - 2 * L(n))) * c, quarter));
        out.push_back(le("quarter-improvement", one - two_pow(2 - 2 * L(n)), one - two_pow(1 - 2 * L(n))));
    }
    return out;
}

Parts r16(unsigned n, const Rational*) {
    const RatioBounds b = ratio_bounds(n);
    Parts out{
        ordering("lower-R9<=lower-R10", b.l9, b.l10),
        ordering("upper-R10<=upper-R9", b.u10, b.u9),
        ordering("upper-R10<=upper-R11", b.u10, b.u11),
        ordering("upper-R11<=upper-R9", b.u11, b.u9),
        ordering("lower-R10<=lower-R12", b.l10, b.l12),
        ordering("lower-R9<=lower-R12", b.l9, b.l12),
        ordering("upper-R12<=upper-R9", b.u12, b.u9),
        ordering("upper-R12<=upper-R11", b.u12, b.u11),
        ordering("upper-R10<=upper-R12", b.u10, b.u12),
        ordering("lower-R9<=lower-R13", b.l9, b.l13),
        ordering("lower-R10<=lower-R13", b.l10, b.l13),
        ordering("lower-R12<=lower-R13", b.l12, b.l13),
        ordering("upper-R13<=upper-R9", b.u13, b.u9),
        ordering("upper-R13<=upper-R11", b.u13, b.u11),
        ordering("upper-R13<=upper-R12", b.u13, b.u12),
        ordering("upper-R10<=upper-R13", b.u10, b.u13),
    };
    if (n == 1) {
        for (Part& p : out) {
            if (p.name.rfind("lower-R9<=", 0) == 0) {
                p = counterexample(std::move(p));
                p.note = "stated exception at n = 1";
            }
        }
    }
    return out;
}

Parts r17(unsigned n, const Rational*) {
    const Rational a(L(n) * (2 * L(n) - 1));
    const Rational b((L(n) + 1) * (2 * L(n) + 1));
    const Rational prev = bernoulli_number(2 * n) / (a * bernoulli_number(2 * n - 2));
    const Rational next = bernoulli_number(2 * n + 2) / (b * bernoulli_number(2 * n));
    const Rational h_prev = bernoulli_at_half(2 * n) / (a * bernoulli_at_half(2 * n - 2));
    const Rational h_next = bernoulli_at_half(2 * n + 2) / (b * bernoulli_at_half(2 * n));
    const Quantity limit = -Quantity(1) / (Quantity(2) * pi_squared());
    return {le("numbers-left", next, prev), le("numbers-right", limit, next),
            le("half-left", h_prev, h_next), le("half-right", h_next, limit)};
}

ClaimRegistryEntry make_entry(std::string id, ClaimKind kind, unsigned n_lo, std::string domain,
                              bool transcendental, std::string reversal, std::string statement) {
    ClaimRegistryEntry e;
    e.id = std::move(id);
    e.kind = kind;
    e.n_lo = n_lo;
    e.t_domain = std::move(domain);
    e.transcendental = transcendental;
    e.reversal_cases = std::move(reversal);
    e.statement = std::move(statement);
    return e;
}

const std::vector<ClaimDef>& definitions() {
    using K = ClaimKind;
    static const std::vector<ClaimDef> defs = [] {
        std::vector<ClaimDef> d;
        d.push_back({make_entry("R1", K::PointwiseDouble, 2, "(0,1/2) u (1/2,1)", false,
                                "bounds negated and swapped on (1/2,1)",
                                "2(2n+1)|B_2n| < |B_2n+1(t)|/(t(1/2-t)(1-t)) < "
                                "4(1-1/2^(2n-1))(2n+1)|B_2n|"),
                     off_half, r1});
        d.push_back({make_entry("R2", K::PointwiseSingle, 2, "(0,1/2)", true, "",
                                "|B_2n+1(t)| < sqrt(3)/9 (1-1/2^(2n-1))(2n+1)|B_2n|"),
                     left_half, r2});
        d.push_back({make_entry("R3", K::PointwiseDouble, 0, "(0,1/2) u (1/2,1)", true,
                                "sin replaced by |sin| on (1/2,1); upper side fails at n = 0",
                                "(1-1/2^(2n-1))(2n+1)/(2pi)|B_2n| sin(2pi t) < |B_2n+1(t)| < "
                                "(2n+1)/(2pi)|B_2n| sin(2pi t)"),
                     off_half, r3});
        d.push_back({make_entry("R4", K::PointwiseSingle, 0, "(0,1/4) u (1/4,1/2)", true,
                                "weight 1-1/2^(2n-1) on (1/4,1/2)",
                                "(-1)^(n+1) B_2n(t) < |B_2n| cos(2pi t)"),
                     left_half_off_quarter, r4});
        d.push_back({make_entry("R5", K::PointwiseDouble, 2, "(0,1/2) u (1/2,1)", false,
                                "expansion about 0 needs n >= 3",
                                "n(2n-1)|B_2n-2| < (-1)^n (B_2n(t)-B_2n)/(t^2(1-t)^2) < "
                                "32(1-1/2^(2n))|B_2n|, and the expansion about 1/2"),
                     off_half, r5});
        d.push_back({make_entry("R6", K::Supnorm, 1, "[0,1]", false, "",
                                "|B_2n(t)-B_2n| <= (2-1/2^(2n-1))|B_2n|"),
                     nullptr, r6});
        d.push_back({make_entry("R7", K::PointwiseSingle, 1, "(0,1/2) u (1/2,1)", false,
                                "first bound needs n >= 3, second n >= 2; ordering from n = 1",
                                "(-1)^(n+1) B_2n(t) > [1-32(1-1/2^(2n)) t^2(1-t)^2]|B_2n| and "
                                "> [8(1-1/2^(2n))(t-1/2)^2-(1-1/2^(2n-1))]|B_2n|"),
                     off_half, r7});
        d.push_back({make_entry("R8", K::PointwiseDouble, 1, "(0,1/2) u (1/2,1)", true,
                                "single bound reversed at n = 1",
                                "cos-based bounds on (-1)^(n+1) B_2n(t)"),
                     off_half, r8});
        d.push_back({make_entry("R9", K::ScalarDouble, 1, "", false, "equality on the left at n = 1",
                                "2^(2n+2)/(2^(2n+2)-1) (n+1)(2n+1)/32 <= |B_2n+2/B_2n| <= "
                                "(2^(2n+2)-8)/(2^(2n+2)-1) (n+1)(2n+1)/8"),
                     nullptr, r9});
        d.push_back({make_entry("R10", K::ScalarDouble, 1, "", true, "",
                                "(2^(2n)-2)/(2^(2n+1)-1) (n+1)(2n+1)/pi^2 < |B_2n+2/B_2n| < "
                                "(2^(2n+1)-2)/(2^(2n+2)-1) (n+1)(2n+1)/pi^2"),
                     nullptr, r10});
        d.push_back({make_entry("R11", K::ScalarSingle, 1, "", true, "",
                                "|B_2n+2/B_2n| < 2^(2n+1)/(2^(2n+2)-1) (n+1)(2n+1)/pi^2"),
                     nullptr, r11});
        d.push_back({make_entry("R12", K::ScalarDouble, 1, "", true, "",
                                "(2^(2n)-2)/(2^(2n+1)-1) (n+1)(2n+1)/pi^2 < |B_2n+2/B_2n| < "
                                "(n+1)(2n+1)/(2pi^2)"),
                     nullptr, r12});
        d.push_back({make_entry("R13", K::ScalarDouble, 0, "", true, "lower side also at n = 0",
                                "2^(2n+3)(2^(2n-1)-1)/((2^(2n+2)-1)(2^(2n+1)-1)) (n+1)(2n+1)/pi^2 "
                                "<= |B_2n+2/B_2n| <= "
                                "2^(4n+2)/((2^(2n+2)-1)(2^(2n+1)+1)) (n+1)(2n+1)/pi^2"),
                     nullptr, r13});
        d.push_back({make_entry("R14", K::PointwiseDouble, 1, "(0,1/2) u (1/2,1)", true,
                                "both chains reverse on (1/2,1)",
                                "(6t^2-6t+1)/(t(2t-1)(t-1)) <= (2n+1)B_2n(t)/B_2n+1(t) < 2pi cot(2pi t)"
                                " and (6t^2-6t+1)/(3(1-2t)) <= -B_2n(t)/(n B_2n-1(t)) < cot(2pi t)/pi"),
                     off_half, r14});
        d.push_back({make_entry("R15", K::Supnorm, 0, "[0,1] and t = 1/4", true,
                                "t = 1/4 upper side fails at n = 0",
                                "sup |B_2n+1(t)| < (2n+1)/(2pi)|B_2n| and (1-2/2^(2n))(2n+1)/(2pi)|B_2n| "
                                "< |B_2n+1(1/4)| < (2n+1)/(2pi)|B_2n|"),
                     nullptr, r15});
        d.push_back({make_entry("R16", K::Ordering, 1, "", true,
                                "lower bound of R9 is the largest at n = 1",
                                "orderings among the bounds of R9 to R13"),
                     nullptr, r16});
        d.push_back({make_entry("R17", K::ScalarDouble, 1, "", true, "",
                                "B_2n/(n(2n-1)B_2n-2) >= B_2n+2/((n+1)(2n+1)B_2n) >= -1/(2pi^2), and the "
                                "reverse chain for B_2n(1/2)"),
                     nullptr, r17});
        return d;
    }();
    return defs;
}

const ClaimDef& definition(const std::string& id) {
    for (const ClaimDef& d : definitions()) {
        if (d.entry.id == id) return d;
    }
    throw std::invalid_argument("unknown claim id: " + id);
}

struct TaskResult {
    std::vector<InstanceRecord> records;
    std::size_t enclosure_calls = 0;
    std::size_t escalations = 0;
};

InstanceRecord check_part(const std::string& id, unsigned n, const std::optional<Rational>& t,
                          const Part& p, int bits, std::size_t& escalations) {
    InstanceRecord r;
    r.claim_id = id;
    r.part = p.name;
    r.n = n;
    r.t = t;
    r.relation = p.strict ? "<" : "<=";
    r.notes = p.note;
    const ComparisonOutcome out = compare(p.lhs, p.rhs, bits, kMaxBits);
    r.precision_bits = out.precision_used;
    if (out.precision_used > bits) ++escalations;
    const int shown = out.precision_used > 0 ? out.precision_used : bits;
    r.lhs = p.lhs.to_string(shown);
    r.rhs = p.rhs.to_string(shown);

    const bool holds =
        out.verdict == Verdict::Less || (!p.strict && out.verdict == Verdict::Equal);
    const bool violated =
        out.verdict == Verdict::Greater || (p.strict && out.verdict == Verdict::Equal);
    auto add_note = [&r](const std::string& s) { r.notes += (r.notes.empty() ? "" : "; ") + s; };
    if (out.verdict == Verdict::Undecided) {
        r.status = InstanceStatus::Undecided;
        add_note("undecided at " + std::to_string(kMaxBits) + " bits");
    } else if (p.counterexample) {
        r.status = violated ? InstanceStatus::Refuted : InstanceStatus::Failed;
        add_note(violated ? "registered counterexample confirmed"
                          : "registered counterexample unexpectedly holds");
    } else {
        r.status = holds ? InstanceStatus::Passed : InstanceStatus::Failed;
        if (holds && out.verdict == Verdict::Equal) add_note("equality, allowed by <=");
        if (!holds && out.verdict == Verdict::Equal) add_note("equality violates strict <");
    }
    return r;
}

void finish(VerificationReport& report) {
    report.instances_checked = report.records.size();
    for (const InstanceRecord& r : report.records) {
        if (!r.ok()) report.failures.push_back(r);
    }
}

InstanceRecord certificate_record(const MonotonicityCertificate& c) {
    InstanceRecord r;
    r.claim_id = c.claim_id;
    r.part = "(" + c.lo.to_string() + "," + c.hi.to_string() + ")";
    r.n = c.n;
    r.m = c.m;
    r.status = c.passed() ? InstanceStatus::Passed : InstanceStatus::Failed;
    r.relation = "monotone";
    r.lhs = c.label;
    r.rhs = to_string(c.expected);
    r.notes = std::string("found ") + to_string(c.conclusion);
    if (!c.notes.empty()) r.notes += "; " + c.notes;
    return r;
}

VerificationReport family_report(const std::string& id, unsigned n_max, unsigned jobs) {
    VerificationReport report;
    report.claim_id = id;
    const unsigned n = std::max(n_max, 2U);
    for (const MonotonicityCertificate& c : certify_family(id, n, jobs)) {
        report.records.push_back(certificate_record(c));
    }
    report.wall_notes = "Wronskian certificates for n <= " + std::to_string(n);
    finish(report);
    return report;
}

InstanceRecord sequence_record(const std::string& id, const SequenceCertificate& c) {
    InstanceRecord r;
    r.claim_id = id;
    r.part = c.claim_id;
    r.n = c.n_hi;
    r.t = c.t;
    r.status = c.passed() ? InstanceStatus::Passed : InstanceStatus::Failed;
    r.relation = "sequence";
    r.lhs = "n = " + std::to_string(c.n_lo) + ".." + std::to_string(c.n_hi);
    r.rhs = to_string(c.expected);
    r.notes = std::string("found ") + to_string(c.conclusion);
    for (const SequenceComparison& s : c.comparisons) {
        if (!s.holds) {
            r.notes += "; first violation at n = " + std::to_string(s.n);
            break;
        }
    }
    return r;
}

VerificationReport sequence_report(SequenceClaim claim, unsigned n_max) {
    VerificationReport report;
    report.claim_id = claim == SequenceClaim::T5 ? "seq-t5" : "seq-t6";
    for (const Rational& t : sequence_grid(16)) {
        report.records.push_back(sequence_record(report.claim_id, certify_sequence_in_n(t, claim, n_max)));
    }
    report.wall_notes = "16-point grid in (0,1/2), n <= " + std::to_string(n_max);
    finish(report);
    return report;
}

VerificationReport logconvexity_report(unsigned n_max) {
    VerificationReport report;
    report.claim_id = "prop-5.7";
    const unsigned n = std::max(n_max, 3U);
    for (const SequenceCertificate& c : certify_logconvexity_sequences(n)) {
        report.records.push_back(sequence_record(report.claim_id, c));
    }
    report.wall_notes = "exact sequence checks for n <= " + std::to_string(n);
    finish(report);
    return report;
}

VerificationReport limits_report(int bits) {
    VerificationReport report;
    report.claim_id = "limits";
    const Rational t(1, 8);
    const Rational tol = Rational::inverse_power_of_ten(6);
    for (LimitClaim claim : {LimitClaim::Ratio2n2n1, LimitClaim::Ratio2n2nm1, LimitClaim::Asymptotic}) {
        const bool asymptotic = claim == LimitClaim::Asymptotic;
        const unsigned n_max = asymptotic ? 20 : 15;
        const LimitReport lr = check_limit(claim, t, n_max, tol, bits);
        InstanceRecord r;
        r.claim_id = report.claim_id;
        r.part = to_string(claim);
        r.n = n_max;
        r.t = t;
        r.relation = asymptotic ? "decreasing" : "<";
        r.precision_bits = lr.precision_used;
        const LimitSample& last = lr.sample(n_max);
        r.lhs = "[" + last.gap_enclosure.lo().to_string() + ", " + last.gap_enclosure.hi().to_string() + "]";
        r.rhs = asymptotic ? "gaps decreasing from n = 4" : tol.to_string();
        const bool ok = asymptotic ? (lr.decreasing_from(4) && lr.undecided_comparisons == 0)
                                   : lr.status == LimitStatus::WithinTolerance;
        r.status = ok ? InstanceStatus::Passed
                      : (lr.status == LimitStatus::Undecided || lr.undecided_comparisons > 0
                             ? InstanceStatus::Undecided
                             : InstanceStatus::Failed);
        r.notes = std::string("gap status ") + to_string(lr.status);
        report.records.push_back(std::move(r));
    }
    report.wall_notes = "t = 1/8, tolerance 1e-6";
    finish(report);
    return report;
}

// Critical value p(c) for the single root c of p' isolated by (sf, iv), enclosed
// through p(m) - p(c) = p''(eta)(m-c)^2 / 2.
RationalInterval horner(const Poly& p, const RationalInterval& x) {
    RationalInterval acc = RationalInterval::point(Rational(0));
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + RationalInterval::point(p.coefficient(i));
    return acc;
}

RationalInterval critical_value(const Poly& p, const Poly& p2, const Poly& sf, IsolatingInterval iv,
                                int bits) {
    const Rational target = two_pow(-(bits + 2));
    for (;;) {
        const Rational r = iv.width() / Rational(2);
        const Rational bound = horner(p2, RationalInterval(iv.lo, iv.hi)).abs().hi();
        const Rational err = bound * r * r / Rational(2);
        if (err <= target) {
            return RationalInterval::point(p.evaluate(iv.lo + r)).inflate(err);
        }
        iv = refine(sf, iv, iv.width() / Rational(16));
    }
}

unsigned scalar_n_max(const VerifyOptions& options) {
    return options.scalar_n_max > 0 ? options.scalar_n_max : std::max(options.n_max, 50U);
}

}  // namespace

const char* to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::PointwiseDouble: return "pointwise_double";
        case ClaimKind::PointwiseSingle: return "pointwise_single";
        case ClaimKind::ScalarDouble: return "scalar_double";
        case ClaimKind::ScalarSingle: return "scalar_single";
        case ClaimKind::Supnorm: return "supnorm";
        case ClaimKind::Ordering: return "ordering";
    }
    return "?";
}

bool is_pointwise(ClaimKind k) {
    return k == ClaimKind::PointwiseDouble || k == ClaimKind::PointwiseSingle;
}

const char* to_string(InstanceStatus s) {
    switch (s) {
        case InstanceStatus::Passed: return "passed";
        case InstanceStatus::Failed: return "failed";
        case InstanceStatus::Undecided: return "undecided";
        case InstanceStatus::Refuted: return "refuted";
    }
    return "?";
}

const std::vector<ClaimRegistryEntry>& inequality_registry() {
    static const std::vector<ClaimRegistryEntry> entries = [] {
        std::vector<ClaimRegistryEntry> out;
        for (const ClaimDef& d : definitions()) out.push_back(d.entry);
        return out;
    }();
    return entries;
}

const ClaimRegistryEntry& registry_entry(const std::string& id) {
    for (const ClaimRegistryEntry& e : inequality_registry()) {
        if (e.id == id) return e;
    }
    throw std::invalid_argument("unknown claim id: " + id);
}

std::size_t VerificationReport::undecided() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.status == InstanceStatus::Undecided;
    }));
}

std::vector<Rational> default_grid(unsigned density) {
    std::vector<Rational> grid;
    if (density == 0) return grid;
    const long den = 2 * static_cast<long>(density);
    for (long k = 1; k < den; ++k) {
        if (k != static_cast<long>(density)) grid.emplace_back(k, den);
    }
    return grid;
}

VerificationReport verify_claim(const ClaimRegistryEntry& entry, unsigned n_max,
                                const std::vector<Rational>& grid, int bits, unsigned jobs) {
    const ClaimDef& def = definition(entry.id);
    const unsigned n_hi = entry.n_hi ? std::min(n_max, *entry.n_hi) : n_max;

    std::vector<Rational> points;
    if (is_pointwise(entry.kind)) {
        for (const Rational& t : grid) {
            if (def.domain(t)) points.push_back(t);
        }
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
    }

    std::vector<std::pair<unsigned, std::optional<Rational>>> tasks;
    for (unsigned n = entry.n_lo; n <= n_hi; ++n) {
        if (is_pointwise(entry.kind)) {
            for (const Rational& t : points) tasks.emplace_back(n, t);
        } else {
            tasks.emplace_back(n, std::nullopt);
        }
    }

    const auto results = parallel_map<TaskResult>(tasks.size(), jobs, [&](std::size_t i) {
        TaskResult out;
        const std::size_t calls_before = enclosure_calls();
        const auto& [n, t] = tasks[i];
        for (const Part& p : def.parts(n, t ? &*t : nullptr)) {
            out.records.push_back(check_part(entry.id, n, t, p, bits, out.escalations));
        }
        out.enclosure_calls = enclosure_calls() - calls_before;
        return out;
    });

    VerificationReport report;
    report.claim_id = entry.id;
    for (const TaskResult& r : results) {
        report.records.insert(report.records.end(), r.records.begin(), r.records.end());
        report.enclosure_calls += r.enclosure_calls;
        report.precision_escalations += r.escalations;
    }
    std::string notes = "n = " + std::to_string(entry.n_lo) + ".." + std::to_string(n_hi);
    if (is_pointwise(entry.kind)) notes += ", " + std::to_string(points.size()) + " grid points";
    if (entry.id == "R7") notes += "; ordering of the two lower bounds also checked for n < 3";
    report.wall_notes = notes;
    finish(report);
    return report;
}

RationalInterval supnorm_bound(unsigned n, SupnormKind which, int bits) {
    if (n < 1) throw std::invalid_argument("supnorm_bound: n must be >= 1");
    const Poly p = which == SupnormKind::OddPoly
                       ? bernoulli_polynomial(2 * n + 1)
                       : bernoulli_polynomial(2 * n) - Poly::constant(bernoulli_number(2 * n));
    const Poly d = p.derivative();
    const Rational zero(0);
    const Rational one(1);

    std::vector<RationalInterval> values{RationalInterval::point(p.evaluate(zero).abs()),
                                         RationalInterval::point(p.evaluate(one).abs())};
    // Rational critical points where symmetry puts them; the rest are isolated.
    Poly reduced = d;
    for (const Rational& x : {zero, kHalf, one}) {
        auto [q, k] = reduced.divide_out_root(x);
        if (k > 0 && x == kHalf) values.push_back(RationalInterval::point(p.evaluate(x).abs()));
        reduced = std::move(q);
    }
    if (reduced.degree() >= 1) {
        const Poly sf = square_free_part(reduced);
        const Poly p2 = d.derivative();
        const Rational width = two_pow(-(bits / 2 + 8));
        for (const IsolatingInterval& iv : isolate_roots(sf, zero, one, width, "critical point")) {
            values.push_back(critical_value(p, p2, sf, iv, bits).abs());
        }
    }
    Rational lo = values.front().lo();
    Rational hi = values.front().hi();
    for (const RationalInterval& v : values) {
        lo = max(lo, v.lo());
        hi = max(hi, v.hi());
    }
    RationalInterval sup(lo, hi);
    return sup.is_point() ? sup : sup.round_outward(bits + 4);
}

std::vector<std::pair<std::string, Quantity>> ratio_bound_values(unsigned n) {
    const RatioBounds b = ratio_bounds(n);
    return {{"lower-R9", b.l9.value()},   {"upper-R9", b.u9.value()},   {"lower-R10", b.l10.value()},
            {"upper-R10", b.u10.value()}, {"upper-R11", b.u11.value()}, {"lower-R12", b.l12.value()},
            {"upper-R12", b.u12.value()}, {"lower-R13", b.l13.value()}, {"upper-R13", b.u13.value()}};
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out = theorem_family_ids();
        for (const char* id : {"prop-5.7", "seq-t5", "seq-t6", "limits"}) out.emplace_back(id);
        return out;
    }();
    return ids;
}

VerificationReport run_suite(const std::string& id, const VerifyOptions& options) {
    const auto& families = theorem_family_ids();
    if (std::find(families.begin(), families.end(), id) != families.end()) {
        return family_report(id, options.n_max, options.jobs);
    }
    if (id == "prop-5.7") return logconvexity_report(scalar_n_max(options));
    if (id == "seq-t5") return sequence_report(SequenceClaim::T5, std::max(options.n_max, 2U));
    if (id == "seq-t6") return sequence_report(SequenceClaim::T6, std::max(options.n_max, 2U));
    if (id == "limits") return limits_report(options.bits);
    throw std::invalid_argument("unknown suite id: " + id);
}

bool is_known_claim(const std::string& id) {
    const auto& reg = inequality_registry();
    if (std::any_of(reg.begin(), reg.end(), [&](const auto& e) { return e.id == id; })) return true;
    const auto& s = suite_ids();
    return std::find(s.begin(), s.end(), id) != s.end();
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
    for (const std::string& id : options.claims) {
        if (!is_known_claim(id)) throw std::invalid_argument("unknown claim id: " + id);
    }
    auto selected = [&](const std::string& id) {
        return options.claims.empty() ||
               std::find(options.claims.begin(), options.claims.end(), id) != options.claims.end();
    };
    const unsigned scalar_n = scalar_n_max(options);
    const std::vector<Rational> grid = default_grid(options.grid_density);

    std::vector<VerificationReport> out;
    for (const ClaimRegistryEntry& e : inequality_registry()) {
        if (!selected(e.id)) continue;
        const bool scalar = e.kind == ClaimKind::ScalarDouble || e.kind == ClaimKind::ScalarSingle ||
                            e.kind == ClaimKind::Ordering;
        out.push_back(verify_claim(e, scalar ? scalar_n : options.n_max, grid, options.bits,
                                   options.jobs));
    }
    if (!options.include_certify) return out;
    for (const std::string& id : suite_ids()) {
        if (selected(id)) out.push_back(run_suite(id, options));
    }
    return out;
}

std::vector<VerificationReport> verify_all(unsigned n_max, unsigned grid_density, int bits) {
    VerifyOptions options;
    options.n_max = n_max;
    options.grid_density = grid_density;
    options.bits = bits;
    return verify_all(options);
}

}  // namespace bern
