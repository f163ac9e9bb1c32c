#include "bern/roots.hpp"

#include <algorithm>
#include <utility>

#include "bern/bernoulli.hpp"

namespace bern {

namespace {

using IntPoly = std::vector<BigInt>;  // coefficient i multiplies t^i

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Positive multiple of p with coprime integer coefficients.
IntPoly to_primitive_int(const Poly& p) {
    const Rational c = p.content();
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) {
        const Rational scaled = x / c;
        out.push_back(scaled.numerator());
    }
    return out;
}

void make_primitive(IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Poly to_poly(const IntPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p) v.emplace_back(c);
    return Poly(std::move(v));
}

/// -rem(a, b) up to a positive factor, made primitive.
IntPoly negated_remainder(IntPoly r, const IntPoly& b) {
    const int db = degree(b);
    const BigInt& lb = b.back();
    const int lb_sign = sgn(lb);
    int sign = 1;
    BigInt lr;
    while (degree(r) >= db) {
        lr = r.back();
        const int shift = degree(r) - db;
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= lr * b[static_cast<std::size_t>(j)];
        trim(r);
        sign *= lb_sign;
    }
    if (r.empty()) return r;
    if (sign > 0) {
        for (auto& c : r) c = -c;
    }
    make_primitive(r);
    return r;
}

std::vector<IntPoly> int_chain(IntPoly p0, IntPoly p1) {
    std::vector<IntPoly> chain;
    chain.push_back(std::move(p0));
    if (p1.empty()) return chain;
    chain.push_back(std::move(p1));
    while (degree(chain.back()) > 0) {
        IntPoly next = negated_remainder(chain[chain.size() - 2], chain.back());
        if (next.empty()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

IntPoly int_derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    make_primitive(d);
    return d;
}

/// Sign of p(x) via integer homogeneous Horner evaluation.
int sign_at(const IntPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const BigInt a = x.numerator();
    const BigInt b = x.denominator();
    BigInt acc = p.back();
    BigInt bpow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        bpow *= b;
        acc *= a;
        acc += p[i] * bpow;
    }
    return sgn(acc);
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace

const Rational& endpoint_margin() {
    static const Rational margin = Rational::inverse_power_of_ten(9);
    return margin;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_sequence: zero polynomial");
    std::vector<Poly> out{p};
    const Poly dp = p.derivative();
    if (dp.is_zero()) return out;
    out.push_back(dp);
    const auto chain = int_chain(to_primitive_int(p), to_primitive_int(dp));
    for (std::size_t i = 2; i < chain.size(); ++i) out.push_back(to_poly(chain[i]));
    return out;
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (p.degree() <= 1) return p.primitive_part();
    const IntPoly ip = to_primitive_int(p);
    const auto chain = int_chain(ip, int_derivative(ip));
    const IntPoly& g = chain.back();
    if (degree(g) <= 0) return to_poly(ip);
    return p.divmod(to_poly(g)).first.primitive_part();
}

SturmCounter::SturmCounter(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmCounter: zero polynomial");
    square_free_ = square_free_part(p);
    const IntPoly ip = to_primitive_int(square_free_);
    chain_ = int_chain(ip, int_derivative(ip));
}

int SturmCounter::variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
        const int s = bern::sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmCounter::sign_at(const Rational& x) const { return bern::sign_at(chain_.front(), x); }

std::size_t SturmCounter::count(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("count_roots: requires lo < hi");
    if (sign_at(lo) == 0 || sign_at(hi) == 0) {
        throw EndpointIsRoot("count_roots: endpoint is a root; perturb it by an exact rational");
    }
    const int diff = variations(lo) - variations(hi);
    return static_cast<std::size_t>(diff < 0 ? 0 : diff);
}

std::size_t count_roots(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_roots: zero polynomial");
    if (p.is_constant()) {
        if (!(lo < hi)) throw std::invalid_argument("count_roots: requires lo < hi");
        return 0;
    }
    return SturmCounter(p).count(lo, hi);
}

IsolatingInterval refine(const Poly& p, IsolatingInterval bracket, const Rational& max_width) {
    int s_lo = p.sign_at(bracket.lo);
    const int s_hi = p.sign_at(bracket.hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
        throw RootIsolationError("refine: bracket [" + bracket.lo.to_string() + ", " +
                                 bracket.hi.to_string() + "] has no strict sign change");
    }
    int steps = 0;
    while (bracket.width() > max_width) {
        if (++steps > kMaxBisections) {
            throw RootIsolationError("refine: exceeded " + std::to_string(kMaxBisections) +
                                     " bisections");
        }
        const Rational m = midpoint(bracket.lo, bracket.hi);
        const int s = p.sign_at(m);
        if (s == 0) {
            // Rational root: shrink symmetrically around it.
            Rational eps = max_width / Rational(4);
            for (int k = 0; k < kMaxBisections; ++k) {
                const int a = p.sign_at(m - eps);
                const int b = p.sign_at(m + eps);
                if (a != 0 && b != 0 && a != b && m - eps > bracket.lo && m + eps < bracket.hi) {
                    bracket.lo = m - eps;
                    bracket.hi = m + eps;
                    return bracket;
                }
                eps /= Rational(2);
            }
            throw RootIsolationError("refine: could not bracket rational root " + m.to_string());
        }
        if (s == s_lo) {
            bracket.lo = m;
            s_lo = s;
        } else {
            bracket.hi = m;
        }
    }
    return bracket;
}

std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& lo,
                                             const Rational& hi, const Rational& max_width,
                                             const std::string& target) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    std::vector<IsolatingInterval> out;
    if (p.is_constant()) return out;
    const SturmCounter counter(p);
    const Poly& sqf = counter.square_free();

    struct Frame {
        Rational lo;
        Rational hi;
        int depth;
    };
    std::vector<Frame> stack{{lo, hi, 0}};
    std::vector<IsolatingInterval> found;
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const std::size_t c = counter.count(f.lo, f.hi);
        if (c == 0) continue;
        if (c == 1) {
            found.push_back(refine(sqf, {f.lo, f.hi, target}, max_width));
            continue;
        }
        if (f.depth > kMaxBisections) throw RootIsolationError("isolate_roots: depth exhausted");
        // Split at a non-root point near the middle.
        Rational m = midpoint(f.lo, f.hi);
        for (long k = 3; counter.sign_at(m) == 0; ++k) {
            m = f.lo + (f.hi - f.lo) * Rational(k, 2 * k + 1);
        }
        stack.push_back({m, f.hi, f.depth + 1});
        stack.push_back({f.lo, m, f.depth + 1});
    }
    std::sort(found.begin(), found.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return found;
}

IsolatingInterval isolate_r2n(unsigned n, const Rational& max_width) {
    if (n == 0) throw std::invalid_argument("isolate_r2n: n must be >= 1");
    if (max_width.sign() <= 0) throw std::invalid_argument("isolate_r2n: width must be > 0");
    const Poly& p = bernoulli_polynomial(2 * n);
    const Rational half(1, 2);
    const std::size_t c = count_roots(p, Rational(0), half);
    const std::string target = "r_{2n}, n=" + std::to_string(n);
    if (c != 1) {
        throw RootIsolationError("isolate_r2n: B_" + std::to_string(2 * n) + " has " +
                                 std::to_string(c) + " roots in (0, 1/2), expected 1");
    }
    return refine(p, {Rational(0), half, target}, max_width);
}

Verdict compare_with_r2n(unsigned n, const Rational& x) {
    if (n == 0) throw std::invalid_argument("compare_with_r2n: n must be >= 1");
    const Rational half(1, 2);
    if (x.sign() <= 0 || x >= half) throw std::invalid_argument("compare_with_r2n: x must lie in (0, 1/2)");
    const Poly& p = bernoulli_polynomial(2 * n);
    if (count_roots(p, Rational(0), half) != 1) {
        throw RootIsolationError("compare_with_r2n: B_" + std::to_string(2 * n) + " has no unique root in (0, 1/2)");
    }
    // B_{2n} keeps the sign it has at 0+ until r_{2n}
    const int s = p.sign_at(x);
    if (s == 0) return Verdict::Equal;
    return s == p.sign_at(endpoint_margin()) ? Verdict::Less : Verdict::Greater;
}

ComparisonOutcome compare_lehmer_bound(unsigned n, int max_bits) {
    if (n == 0) throw std::invalid_argument("compare_lehmer_bound: n must be >= 1");
    const Rational scale = Rational::power_of_two(2 * static_cast<long>(n) + 1);
    for (int bits = kDefaultBits; bits <= max_bits; bits *= 2) {
        const RationalInterval pi = pi_enclosure(bits);
        // bound_lo <= bound <= bound_hi; equality with r_{2n} would make pi rational
        const Rational bound_hi = Rational(1, 4) - (scale * pi.hi()).reciprocal();
        const Rational bound_lo = Rational(1, 4) - (scale * pi.lo()).reciprocal();
        if (compare_with_r2n(n, bound_hi) != Verdict::Greater) return {Verdict::Less, bits};
        if (compare_with_r2n(n, bound_lo) != Verdict::Less) return {Verdict::Greater, bits};
    }
    return {Verdict::Undecided, max_bits};
}

R2nMonotoneResult verify_r2n_monotone(unsigned n_max, const Rational& width) {
    if (n_max < 2) throw std::invalid_argument("verify_r2n_monotone: n_max must be >= 2");
    R2nMonotoneResult result;
    for (unsigned n = 1; n <= n_max; ++n) result.intervals.push_back(isolate_r2n(n, width));
    for (unsigned n = 1; n < n_max; ++n) {
        auto& a = result.intervals[n - 1];
        auto& b = result.intervals[n];
        Rational w = width;
        int depth = 0;
        while (!(a.hi < b.lo)) {
            if (++depth > kMaxBisections) {
                result.first_failure = n;
                return result;
            }
            w /= Rational(2);
            a = refine(bernoulli_polynomial(2 * n), a, w);
            b = refine(bernoulli_polynomial(2 * n + 2), b, w);
        }
    }
    result.increasing = true;
    return result;
}

}  // namespace bern
