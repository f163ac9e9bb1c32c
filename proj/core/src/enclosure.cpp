#include "bern/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>

namespace bern {

namespace {

thread_local std::size_t g_enclosure_calls = 0;

Rational floor_grid(const Rational& x, int bits) {
    const Rational scale = Rational::power_of_two(bits);
    return Rational((x * scale).floor()) * Rational::power_of_two(-bits);
}

Rational ceil_grid(const Rational& x, int bits) {
    const Rational scale = Rational::power_of_two(bits);
    return Rational((x * scale).ceil()) * Rational::power_of_two(-bits);
}

Rational nearest_integer(const Rational& x) { return Rational((x + Rational(1, 2)).floor()); }

/// Snaps a rigorous raw enclosure onto the dyadic grid 2^-bits.
template <typename Raw>
RationalInterval snap(const Raw& raw, int bits) {
    RationalInterval iv;
    for (int extra = 16; extra <= 16 + 256; extra += 64) {
        iv = raw(bits + extra);
        if (iv.is_point()) return iv;
        const Rational g_lo = floor_grid(iv.lo(), bits);
        if (g_lo == floor_grid(iv.hi(), bits)) return {g_lo, g_lo + Rational::power_of_two(-bits)};
    }
    // The value sits on (or within 2^-(bits+272) of) a grid point.
    return iv.round_outward(bits);
}

/// Partial sums of atan(1/x) bracket the value; returns one bracket of width <= 2^-q.
RationalInterval atan_inverse(long x, int q) {
    const Rational tol = Rational::power_of_two(-q);
    const BigInt x2 = BigInt(x) * x;
    BigInt power = x;  // x^(2k+1)
    Rational sum;
    for (long k = 0;; ++k) {
        const Rational term(BigInt(1), power * (2 * k + 1));
        sum += (k % 2 == 0) ? term : -term;
        power *= x2;
        const Rational next(BigInt(1), power * (2 * k + 3));
        if (next < tol) return RationalInterval(sum - next, sum + next);
    }
}

RationalInterval raw_pi(int q) {
    const RationalInterval a = atan_inverse(5, q + 5);
    const RationalInterval b = atan_inverse(239, q + 3);
    const RationalInterval pi = RationalInterval::point(16) * a - RationalInterval::point(4) * b;
    return pi.round_outward(q + 2);
}

/// sin(y) for |y| <= 1 by the alternating Taylor series.
RationalInterval sin_series(const Rational& y, int q) {
    const Rational y2 = y * y;
    const Rational tol = Rational::power_of_two(-q - 4);
    RationalInterval term = RationalInterval::point(y);
    RationalInterval sum = term;
    for (long k = 1; k < 100000; ++k) {
        term = (-term * RationalInterval::point(y2 / Rational((2 * k) * (2 * k + 1))))
                   .round_outward(q + 8);
        sum = sum + term;
        const Rational bound = term.abs().hi();
        if (bound < tol) return sum.inflate(bound).round_outward(q + 4);
    }
    throw std::logic_error("sin_series: no convergence");
}

/// cos(y) for |y| <= 1.
RationalInterval cos_series(const Rational& y, int q) {
    const Rational y2 = y * y;
    const Rational tol = Rational::power_of_two(-q - 4);
    RationalInterval term = RationalInterval::point(1);
    RationalInterval sum = term;
    for (long k = 1; k < 100000; ++k) {
        term = (-term * RationalInterval::point(y2 / Rational((2 * k - 1) * (2 * k))))
                   .round_outward(q + 8);
        sum = sum + term;
        const Rational bound = term.abs().hi();
        if (bound < tol) return sum.inflate(bound).round_outward(q + 4);
    }
    throw std::logic_error("cos_series: no convergence");
}

/// fn(y + j*pi/2) for an enclosure y of the reduced argument, |y| < 1.
RationalInterval eval_quadrant(TrigFn fn, long j, const RationalInterval& y, int q) {
    if (y.is_point() && y.lo().is_zero()) {
        // Exact values at multiples of pi/2.
        const long r = ((j % 4) + 4) % 4;
        const long s = fn == TrigFn::Sin ? (r == 1 ? 1 : r == 3 ? -1 : 0)
                                         : (r == 0 ? 1 : r == 2 ? -1 : 0);
        return RationalInterval::point(s);
    }
    const Rational m = y.is_point() ? y.lo() : floor_grid(y.midpoint(), q + 8);
    const Rational r = max((y.hi() - m).abs(), (m - y.lo()).abs());
    const long quadrant = ((j % 4) + 4) % 4;
    // sin(y + j pi/2) cycles sin, cos, -sin, -cos; cos(y + j pi/2) cycles cos, -sin, -cos, sin.
    const long shifted = fn == TrigFn::Sin ? quadrant : (quadrant + 1) % 4;
    RationalInterval v = (shifted % 2 == 0) ? sin_series(m, q) : cos_series(m, q);
    if (shifted >= 2) v = -v;
    return v.inflate(r);
}

RationalInterval raw_trig_rational(TrigFn fn, const Rational& m, int q) {
    if (m.is_zero()) return eval_quadrant(fn, 0, RationalInterval::point(0), q);
    const RationalInterval pi = pi_enclosure(q + 8);
    const Rational k = nearest_integer(m / (pi.midpoint() / Rational(2)));
    const RationalInterval y =
        RationalInterval::point(m) - RationalInterval::point(k / Rational(2)) * pi;
    return eval_quadrant(fn, static_cast<long>(k.floor().get_si()), y, q);
}

RationalInterval raw_trig_two_pi(TrigFn fn, const Rational& t, int q) {
    const Rational reduced = t - nearest_integer(t);           // in [-1/2, 1/2]
    const Rational j = nearest_integer(reduced * Rational(4));  // quadrant
    const Rational s = reduced - j / Rational(4);               // in [-1/8, 1/8]
    const RationalInterval y = s.is_zero() ? RationalInterval::point(0)
                                           : pi_enclosure(q + 8) * RationalInterval::point(2 * s);
    return eval_quadrant(fn, static_cast<long>(j.floor().get_si()), y, q);
}

const RationalInterval& unit_range() {
    static const RationalInterval r(-1, 1);
    return r;
}

bool is_rational_square(const Rational& v) {
    return mpz_perfect_square_p(v.numerator().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(v.denominator().get_mpz_t()) != 0;
}

RationalInterval raw_sqrt(const Rational& v, int q) {
    const Rational tol = Rational::power_of_two(-q);
    Rational x = ceil_grid(max(Rational(1), v), q + 4);
    for (int iter = 0; iter < 100000; ++iter) {
        const Rational lower = v / x;
        if (x - lower <= tol) return {lower, x};
        x = ceil_grid((x + lower) / Rational(2), q + 4);
    }
    throw std::logic_error("sqrt: Newton iteration did not converge");
}

template <typename Key>
class Memo {
public:
    template <typename Make>
    RationalInterval get(const Key& key, const Make& make) {
        {
            std::lock_guard lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        RationalInterval value = make();
        std::lock_guard lock(mutex_);
        return map_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, RationalInterval> map_;
};

}  // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("RationalInterval: lo > hi");
}

RationalInterval RationalInterval::round_outward(int bits) const {
    return {floor_grid(lo_, bits), ceil_grid(hi_, bits)};
}

RationalInterval RationalInterval::intersect(const RationalInterval& other) const {
    const Rational& a = max(lo_, other.lo_);
    const Rational& b = min(hi_, other.hi_);
    if (b < a) throw std::domain_error("RationalInterval: empty intersection");
    return {a, b};
}

RationalInterval RationalInterval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return {Rational(0), max(-lo_, hi_)};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    if (a.is_point() && b.is_point()) return RationalInterval::point(a.lo_ * b.lo_);
    const Rational p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw std::domain_error("RationalInterval: divisor contains 0");
    return a * RationalInterval(b.hi_.reciprocal(), b.lo_.reciprocal());
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& x) {
    return os << '[' << x.lo() << ", " << x.hi() << ']';
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Less: return "less";
        case Verdict::Equal: return "equal";
        case Verdict::Greater: return "greater";
        case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

std::size_t enclosure_calls() { return g_enclosure_calls; }

RationalInterval pi_enclosure(int bits) {
    if (bits < 8) throw std::invalid_argument("pi_enclosure: bits must be >= 8");
    ++g_enclosure_calls;
    static Memo<int> memo;
    return memo.get(bits, [bits] { return snap(raw_pi, bits); });
}

RationalInterval trig_enclosure(TrigFn fn, const RationalInterval& x, int bits) {
    ++g_enclosure_calls;
    const Rational m = x.midpoint();
    const RationalInterval centre =
        snap([&](int q) { return raw_trig_rational(fn, m, q); }, bits);
    return centre.inflate(x.radius()).intersect(unit_range());
}

RationalInterval cot_enclosure(const RationalInterval& x, int bits) {
    const RationalInterval s = trig_enclosure(TrigFn::Sin, x, bits + 4);
    if (s.contains_zero()) throw PoleProximity("cot: sine enclosure contains 0");
    return trig_enclosure(TrigFn::Cos, x, bits + 4) / s;
}

RationalInterval sin_two_pi(const Rational& t, int bits) {
    ++g_enclosure_calls;
    static Memo<std::pair<std::string, int>> memo;
    return memo.get({t.to_string(), bits}, [&] {
        return snap([&](int q) { return raw_trig_two_pi(TrigFn::Sin, t, q); }, bits)
            .intersect(unit_range());
    });
}

RationalInterval cos_two_pi(const Rational& t, int bits) {
    ++g_enclosure_calls;
    static Memo<std::pair<std::string, int>> memo;
    return memo.get({t.to_string(), bits}, [&] {
        return snap([&](int q) { return raw_trig_two_pi(TrigFn::Cos, t, q); }, bits)
            .intersect(unit_range());
    });
}

RationalInterval cot_two_pi(const Rational& t, int bits) {
    const RationalInterval s = sin_two_pi(t, bits + 4);
    if (s.contains_zero()) throw PoleProximity("cot: sin(2 pi t) enclosure contains 0 at t = " + t.to_string());
    return cos_two_pi(t, bits + 4) / s;
}

RationalInterval sqrt_enclosure(const Rational& v, int bits) {
    if (v.sign() < 0) throw std::invalid_argument("sqrt_enclosure: negative argument");
    ++g_enclosure_calls;
    if (v.is_zero()) return RationalInterval::point(0);
    if (is_rational_square(v)) {
        BigInt p, q;
        mpz_sqrt(p.get_mpz_t(), v.numerator().get_mpz_t());
        mpz_sqrt(q.get_mpz_t(), v.denominator().get_mpz_t());
        return RationalInterval::point(Rational(p, q));
    }
    return snap([&](int q) { return raw_sqrt(v, q); }, bits);
}

ComparisonOutcome compare(const RationalInterval& lhs, const RationalInterval& rhs) {
    if (lhs.hi() < rhs.lo()) return {Verdict::Less, 0};
    if (lhs.lo() > rhs.hi()) return {Verdict::Greater, 0};
    if (lhs.is_point() && rhs.is_point()) return {Verdict::Equal, 0};
    return {Verdict::Undecided, 0};
}

// ---------------------------------------------------------------------------

Quantity::Quantity(Rational exact) : exact_(std::move(exact)) {}

Quantity::Quantity(Encloser encloser)
    : encloser_(std::make_shared<const Encloser>(std::move(encloser))) {}

Quantity Quantity::pi() {
    return Quantity(Encloser([](int bits) { return pi_enclosure(bits); }));
}

Quantity Quantity::sqrt(const Rational& v) {
    if (v.sign() < 0) throw std::invalid_argument("Quantity::sqrt: negative argument");
    if (v.is_zero() || is_rational_square(v)) {
        const RationalInterval r = sqrt_enclosure(v, 8);
        return Quantity(r.lo());
    }
    return Quantity(Encloser([v](int bits) { return sqrt_enclosure(v, bits); }));
}

Quantity Quantity::sin_two_pi(const Rational& t) {
    return Quantity(Encloser([t](int bits) { return bern::sin_two_pi(t, bits); }));
}

Quantity Quantity::cos_two_pi(const Rational& t) {
    return Quantity(Encloser([t](int bits) { return bern::cos_two_pi(t, bits); }));
}

Quantity Quantity::cot_two_pi(const Rational& t) {
    return Quantity(Encloser([t](int bits) { return bern::cot_two_pi(t, bits); }));
}

const Rational& Quantity::exact() const {
    if (!is_exact()) throw std::logic_error("Quantity::exact: value is not rational");
    return exact_;
}

RationalInterval Quantity::enclose(int bits) const {
    if (is_exact()) return RationalInterval::point(exact_);
    return (*encloser_)(bits);
}

std::string Quantity::to_decimal(int digits) const {
    if (is_exact()) return exact_.to_decimal(digits);
    return enclose(128).midpoint().to_decimal(digits);
}

std::string Quantity::to_string(int bits) const {
    if (is_exact()) return exact_.to_string();
    const RationalInterval r = enclose(bits);
    return "[" + r.lo().to_string() + ", " + r.hi().to_string() + "]";
}

namespace {

template <typename ExactOp, typename IntervalOp>
Quantity combine(const Quantity& a, const Quantity& b, ExactOp exact_op, IntervalOp interval_op) {
    if (a.is_exact() && b.is_exact()) return Quantity(exact_op(a.exact(), b.exact()));
    return Quantity(Quantity::Encloser([a, b, interval_op](int bits) {
        return interval_op(a.enclose(bits + 4), b.enclose(bits + 4)).round_outward(bits + 8);
    }));
}

}  // namespace

Quantity Quantity::operator-() const {
    if (is_exact()) return Quantity(-exact_);
    const Quantity self = *this;
    return Quantity(Encloser([self](int bits) { return -self.enclose(bits); }));
}

Quantity Quantity::abs() const {
    if (is_exact()) return Quantity(exact_.abs());
    const Quantity self = *this;
    return Quantity(Encloser([self](int bits) { return self.enclose(bits).abs(); }));
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    return combine(a, b, std::plus<>{}, [](const auto& x, const auto& y) { return x + y; });
}

Quantity operator-(const Quantity& a, const Quantity& b) {
    return combine(a, b, std::minus<>{}, [](const auto& x, const auto& y) { return x - y; });
}

Quantity operator*(const Quantity& a, const Quantity& b) {
    return combine(a, b, std::multiplies<>{}, [](const auto& x, const auto& y) { return x * y; });
}

Quantity operator/(const Quantity& a, const Quantity& b) {
    return combine(a, b, std::divides<>{}, [](const auto& x, const auto& y) { return x / y; });
}

ComparisonOutcome compare(const Quantity& lhs, const Quantity& rhs, int start_bits, int max_bits) {
    if (lhs.is_exact() && rhs.is_exact()) {
        const auto c = lhs.exact() <=> rhs.exact();
        if (c < 0) return {Verdict::Less, 0};
        if (c > 0) return {Verdict::Greater, 0};
        return {Verdict::Equal, 0};
    }
    int bits = start_bits;
    for (; bits <= max_bits; bits *= 2) {
        try {
            ComparisonOutcome out = compare(lhs.enclose(bits), rhs.enclose(bits));
            if (out.verdict != Verdict::Undecided) {
                out.precision_used = bits;
                return out;
            }
        } catch (const std::domain_error&) {
            // A denominator enclosure still straddles zero; raise the precision.
        }
    }
    return {Verdict::Undecided, max_bits};
}

}  // namespace bern
