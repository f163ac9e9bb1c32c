#pragma once

/**
 * @file enclosure.hpp
 * @brief Rigorous enclosures with exact rational endpoints for pi, sin, cos,
 *        cot and square roots, plus an adaptive comparison oracle.
 *
 * Point enclosures (pi, sqrt of a rational, trig of a rational argument) are
 * snapped to the dyadic grid 2^-bits: the result is the grid cell holding the
 * value, or the two cells around it when the value sits on a grid point. Cells
 * of finer grids nest inside coarser ones, so raising the precision never
 * widens an enclosure.
 */

#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>

#include "bern/rational.hpp"

namespace bern {

class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(Rational lo, Rational hi);  // throws if lo > hi
    static RationalInterval point(const Rational& x) { return {x, x}; }

    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    [[nodiscard]] Rational radius() const { return width() / Rational(2); }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }

    [[nodiscard]] bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const RationalInterval& inner) const {
        return lo_ <= inner.lo_ && inner.hi_ <= hi_;
    }
    [[nodiscard]] bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    /// Smallest enclosing interval with endpoints on the grid 2^-bits.
    [[nodiscard]] RationalInterval round_outward(int bits) const;
    /// Widens by r on both sides.
    [[nodiscard]] RationalInterval inflate(const Rational& r) const { return {lo_ - r, hi_ + r}; }
    /// Throws std::domain_error when the intersection is empty.
    [[nodiscard]] RationalInterval intersect(const RationalInterval& other) const;
    /// Enclosure of |x| over the interval.
    [[nodiscard]] RationalInterval abs() const;

    RationalInterval operator-() const { return {-hi_, -lo_}; }
    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
    /// Throws std::domain_error when b contains 0.
    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const RationalInterval& x);

enum class Verdict { Less, Equal, Greater, Undecided };

[[nodiscard]] const char* to_string(Verdict v);

struct ComparisonOutcome {
    Verdict verdict = Verdict::Undecided;
    int precision_used = 0;  ///< bits of the deciding enclosures; 0 for an exact decision
};

/// Thrown by cot when the sine enclosure straddles zero.
class PoleProximity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class TrigFn { Sin, Cos };

inline constexpr int kDefaultBits = 64;
inline constexpr int kMaxBits = 512;

/// Width exactly 2^-bits. Machin's formula 16 atan(1/5) - 4 atan(1/239).
[[nodiscard]] RationalInterval pi_enclosure(int bits);
[[nodiscard]] RationalInterval trig_enclosure(TrigFn fn, const RationalInterval& x, int bits);
[[nodiscard]] RationalInterval cot_enclosure(const RationalInterval& x, int bits);
[[nodiscard]] RationalInterval sqrt_enclosure(const Rational& v, int bits);

/// sin, cos and cot of 2*pi*t with t reduced exactly before pi enters.
[[nodiscard]] RationalInterval sin_two_pi(const Rational& t, int bits);
[[nodiscard]] RationalInterval cos_two_pi(const Rational& t, int bits);
[[nodiscard]] RationalInterval cot_two_pi(const Rational& t, int bits);

/// Less iff lhs.hi < rhs.lo, Greater iff lhs.lo > rhs.hi. Equal only for equal points.
[[nodiscard]] ComparisonOutcome compare(const RationalInterval& lhs, const RationalInterval& rhs);

/// Number of enclosure-module evaluations made on this thread so far.
[[nodiscard]] std::size_t enclosure_calls();

/// A real number that is either an exact rational or computable to any precision.
class Quantity {
public:
    using Encloser = std::function<RationalInterval(int bits)>;

    Quantity() = default;
    Quantity(Rational exact);  // NOLINT(google-explicit-constructor)
    Quantity(long exact) : Quantity(Rational(exact)) {}  // NOLINT(google-explicit-constructor)
    Quantity(int exact) : Quantity(Rational(exact)) {}   // NOLINT(google-explicit-constructor)
    explicit Quantity(Encloser encloser);

    static Quantity pi();
    static Quantity sqrt(const Rational& v);
    static Quantity sin_two_pi(const Rational& t);
    static Quantity cos_two_pi(const Rational& t);
    static Quantity cot_two_pi(const Rational& t);

    [[nodiscard]] bool is_exact() const { return encloser_ == nullptr; }
    /// Only valid when is_exact().
    [[nodiscard]] const Rational& exact() const;
    [[nodiscard]] RationalInterval enclose(int bits) const;
    /// Decimal rendering of the exact value or of a 128-bit enclosure midpoint.
    [[nodiscard]] std::string to_decimal(int digits = 15) const;
    /// "p/q" when exact, otherwise "[lo, hi]" at the given precision.
    [[nodiscard]] std::string to_string(int bits = kDefaultBits) const;

    Quantity operator-() const;
    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a, const Quantity& b);
    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator/(const Quantity& a, const Quantity& b);
    [[nodiscard]] Quantity abs() const;

private:
    Rational exact_;
    std::shared_ptr<const Encloser> encloser_;
};

/// Compares at start_bits and doubles the precision until decided or past max_bits.
/// Two exact operands are compared exactly without touching any enclosure.
[[nodiscard]] ComparisonOutcome compare(const Quantity& lhs, const Quantity& rhs,
                                        int start_bits = kDefaultBits, int max_bits = kMaxBits);

}  // namespace bern
