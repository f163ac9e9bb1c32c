#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Values are always canonical: the denominator is positive and coprime to
 * the numerator, so structural equality is numeric equality. Zero is 0/1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bern {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p/q" or "p" with an optional sign. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// 1/10^k, used for exact endpoint margins.
    static Rational inverse_power_of_ten(unsigned k);
    /// 2^e for any integer e.
    static Rational power_of_two(long e);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Rational pow(long exponent) const;

    /// Largest integer <= value, smallest integer >= value.
    [[nodiscard]] BigInt floor() const;
    [[nodiscard]] BigInt ceil() const;

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;
    /// Approximate decimal with `digits` significant digits (rounded to nearest).
    [[nodiscard]] std::string to_decimal(int digits) const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

[[nodiscard]] inline const Rational& min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}
[[nodiscard]] inline const Rational& max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
}

}  // namespace bern
