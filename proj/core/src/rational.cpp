#include "bern/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bern {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt pow10(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) +
                                    "' (expected p/q)");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("malformed rational '" + std::string(text) +
                                            "' (zero denominator)");
    if (negative) n = -n;
    return {n, d};
}

Rational Rational::inverse_power_of_ten(unsigned k) {
    return {BigInt(1), pow10(static_cast<long>(k))};
}

Rational Rational::power_of_two(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return {value_.get_den(), value_.get_num()};
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r;
    r.value_ = mpq_class(n, d);  // already coprime
    return r;
}

BigInt Rational::floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

BigInt Rational::ceil() const {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    const mpq_class a = ::abs(value_);
    // Initial guess for the decimal exponent, corrected below.
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    BigInt scaled;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const long shift = digits - 1 - e;
        mpq_class s = a;
        if (shift >= 0) {
            s *= mpq_class(pow10(shift));
        } else {
            s /= mpq_class(pow10(-shift));
        }
        // Round half up.
        mpq_class half = s + mpq_class(1, 2);
        mpz_fdiv_q(scaled.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
        const BigInt upper = pow10(digits);
        const BigInt lower = pow10(digits - 1);
        if (scaled >= upper) {
            ++e;
        } else if (scaled < lower) {
            --e;
        } else {
            break;
        }
    }
    std::string mantissa = scaled.get_str();
    std::string out = sign() < 0 ? "-" : "";
    if (e >= -5 && e < digits) {
        if (e >= 0) {
            std::string int_part = mantissa.substr(0, static_cast<std::size_t>(e + 1));
            std::string frac = mantissa.substr(static_cast<std::size_t>(e + 1));
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            out += int_part;
            if (!frac.empty()) out += "." + frac;
        } else {
            std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            out += "0." + frac;
        }
        return out;
    }
    std::string frac = mantissa.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += mantissa.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += (e < 0 ? "e-" : "e+");
    const long ae = e < 0 ? -e : e;
    if (ae < 10) out += "0";
    out += std::to_string(ae);
    return out;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace bern
