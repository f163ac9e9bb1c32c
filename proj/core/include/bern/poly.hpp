#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficient i multiplies t^i. The highest stored coefficient is nonzero;
 * the zero polynomial has no coefficients and degree -1.
 */

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bern/rational.hpp"

namespace bern {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);

    static Poly constant(const Rational& c);
    /// c * t^degree
    static Poly monomial(const Rational& c, int degree);
    /// slope * t + intercept
    static Poly linear(const Rational& slope, const Rational& intercept);
    /// Product of (t - root) over the given roots.
    static Poly from_roots(const std::vector<Rational>& roots);

    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of t^i, zero beyond the degree.
    [[nodiscard]] Rational coefficient(int i) const;
    [[nodiscard]] const Rational& leading() const;

    /// Horner evaluation.
    [[nodiscard]] Rational evaluate(const Rational& t) const;
    [[nodiscard]] int sign_at(const Rational& t) const { return evaluate(t).sign(); }

    [[nodiscard]] Poly derivative() const;
    /// p(alpha * t + beta)
    [[nodiscard]] Poly compose_affine(const Rational& alpha, const Rational& beta) const;

    /// Positive rational c with p / c having coprime integer coefficients.
    [[nodiscard]] Rational content() const;
    /// p / content(p). Rejects the zero polynomial.
    [[nodiscard]] Poly primitive_part() const;
    /// p / leading(p). Rejects the zero polynomial.
    [[nodiscard]] Poly monic() const;

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Strips every factor (t - root); returns the quotient and the multiplicity removed.
    [[nodiscard]] std::pair<Poly, int> divide_out_root(const Rational& root) const;

    [[nodiscard]] std::string to_string(char var = 't') const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
    friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
[[nodiscard]] Poly gcd(Poly a, Poly b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bern
