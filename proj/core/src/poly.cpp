#include "bern/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bern {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& slope, const Rational& intercept) {
    return Poly(std::vector<Rational>{intercept, slope});
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p = constant(1);
    for (const auto& r : roots) p *= linear(1, -r);
    return p;
}

Rational Poly::coefficient(int i) const {
    if (i < 0 || i > degree()) return {};
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return coeffs_.back();
}

Rational Poly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Poly(std::move(d));
}

Poly Poly::compose_affine(const Rational& alpha, const Rational& beta) const {
    // Horner in the polynomial ring: acc = acc * (alpha t + beta) + c_i.
    const Poly inner = linear(alpha, beta);
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

Rational Poly::content() const {
    if (is_zero()) throw std::domain_error("Poly::content: zero polynomial");
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    return {num_gcd, den_lcm};
}

Poly Poly::primitive_part() const {
    if (is_zero()) throw std::domain_error("Poly::primitive_part: zero polynomial");
    const Rational c = content();
    if (c == Rational(1)) return *this;
    Poly p = *this;
    const Rational inv = c.reciprocal();
    for (auto& x : p.coeffs_) x *= inv;
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
    return *this * leading().reciprocal();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    if (degree() < divisor.degree()) return {Poly{}, *this};
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
    const Rational lead_inv = divisor.leading().reciprocal();
    for (int k = degree() - dd; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::pair<Poly, int> Poly::divide_out_root(const Rational& root) const {
    if (is_zero()) throw std::domain_error("Poly::divide_out_root: zero polynomial");
    Poly p = *this;
    int multiplicity = 0;
    while (p.degree() >= 1 && p.evaluate(root).is_zero()) {
        // Synthetic division by (t - root).
        const auto n = p.coeffs_.size();
        std::vector<Rational> q(n - 1);
        Rational carry;
        for (std::size_t i = n; i-- > 1;) {
            carry = p.coeffs_[i] + carry * root;
            q[i - 1] = carry;
        }
        p = Poly(std::move(q));
        ++multiplicity;
    }
    return {p, multiplicity};
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != Rational(1)) {
            os << a;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

Poly gcd(Poly a, Poly b) {
    // Primitive remainder sequence; keeps coefficient growth in check.
    if (!a.is_zero()) a = a.primitive_part();
    if (!b.is_zero()) b = b.primitive_part();
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.primitive_part();
    }
    return a.is_zero() ? a : a.monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace bern
