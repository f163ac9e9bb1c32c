#include "bern/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

#include "bern/binomial.hpp"

namespace bern {

void BernoulliCache::extend_numbers(unsigned n) const {
    // Caller holds the unique lock.
    if (numbers_.empty()) numbers_.emplace_back(1);
    while (numbers_.size() <= n) {
        const auto m = static_cast<unsigned>(numbers_.size());
        Rational sum;
        for (unsigned k = 0; k < m; ++k) {
            if (numbers_[k].is_zero()) continue;
            sum += Rational(binomial(m + 1, k)) * numbers_[k];
        }
        numbers_.push_back(-sum / Rational(static_cast<long>(m) + 1));
    }
}

void BernoulliCache::extend_polynomials(unsigned n) const {
    extend_numbers(n);
    while (polynomials_.size() <= n) {
        const auto m = static_cast<unsigned>(polynomials_.size());
        std::vector<Rational> coeffs(m + 1);
        for (unsigned k = 0; k <= m; ++k) {
            if (numbers_[k].is_zero()) continue;
            coeffs[m - k] = Rational(binomial(m, k)) * numbers_[k];
        }
        polynomials_.push_back(std::make_unique<const Poly>(std::move(coeffs)));
    }
}

void BernoulliCache::extend_euler(unsigned half_index) const {
    if (euler_even_.empty()) euler_even_.emplace_back(1);
    while (euler_even_.size() <= half_index) {
        const auto m = static_cast<unsigned>(euler_even_.size());
        BigInt sum = 0;
        for (unsigned k = 0; k < m; ++k) sum += binomial(2 * m, 2 * k) * euler_even_[k];
        euler_even_.push_back(-sum);
    }
}

Rational BernoulliCache::number(unsigned n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < numbers_.size()) return numbers_[n];
    }
    std::unique_lock lock(mutex_);
    extend_numbers(n);
    return numbers_[n];
}

const Poly& BernoulliCache::polynomial(unsigned n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < polynomials_.size()) return *polynomials_[n];
    }
    std::unique_lock lock(mutex_);
    extend_polynomials(n);
    return *polynomials_[n];
}

BigInt BernoulliCache::euler(unsigned n) const {
    if (n % 2 == 1) return 0;
    const unsigned half = n / 2;
    {
        std::shared_lock lock(mutex_);
        if (half < euler_even_.size()) return euler_even_[half];
    }
    std::unique_lock lock(mutex_);
    extend_euler(half);
    return euler_even_[half];
}

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(unsigned n) { return bernoulli_cache().number(n); }

const Poly& bernoulli_polynomial(unsigned n) { return bernoulli_cache().polynomial(n); }

BigInt euler_number(unsigned n) { return bernoulli_cache().euler(n); }

Rational bernoulli_at_half(unsigned n) {
    const Rational factor = Rational(1) - Rational::power_of_two(1 - static_cast<long>(n));
    return -factor * bernoulli_number(n);
}

Rational bernoulli_at_quarter(unsigned n) {
    if (n == 0) throw std::invalid_argument("bernoulli_at_quarter: n must be >= 1");
    const long sn = static_cast<long>(n);
    const Rational first = (Rational(1) - Rational::power_of_two(1 - sn)) *
                           Rational::power_of_two(-sn) * bernoulli_number(n);
    const Rational second = Rational(sn) * Rational::power_of_two(-2 * sn) *
                            Rational(euler_number(n - 1));
    return -first - second;
}

Rational zeta_even_coefficient(unsigned n) {
    if (n == 0) throw std::invalid_argument("zeta_even_coefficient: n must be >= 1");
    const long sn = static_cast<long>(n);
    Rational c = Rational::power_of_two(2 * sn - 1) * bernoulli_number(2 * n) /
                 Rational(factorial(2 * n));
    return n % 2 == 1 ? c : -c;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace bern
