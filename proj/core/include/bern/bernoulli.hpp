#pragma once

/**
 * @file bernoulli.hpp
 * @brief Exact Bernoulli numbers, Bernoulli polynomials, Euler numbers and
 *        the rational coefficients of the even zeta values.
 *
 * All tables are memoized, append-only and safe for concurrent readers.
 *
 *   B_n     : sum_{k=0}^{n} C(n+1,k) B_k = 0,  B_0 = 1
 *   B_n(t)  : sum_{k=0}^{n} C(n,k) B_k t^{n-k}
 *   E_2n    : sum_{k=0}^{n} C(2n,2k) E_2k = 0,  E_0 = 1, odd E_n = 0
 *   zeta(2n) = c_n * pi^{2n},  c_n = (-1)^{n+1} 2^{2n-1} B_2n / (2n)!
 */

#include <memory>
#include <shared_mutex>
#include <vector>

#include "bern/poly.hpp"
#include "bern/rational.hpp"

namespace bern {

class BernoulliCache {
public:
    BernoulliCache() = default;
    BernoulliCache(const BernoulliCache&) = delete;
    BernoulliCache& operator=(const BernoulliCache&) = delete;

    [[nodiscard]] Rational number(unsigned n) const;
    /// Reference stays valid for the cache's lifetime.
    [[nodiscard]] const Poly& polynomial(unsigned n) const;
    [[nodiscard]] BigInt euler(unsigned n) const;

private:
    void extend_numbers(unsigned n) const;
    void extend_polynomials(unsigned n) const;
    void extend_euler(unsigned half_index) const;

    mutable std::shared_mutex mutex_;
    mutable std::vector<Rational> numbers_;
    mutable std::vector<std::unique_ptr<const Poly>> polynomials_;
    mutable std::vector<BigInt> euler_even_;  // E_{2k} at index k
};

/// Process-wide cache used by the free functions below.
BernoulliCache& bernoulli_cache();

[[nodiscard]] Rational bernoulli_number(unsigned n);
[[nodiscard]] const Poly& bernoulli_polynomial(unsigned n);
[[nodiscard]] BigInt euler_number(unsigned n);

/// B_n(1/2) = -(1 - 2^{1-n}) B_n
[[nodiscard]] Rational bernoulli_at_half(unsigned n);
/// B_n(1/4) = -(1 - 2^{1-n}) / 2^n * B_n - n / 4^n * E_{n-1}; rejects n = 0.
[[nodiscard]] Rational bernoulli_at_quarter(unsigned n);
/// c_n with zeta(2n) = c_n pi^{2n}; rejects n = 0.
[[nodiscard]] Rational zeta_even_coefficient(unsigned n);

/// n! as an exact integer.
[[nodiscard]] BigInt factorial(unsigned n);

}  // namespace bern
