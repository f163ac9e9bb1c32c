#pragma once

/**
 * @file roots.hpp
 * @brief Exact real-root counting and isolation by Sturm sequences.
 *
 * Chains are built from primitive integer polynomials with the rule
 * p_{i+1} = -rem(p_{i-1}, p_i) up to a positive factor, so sign variations
 * are unaffected by the normalization.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "bern/enclosure.hpp"
#include "bern/poly.hpp"
#include "bern/rational.hpp"

namespace bern {

/// 10^-9, the exact margin that turns an open interval into a checkable bracket.
[[nodiscard]] const Rational& endpoint_margin();

inline constexpr int kMaxBisections = 256;

struct IsolatingInterval {
    Rational lo;
    Rational hi;
    std::string target;

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// The caller passed an endpoint that is itself a root; perturb it and retry.
class EndpointIsRoot : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A root count contradicted an expectation, or refinement ran out of depth.
class RootIsolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The canonical (primitive-normalized) Sturm chain of p; the last element is a
/// nonzero constant when p is square-free, otherwise gcd(p, p') up to a factor.
[[nodiscard]] std::vector<Poly> sturm_sequence(const Poly& p);

/// p / gcd(p, p'), primitive.
[[nodiscard]] Poly square_free_part(const Poly& p);

/// Precomputed chain for repeated counting on one polynomial.
class SturmCounter {
public:
    explicit SturmCounter(const Poly& p);

    /// Distinct real roots in the open interval (lo, hi). Endpoints must not be roots.
    [[nodiscard]] std::size_t count(const Rational& lo, const Rational& hi) const;
    [[nodiscard]] int sign_at(const Rational& x) const;
    [[nodiscard]] const Poly& square_free() const { return square_free_; }

private:
    [[nodiscard]] int variations(const Rational& x) const;

    Poly square_free_;
    std::vector<std::vector<BigInt>> chain_;
};

/// Number of distinct real roots of p in (lo, hi). Requires lo < hi and
/// p(lo) != 0, p(hi) != 0 (throws EndpointIsRoot otherwise).
[[nodiscard]] std::size_t count_roots(const Poly& p, const Rational& lo, const Rational& hi);

/// All distinct roots of p in (lo, hi), each in an interval of width <= max_width
/// whose endpoints are non-roots of opposite sign. Ordered by position.
[[nodiscard]] std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& lo,
                                                           const Rational& hi,
                                                           const Rational& max_width,
                                                           const std::string& target = {});

/// Bisects a sign-change bracket of p until its width is <= max_width.
[[nodiscard]] IsolatingInterval refine(const Poly& p, IsolatingInterval bracket,
                                       const Rational& max_width);

/// The unique zero r_{2n} of B_{2n} in (0, 1/2), to width <= max_width.
/// Throws RootIsolationError when the root count in (0, 1/2) is not exactly one.
[[nodiscard]] IsolatingInterval isolate_r2n(unsigned n, const Rational& max_width);

/// Exact position of x against r_{2n}, read off the sign of B_{2n}(x).
/// Requires 0 < x < 1/2. Less means x < r_{2n}.
[[nodiscard]] Verdict compare_with_r2n(unsigned n, const Rational& x);

/// Compares the lower bound 1/4 - 1/(2^{2n+1} pi) with r_{2n} by the sign of
/// B_{2n} at rational points on either side of the bound, doubling the bits of
/// pi from 64 up to max_bits. Less means the bound lies below r_{2n}.
[[nodiscard]] ComparisonOutcome compare_lehmer_bound(unsigned n, int max_bits = kMaxBits);

struct R2nMonotoneResult {
    bool increasing = false;
    unsigned first_failure = 0;  ///< n with r_{2n} < r_{2n+2} unproven; 0 when none
    std::vector<IsolatingInterval> intervals;  ///< index k holds r_{2(k+1)}
};

/// Certifies r_2 < r_4 < ... < r_{2 n_max} by refining until neighbours separate.
[[nodiscard]] R2nMonotoneResult verify_r2n_monotone(unsigned n_max, const Rational& width);

}  // namespace bern
