#pragma once

/**
 * @file certify.hpp
 * @brief Certificates for monotonicity claims about ratios of Bernoulli
 *        polynomials, exact sequence checks in n, and limit checks.
 *
 * A ratio f/g is monotone on (lo, hi) when the Wronskian W = f'g - fg' keeps
 * one sign there, since (f/g)' = W/g^2. Zeros of W at lo or hi are divided
 * out exactly, and the remaining factor is Sturm-counted on the closed
 * interval, so no margin is needed.
 */

#include <optional>
#include <string>
#include <vector>

#include "bern/enclosure.hpp"
#include "bern/poly.hpp"
#include "bern/rational.hpp"
#include "bern/roots.hpp"

namespace bern {

enum class Direction { Increasing, Decreasing };
enum class Conclusion { Increasing, Decreasing, Failed };

[[nodiscard]] const char* to_string(Direction d);
[[nodiscard]] const char* to_string(Conclusion c);
[[nodiscard]] Direction flipped(Direction d);

struct BoundaryFactor {
    Rational root;
    int multiplicity = 0;
};

struct MonotonicityCertificate {
    std::string claim_id;
    std::string label;  ///< human-readable ratio, e.g. "B_1/B_3"
    unsigned n = 0;
    std::optional<unsigned> m;

    Poly f;
    Poly g;
    Rational lo;
    Rational hi;
    Direction expected = Direction::Increasing;

    Poly wronskian;                         ///< f'g - fg'
    std::vector<BoundaryFactor> boundary;   ///< factors (t - lo)^k, (t - hi)^k removed from W
    std::size_t interior_root_count = 0;    ///< distinct zeros of W in (lo, hi)
    std::vector<IsolatingInterval> wronskian_zeros;  ///< only even-multiplicity zeros survive
    Rational witness_point;
    int witness_sign = 0;
    std::vector<IsolatingInterval> denominator_zero_locations;
    Conclusion conclusion = Conclusion::Failed;
    std::string notes;

    [[nodiscard]] bool passed() const;
};

/// Certifies that f/g is monotone on (lo, hi) and reports the direction found.
/// The certificate records `expected`; passed() compares the two.
[[nodiscard]] MonotonicityCertificate certify_ratio_monotone(const Poly& f, const Poly& g,
                                                             const Rational& lo,
                                                             const Rational& hi,
                                                             Direction expected);

/// Theorem-family ids accepted by certify_family.
[[nodiscard]] const std::vector<std::string>& theorem_family_ids();

/// One family: "thm-1.2", "cor-3.1", "cor-3.2", "thm-t5", "thm-t3", "thm-t6",
/// "cor-logconcave" or "prop-5.1". Instances are ordered by n, then m, then interval.
[[nodiscard]] std::vector<MonotonicityCertificate> certify_family(const std::string& id,
                                                                  unsigned n_max,
                                                                  unsigned jobs = 1);

/// Every family above with indices up to n_max (requires n_max >= 2).
[[nodiscard]] std::vector<MonotonicityCertificate> certify_theorem_suite(unsigned n_max,
                                                                         unsigned jobs = 1);

/// (2n+1) B_2n / B_2n+1 decreasing on each half-interval, n = 0..n_max.
[[nodiscard]] std::vector<MonotonicityCertificate> certify_logconcavity_odd(unsigned n_max,
                                                                            unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Sequences in n

enum class SequenceClaim { T5, T6 };
enum class SequenceConclusion { Increasing, Decreasing, LogConvex, LogConcave, Failed };

[[nodiscard]] const char* to_string(SequenceClaim c);
[[nodiscard]] const char* to_string(SequenceConclusion c);

struct SequenceComparison {
    unsigned n = 0;  ///< index of the comparison (the later term, or the centre term)
    Rational lhs;
    Rational rhs;
    char relation = '<';  ///< relation required between lhs and rhs: '<', '>', 'L' (<=), 'G' (>=)
    bool holds = false;
};

struct SequenceCertificate {
    std::string claim_id;
    std::optional<Rational> t;
    unsigned n_lo = 0;
    unsigned n_hi = 0;
    std::vector<SequenceComparison> comparisons;
    SequenceConclusion expected = SequenceConclusion::Failed;
    SequenceConclusion conclusion = SequenceConclusion::Failed;

    [[nodiscard]] bool passed() const { return conclusion == expected; }
};

/// T5: (2n+1) B_2n(t) / B_2n+1(t), n = 0..n_max, increasing for t < 1/2.
/// T6: B_2n(t) / (n B_2n-1(t)), n = 1..n_max, decreasing for t < 1/2.
/// Both directions flip on (1/2, 1). Rejects t outside (0,1/2) u (1/2,1) and t
/// where a denominator vanishes.
[[nodiscard]] SequenceCertificate certify_sequence_in_n(const Rational& t, SequenceClaim claim,
                                                        unsigned n_max);

/// The sequence t = k / (2 * points + 1), k = 1..points, inside (0, 1/2).
[[nodiscard]] std::vector<Rational> sequence_grid(unsigned points = 16);

/// Log-convexity of |B_2n|/(2n)! and c_n, log-concavity of |B_2n(1/2)|/(2n)! and
/// (1 - 2^{1-2n}) c_n over terms n = 1..n_max, and |B_2n+2 / B_2n| increasing over
/// n = 0..n_max. Requires n_max >= 3.
[[nodiscard]] std::vector<SequenceCertificate> certify_logconvexity_sequences(unsigned n_max);

// ---------------------------------------------------------------------------
// Limits

enum class LimitClaim { Ratio2n2n1, Ratio2n2nm1, Asymptotic };

[[nodiscard]] const char* to_string(LimitClaim c);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
[[nodiscard]] LimitClaim parse_limit_claim(const std::string& name);

enum class LimitStatus { WithinTolerance, OutsideTolerance, Undecided };
[[nodiscard]] const char* to_string(LimitStatus s);

struct LimitSample {
    unsigned n = 0;
    Quantity term;            ///< the sequence term (scaled polynomial value for Asymptotic)
    Quantity gap;             ///< |term - limit|, relative for Asymptotic
    RationalInterval gap_enclosure;
};

struct LimitReport {
    LimitClaim claim = LimitClaim::Ratio2n2n1;
    Rational t;
    unsigned n_lo = 0;
    unsigned n_max = 0;
    Rational tol;
    Quantity limit;
    std::vector<LimitSample> samples;
    LimitStatus status = LimitStatus::Undecided;  ///< gap at n_max against tol
    int precision_used = 0;
    /// Successive gaps compared within each residue class mod stride (1 for the
    /// ratio limits, 2 for the asymptotic claim, whose gaps alternate with parity).
    unsigned stride = 1;
    /// For each residue class (indexed by n_lo + r), the first index from which
    /// gaps strictly decrease through n_max; nullopt for an empty class.
    std::vector<std::optional<unsigned>> monotone_from;
    /// Comparisons that could not be decided within the precision budget.
    unsigned undecided_comparisons = 0;

    /// True when, within every residue class, gaps strictly decrease from `from` on.
    [[nodiscard]] bool decreasing_from(unsigned from) const;
    [[nodiscard]] const LimitSample& sample(unsigned n) const;
};

/// Samples the claim at n = n_lo..n_max (n_lo = 1 for the ratios, 2 for the
/// asymptotic claim). t must lie in (0,1) with t != 1/2.
[[nodiscard]] LimitReport check_limit(LimitClaim claim, const Rational& t, unsigned n_max,
                                      const Rational& tol, int bits = kDefaultBits);

}  // namespace bern
