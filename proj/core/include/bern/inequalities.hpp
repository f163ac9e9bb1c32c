#pragma once

/**
 * @file inequalities.hpp
 * @brief Registry of the inequalities and bound orderings for Bernoulli
 *        numbers and polynomials, and a verifier over index ranges and grids.
 *
 * Each registry entry expands into instances (n, optional t, part). A part is a
 * single comparison lhs < rhs or lhs <= rhs, decided exactly when both sides
 * are rational and by enclosures with precision escalation otherwise.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bern/enclosure.hpp"
#include "bern/rational.hpp"

namespace bern {

enum class ClaimKind {
    PointwiseDouble,
    PointwiseSingle,
    ScalarDouble,
    ScalarSingle,
    Supnorm,
    Ordering
};

[[nodiscard]] const char* to_string(ClaimKind k);
/// Pointwise claims sample t on a grid; the rest are indexed by n alone.
[[nodiscard]] bool is_pointwise(ClaimKind k);

struct ClaimRegistryEntry {
    std::string id;  ///< "R1" .. "R17"
    ClaimKind kind = ClaimKind::PointwiseDouble;
    unsigned n_lo = 0;
    std::optional<unsigned> n_hi;
    std::string t_domain;
    bool transcendental = false;
    std::string reversal_cases;
    std::string statement;
};

/// All entries, in id order R1..R17.
[[nodiscard]] const std::vector<ClaimRegistryEntry>& inequality_registry();
/// Throws std::invalid_argument for an unknown id.
[[nodiscard]] const ClaimRegistryEntry& registry_entry(const std::string& id);

enum class InstanceStatus {
    Passed,
    Failed,
    Undecided,
    Refuted  ///< a registered counterexample, rigorously shown to violate the inequality
};

[[nodiscard]] const char* to_string(InstanceStatus s);

struct InstanceRecord {
    std::string claim_id;
    std::string part;
    unsigned n = 0;
    std::optional<unsigned> m;
    std::optional<Rational> t;
    InstanceStatus status = InstanceStatus::Undecided;
    std::string relation;  ///< "<" or "<=", read as lhs relation rhs
    std::string lhs;       ///< "p/q" when exact, else "[lo, hi]" at precision_bits
    std::string rhs;
    int precision_bits = 0;  ///< 0 for an exact decision
    std::string notes;

    [[nodiscard]] bool ok() const {
        return status == InstanceStatus::Passed || status == InstanceStatus::Refuted;
    }
};

struct VerificationReport {
    std::string claim_id;
    std::size_t instances_checked = 0;
    std::vector<InstanceRecord> failures;  ///< Failed or Undecided records
    std::size_t precision_escalations = 0;
    std::size_t enclosure_calls = 0;
    std::string wall_notes;
    std::vector<InstanceRecord> records;

    [[nodiscard]] bool passed() const { return failures.empty(); }
    [[nodiscard]] std::size_t undecided() const;
};

/// t = k / (2 * density) for k = 1..2*density-1 with k != density, so both
/// halves of (0,1) are sampled and 1/2 is skipped.
[[nodiscard]] std::vector<Rational> default_grid(unsigned density);

/// Checks one entry for n = n_lo..min(n_max, n_hi). Grid points outside the
/// entry's domain are skipped. Records are ordered by n, then t, then part.
[[nodiscard]] VerificationReport verify_claim(const ClaimRegistryEntry& entry, unsigned n_max,
                                              const std::vector<Rational>& grid,
                                              int bits = kDefaultBits, unsigned jobs = 1);

enum class SupnormKind { OddPoly, EvenDiff };

/// Enclosure of sup over [0,1] of |B_2n+1(t)| (OddPoly) or |B_2n(t) - B_2n| (EvenDiff),
/// taken over the critical points. A point interval means the supremum is exact.
[[nodiscard]] RationalInterval supnorm_bound(unsigned n, SupnormKind which, int bits = kDefaultBits);

/// The bounds on |B_2n+2 / B_2n| from R9 to R13 at one n, named "lower-R9",
/// "upper-R9", ... "upper-R13". Rational bounds are exact Quantities.
[[nodiscard]] std::vector<std::pair<std::string, Quantity>> ratio_bound_values(unsigned n);

struct VerifyOptions {
    unsigned n_max = 10;         ///< pointwise and sup-norm claims
    unsigned scalar_n_max = 0;   ///< scalar and ordering claims; 0 means max(n_max, 50)
    unsigned grid_density = 64;
    int bits = kDefaultBits;
    unsigned jobs = 0;           ///< 0 uses the hardware concurrency
    std::vector<std::string> claims;  ///< empty runs everything
    bool include_certify = true;
};

/// Certificate-suite ids that verify_all also runs.
[[nodiscard]] const std::vector<std::string>& suite_ids();
/// One certify suite as a report. Throws std::invalid_argument for ids outside suite_ids().
[[nodiscard]] VerificationReport run_suite(const std::string& id, const VerifyOptions& options);
/// True for registry ids and suite ids.
[[nodiscard]] bool is_known_claim(const std::string& id);

/// Registry entries first, then the certify suites, each as one report.
[[nodiscard]] std::vector<VerificationReport> verify_all(const VerifyOptions& options);
[[nodiscard]] std::vector<VerificationReport> verify_all(unsigned n_max, unsigned grid_density,
                                                         int bits);

}  // namespace bern
