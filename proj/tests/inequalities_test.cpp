#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "bern/bernoulli.hpp"
#include "bern/inequalities.hpp"
#include "oracles.hpp"

using bern::InstanceRecord;
using bern::InstanceStatus;
using bern::Quantity;
using bern::Rational;
using bern::SupnormKind;
using bern::Verdict;
using bern::VerificationReport;

namespace {

const InstanceRecord* find(const VerificationReport& r, const std::string& part, unsigned n,
                           std::optional<Rational> t = std::nullopt) {
    for (const auto& rec : r.records) {
        if (rec.part == part && rec.n == n && rec.t == t) return &rec;
    }
    return nullptr;
}

std::optional<Rational> exact(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Quantity bound(unsigned n, const std::string& name) {
    for (auto& [k, v] : bern::ratio_bound_values(n)) {
        if (k == name) return v;
    }
    throw std::runtime_error("no bound " + name);
}

bool le(const Quantity& a, const Quantity& b) {
    const Verdict v = bern::compare(a, b).verdict;
    return v == Verdict::Less || v == Verdict::Equal;
}

}  // namespace

TEST(Registry, CoversAllEntries) {
    const auto& reg = bern::inequality_registry();
    ASSERT_EQ(reg.size(), 17U);
    for (int i = 1; i <= 17; ++i) {
        const std::string id = "R" + std::to_string(i);
        EXPECT_EQ(bern::registry_entry(id).id, id);
        EXPECT_TRUE(bern::is_known_claim(id));
    }
    EXPECT_THROW((void)bern::registry_entry("R18"), std::invalid_argument);
    for (const auto& id : {"R1", "R5", "R7", "R9"}) EXPECT_FALSE(bern::registry_entry(id).transcendental) << id;
    for (const auto& id : {"R2", "R3", "R4", "R10", "R14"}) EXPECT_TRUE(bern::registry_entry(id).transcendental) << id;
    for (const auto& id : bern::suite_ids()) EXPECT_TRUE(bern::is_known_claim(id));
    EXPECT_FALSE(bern::is_known_claim("bogus"));
}

TEST(DefaultGrid, BothHalvesWithoutHalf) {
    const auto g = bern::default_grid(4);
    const std::vector<Rational> expected{Rational(1, 8), Rational(1, 4), Rational(3, 8),
                                         Rational(5, 8), Rational(3, 4), Rational(7, 8)};
    EXPECT_EQ(g, expected);
    EXPECT_TRUE(bern::default_grid(0).empty());
}

TEST(VerifyClaim, R9TangencyAtNOne) {
    const auto r = bern::verify_claim(bern::registry_entry("R9"), 3, {});
    const auto* rec = find(r, "lower", 1);
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->lhs, "1/5");
    EXPECT_EQ(rec->rhs, "1/5");
    EXPECT_EQ(rec->relation, "<=");
    EXPECT_EQ(rec->status, InstanceStatus::Passed);
    EXPECT_TRUE(r.passed());
}

TEST(VerifyClaim, R14LeftBoundEqualityAtQuarter) {
    const auto r = bern::verify_claim(bern::registry_entry("R14"), 1, {Rational(1, 4)});
    const auto* rec = find(r, "odd-ratio-lower", 1, Rational(1, 4));
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->lhs, "-4/3");
    EXPECT_EQ(rec->rhs, "-4/3");
    EXPECT_EQ(rec->status, InstanceStatus::Passed);
    EXPECT_TRUE(r.passed());
}

TEST(VerifyClaim, R6EqualityAtNOne) {
    const auto r = bern::verify_claim(bern::registry_entry("R6"), 1, {});
    const auto* rec = find(r, "sup", 1);
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->lhs, "1/4");
    EXPECT_EQ(rec->rhs, "1/4");
    EXPECT_EQ(rec->status, InstanceStatus::Passed);
}

TEST(VerifyClaim, R13IncludesNZeroLowerSide) {
    const auto r = bern::verify_claim(bern::registry_entry("R13"), 50, {});
    EXPECT_TRUE(r.passed());
    const auto* rec = find(r, "lower", 0);
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->status, InstanceStatus::Passed);
    EXPECT_EQ(find(r, "upper", 0), nullptr);
}

TEST(VerifyClaim, R8ReversalAtNOne) {
    const auto r = bern::verify_claim(bern::registry_entry("R8"), 1, bern::default_grid(8));
    EXPECT_TRUE(r.passed());
    const auto* rec = find(r, "cos-single", 1, Rational(1, 16));
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->notes, "reversed at n = 1");
    EXPECT_EQ(rec->status, InstanceStatus::Passed);
}

TEST(VerifyClaim, RationalEntriesMakeNoEnclosureCalls) {
    const auto grid = bern::default_grid(16);
    for (const auto& id : {"R1", "R5", "R6", "R7", "R9"}) {
        const std::size_t before = bern::enclosure_calls();
        const auto r = bern::verify_claim(bern::registry_entry(id), id == std::string("R6") ? 1 : 10, grid, 64, 1);
        EXPECT_EQ(bern::enclosure_calls(), before) << id;
        EXPECT_EQ(r.enclosure_calls, 0U) << id;
        EXPECT_TRUE(r.passed()) << id;
        EXPECT_GT(r.instances_checked, 0U) << id;
        for (const auto& rec : r.records) EXPECT_EQ(rec.precision_bits, 0) << id;
    }
}

TEST(VerifyClaim, TranscendentalEntriesDoUseEnclosures) {
    const auto r = bern::verify_claim(bern::registry_entry("R3"), 2, bern::default_grid(4), 64, 1);
    EXPECT_GT(r.enclosure_calls, 0U);
}

TEST(VerifyClaim, MirrorPropertyOn16PointGrid) {
    std::vector<Rational> grid;
    for (long k = 1; k <= 16; ++k) {
        grid.push_back(Rational(k, 34));
        grid.push_back(1 - Rational(k, 34));
    }
    std::sort(grid.begin(), grid.end());
    for (const auto& id : {"R1", "R3", "R14"}) {
        const auto r = bern::verify_claim(bern::registry_entry(id), 6, grid, 64, 0);
        ASSERT_TRUE(r.passed()) << id;
        std::map<std::tuple<unsigned, Rational, std::string>, const InstanceRecord*> by_key;
        for (const auto& rec : r.records) by_key[{rec.n, *rec.t, rec.part}] = &rec;
        for (const auto& [key, rec] : by_key) {
            const auto& [n, t, part] = key;
            if (!(t < Rational(1, 2))) continue;
            const auto it = by_key.find({n, 1 - t, part});
            ASSERT_NE(it, by_key.end()) << id << " " << part << " n=" << n << " t=" << t;
            EXPECT_EQ(rec->status, it->second->status) << id << " " << part << " n=" << n << " t=" << t;
        }
        if (std::string(id) == "R3") continue;
        // exact values at 1 - t are the negated values at t (odd symmetry of the claim's terms)
        std::map<std::pair<unsigned, Rational>, std::vector<Rational>> values;
        for (const auto& rec : r.records) {
            for (const auto* s : {&rec.lhs, &rec.rhs}) {
                if (auto v = exact(*s)) values[{rec.n, *rec.t}].push_back(*v);
            }
        }
        for (auto& [key, v] : values) {
            if (!(key.second < Rational(1, 2))) continue;
            auto mirrored = values.at({key.first, 1 - key.second});
            for (auto& x : mirrored) x = -x;
            std::sort(v.begin(), v.end());
            std::sort(mirrored.begin(), mirrored.end());
            EXPECT_EQ(v, mirrored) << id << " n=" << key.first << " t=" << key.second;
        }
    }
}

TEST(VerifyClaim, StrictRelationsNeverPassOnTangency) {
    const auto reports = bern::verify_all(6, 16, 64);
    for (const auto& r : reports) {
        for (const auto& rec : r.records) {
            if (rec.relation != "<" || rec.status != InstanceStatus::Passed) continue;
            const auto a = exact(rec.lhs), b = exact(rec.rhs);
            if (a && b) {
                EXPECT_LT(*a, *b) << r.claim_id << " " << rec.part;
            } else if (rec.lhs.front() == '[' && rec.rhs.front() == '[') {
                // enclosures must be disjoint
                EXPECT_NE(rec.lhs, rec.rhs) << r.claim_id << " " << rec.part;
            }
        }
    }
}

TEST(VerifyClaim, ParallelMatchesSerial) {
    const auto grid = bern::default_grid(8);
    const auto a = bern::verify_claim(bern::registry_entry("R4"), 5, grid, 64, 1);
    const auto b = bern::verify_claim(bern::registry_entry("R4"), 5, grid, 64, 4);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].part, b.records[i].part);
        EXPECT_EQ(a.records[i].t, b.records[i].t);
        EXPECT_EQ(a.records[i].lhs, b.records[i].lhs);
        EXPECT_EQ(a.records[i].status, b.records[i].status);
    }
}

TEST(Supnorm, Examples) {
    const auto odd = bern::supnorm_bound(1, SupnormKind::OddPoly, 64);
    EXPECT_TRUE(bern::testing::near(odd.lo(), odd.hi(), bern::testing::kSqrt3Over36, 18));
    EXPECT_LE(odd.width(), Rational::power_of_two(-60));
    EXPECT_EQ(bern::supnorm_bound(1, SupnormKind::EvenDiff, 64), bern::RationalInterval::point(Rational(1, 4)));
    EXPECT_THROW((void)bern::supnorm_bound(0, SupnormKind::OddPoly), std::invalid_argument);
}

TEST(Supnorm, OddBelowKoubaBoundUpTo8) {
    for (unsigned n = 1; n <= 8; ++n) {
        const Quantity sup([n](int bits) { return bern::supnorm_bound(n, SupnormKind::OddPoly, bits); });
        const Quantity rhs = Quantity(Rational(2 * static_cast<long>(n) + 1) * bern::bernoulli_number(2 * n).abs()) /
                             (Quantity(2) * Quantity::pi());
        EXPECT_EQ(bern::compare(sup, rhs).verdict, Verdict::Less) << "n = " << n;
    }
}

TEST(Supnorm, DominatesGridSamples) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto odd = bern::supnorm_bound(n, SupnormKind::OddPoly, 64);
        const auto even = bern::supnorm_bound(n, SupnormKind::EvenDiff, 64);
        const auto& p = bern::bernoulli_polynomial(2 * n + 1);
        const auto& q = bern::bernoulli_polynomial(2 * n);
        for (long k = 0; k <= 200; ++k) {
            const Rational t(k, 200);
            ASSERT_LE(p.evaluate(t).abs(), odd.hi()) << n << " " << t;
            ASSERT_LE((q.evaluate(t) - bern::bernoulli_number(2 * n)).abs(), even.hi()) << n << " " << t;
        }
        // the even sup is attained at t = 1/2
        EXPECT_TRUE(even.contains((bern::bernoulli_at_half(2 * n) - bern::bernoulli_number(2 * n)).abs()));
    }
}

TEST(Supnorm, NestsAcrossPrecisions) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto a = bern::supnorm_bound(n, SupnormKind::OddPoly, 32);
        const auto b = bern::supnorm_bound(n, SupnormKind::OddPoly, 96);
        EXPECT_TRUE(a.contains(b)) << n;
        EXPECT_LT(b.width(), a.width()) << n;
    }
}

TEST(RatioBounds, OrderingUpTo50) {
    for (unsigned n = 1; n <= 50; ++n) {
        const Quantity r = Quantity((bern::bernoulli_number(2 * n + 2) / bern::bernoulli_number(2 * n)).abs());
        EXPECT_TRUE(le(bound(n, "lower-R13"), r)) << n;
        EXPECT_TRUE(le(r, bound(n, "upper-R13"))) << n;
        EXPECT_TRUE(le(bound(n, "lower-R10"), bound(n, "lower-R13"))) << n;
        EXPECT_TRUE(le(bound(n, "upper-R13"), bound(n, "upper-R12"))) << n;
        EXPECT_TRUE(le(bound(n, "upper-R12"), bound(n, "upper-R11"))) << n;
        EXPECT_TRUE(le(bound(n, "upper-R10"), bound(n, "upper-R13"))) << n;
        if (n >= 2) {
            EXPECT_TRUE(le(bound(n, "lower-R9"), bound(n, "lower-R10"))) << n;
        } else {
            // R9's lower bound is exact at n = 1 and beats the pi^2 bounds there
            EXPECT_EQ(bern::compare(bound(1, "lower-R9"), bound(1, "lower-R10")).verdict, Verdict::Greater);
        }
    }
}

TEST(RatioBounds, R16ReportPasses) {
    const auto r = bern::verify_claim(bern::registry_entry("R16"), 50, {});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.instances_checked, 16U * 50U);
    std::size_t refuted = 0;
    for (const auto& rec : r.records) refuted += rec.status == InstanceStatus::Refuted;
    EXPECT_EQ(refuted, 3U);
}

TEST(VerifyAll, DefaultConfigurationPasses) {
    const auto reports = bern::verify_all(10, 64, 64);
    EXPECT_EQ(reports.size(), 17U + bern::suite_ids().size());
    for (const auto& r : reports) {
        EXPECT_TRUE(r.passed()) << r.claim_id;
        EXPECT_EQ(r.undecided(), 0U) << r.claim_id;
    }
}

TEST(VerifyAll, NMaxOnePasses) {
    for (const auto& r : bern::verify_all(1, 16, 64)) EXPECT_TRUE(r.passed()) << r.claim_id;
}

TEST(VerifyAll, EmptyGridStillChecksScalars) {
    bern::VerifyOptions options;
    options.n_max = 4;
    options.grid_density = 0;
    options.include_certify = false;
    const auto reports = bern::verify_all(options);
    for (const auto& r : reports) {
        const auto kind = bern::registry_entry(r.claim_id).kind;
        EXPECT_TRUE(r.passed()) << r.claim_id;
        if (bern::is_pointwise(kind)) {
            EXPECT_EQ(r.instances_checked, 0U) << r.claim_id;
        } else {
            EXPECT_GT(r.instances_checked, 0U) << r.claim_id;
        }
    }
}

TEST(VerifyAll, ClaimFilter) {
    bern::VerifyOptions options;
    options.n_max = 3;
    options.grid_density = 8;
    options.claims = {"R12", "prop-5.7"};
    const auto reports = bern::verify_all(options);
    ASSERT_EQ(reports.size(), 2U);
    EXPECT_EQ(reports[0].claim_id, "R12");
    EXPECT_EQ(reports[1].claim_id, "prop-5.7");
    options.claims = {"nope"};
    EXPECT_THROW((void)bern::verify_all(options), std::invalid_argument);
}
