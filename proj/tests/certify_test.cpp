#include <algorithm>

#include <gtest/gtest.h>

#include "bern/bernoulli.hpp"
#include "bern/certify.hpp"
#include "oracles.hpp"

using bern::Conclusion;
using bern::Direction;
using bern::MonotonicityCertificate;
using bern::Poly;
using bern::Rational;

namespace {

const Rational kMargin = Rational::inverse_power_of_ten(9);
const Rational kHalf(1, 2);

const Poly& B(unsigned n) { return bern::bernoulli_polynomial(n); }

const MonotonicityCertificate& find(const std::vector<MonotonicityCertificate>& certs, unsigned n,
                                    std::optional<unsigned> m, const Rational& lo) {
    const auto it = std::find_if(certs.begin(), certs.end(), [&](const auto& c) {
        return c.n == n && c.m == m && c.lo == lo;
    });
    if (it == certs.end()) throw std::runtime_error("certificate not found");
    return *it;
}

}  // namespace

TEST(CertifyRatioMonotone, Examples) {
    const auto a = bern::certify_ratio_monotone(B(1), B(3), kMargin, kHalf - kMargin, Direction::Increasing);
    EXPECT_EQ(a.conclusion, Conclusion::Increasing);
    EXPECT_TRUE(a.passed());
    const auto b = bern::certify_ratio_monotone(B(0), B(1), kMargin, kHalf - kMargin, Direction::Decreasing);
    EXPECT_EQ(b.conclusion, Conclusion::Decreasing);
    const auto c = bern::certify_ratio_monotone(B(3), B(5), kHalf + kMargin, 1 - kMargin, Direction::Decreasing);
    EXPECT_EQ(c.conclusion, Conclusion::Decreasing);
    EXPECT_EQ(c.wronskian, B(3).derivative() * B(5) - B(3) * B(5).derivative());
}

TEST(CertifyRatioMonotone, WrongDirectionFails) {
    const auto bad = bern::certify_ratio_monotone(B(1), B(3), 0, kHalf, Direction::Decreasing);
    EXPECT_FALSE(bad.passed());
    EXPECT_EQ(bad.conclusion, Conclusion::Increasing);
}

TEST(CertifyRatioMonotone, SignChangeNeverPasses) {
    // t^2 / 1 on (-1, 1) is not monotone
    const Poly f({0, 0, 1});
    const auto cert = bern::certify_ratio_monotone(f, Poly::constant(1), -1, 1, Direction::Increasing);
    EXPECT_EQ(cert.conclusion, Conclusion::Failed);
    EXPECT_FALSE(cert.passed());
    const auto also = bern::certify_ratio_monotone(f, Poly::constant(1), -1, 1, Direction::Decreasing);
    EXPECT_FALSE(also.passed());
}

TEST(CertifyRatioMonotone, RejectsDegenerateInput) {
    EXPECT_THROW((void)bern::certify_ratio_monotone(B(1), Poly(), 0, kHalf, Direction::Increasing),
                 std::invalid_argument);
    EXPECT_THROW((void)bern::certify_ratio_monotone(B(1), B(3), kHalf, 0, Direction::Increasing),
                 std::invalid_argument);
}

TEST(CertifyRatioMonotone, BoundaryZerosAreDividedOut) {
    // W for B_1/B_3 vanishes at 0 and 1/2 because B_3 does
    const auto cert = bern::certify_ratio_monotone(B(1), B(3), 0, kHalf, Direction::Increasing);
    EXPECT_TRUE(cert.passed());
    EXPECT_FALSE(cert.boundary.empty());
    for (const auto& b : cert.boundary) {
        EXPECT_TRUE(b.root == Rational(0) || b.root == kHalf);
        EXPECT_GT(b.multiplicity, 0);
        EXPECT_TRUE(cert.wronskian.evaluate(b.root).is_zero());
    }
    EXPECT_EQ(cert.interior_root_count, 0U);
}

TEST(TheoremSuite, Examples) {
    const auto t3 = bern::certify_family("thm-t3", 2);
    const auto& c = find(t3, 2, 1, 0);
    EXPECT_TRUE(c.passed());
    EXPECT_EQ(c.expected, Direction::Decreasing);
    ASSERT_EQ(c.denominator_zero_locations.size(), 1U);
    EXPECT_TRUE(bern::testing::near(c.denominator_zero_locations[0].lo, c.denominator_zero_locations[0].hi,
                                    bern::testing::kR4, 30));

    const auto cor = bern::certify_family("cor-3.1", 2);
    const auto& d = find(cor, 2, 1, 0);
    EXPECT_TRUE(d.passed());
    EXPECT_EQ(d.conclusion, Conclusion::Decreasing);
    // positive on (0,1/2): -B_1/B_3 at 1/4 is (1/4)/(3/64)
    EXPECT_GT((d.f.evaluate(Rational(1, 4)) / d.g.evaluate(Rational(1, 4))).sign(), 0);

    const auto t6 = bern::certify_family("thm-t6", 1);
    const auto& e = find(t6, 1, std::nullopt, 0);
    EXPECT_TRUE(e.passed());
    EXPECT_EQ(e.conclusion, Conclusion::Increasing);
    EXPECT_EQ(e.f, B(2));
    EXPECT_EQ(e.g, B(1));
}

TEST(TheoremSuite, AllFamiliesPassUpTo6) {
    const auto certs = bern::certify_theorem_suite(6, 0);
    EXPECT_GT(certs.size(), 100U);
    for (const auto& c : certs) {
        EXPECT_TRUE(c.passed()) << c.claim_id << " " << c.label << " on (" << c.lo << ", " << c.hi << ")";
    }
    EXPECT_THROW((void)bern::certify_theorem_suite(1), std::invalid_argument);
    EXPECT_THROW((void)bern::certify_family("nope", 3), std::invalid_argument);
}

TEST(TheoremSuite, ParallelMatchesSerial) {
    const auto serial = bern::certify_family("cor-3.2", 5, 1);
    const auto parallel = bern::certify_family("cor-3.2", 5, 4);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].label, parallel[i].label);
        EXPECT_EQ(serial[i].lo, parallel[i].lo);
        EXPECT_EQ(serial[i].wronskian, parallel[i].wronskian);
        EXPECT_EQ(serial[i].conclusion, parallel[i].conclusion);
    }
}

TEST(TheoremSuite, ReflectionSymmetryForTheorem12) {
    for (const auto& c : bern::certify_family("thm-1.2", 8)) {
        if (c.lo != kHalf) continue;
        const Poly F = c.f.compose_affine(-1, 1);
        const Poly G = c.g.compose_affine(-1, 1);
        const auto r = bern::certify_ratio_monotone(F, G, 1 - c.hi, 1 - c.lo, bern::flipped(c.expected));
        EXPECT_TRUE(c.passed());
        EXPECT_TRUE(r.passed()) << c.label;
        EXPECT_EQ(r.wronskian, -c.wronskian.compose_affine(-1, 1)) << c.label;
        EXPECT_EQ(r.interior_root_count, c.interior_root_count);
        EXPECT_EQ(r.conclusion == Conclusion::Increasing, c.conclusion == Conclusion::Decreasing);
    }
}

TEST(LogConcavityOdd, Examples) {
    const auto certs = bern::certify_logconcavity_odd(3);
    const auto& zero = find(certs, 0, std::nullopt, 0);
    EXPECT_TRUE(zero.passed());
    EXPECT_EQ(zero.conclusion, Conclusion::Decreasing);
    EXPECT_EQ(zero.f.evaluate(Rational(1, 4)) / zero.g.evaluate(Rational(1, 4)), Rational(-4));  // 2/(2t-1)
    EXPECT_TRUE(find(certs, 1, std::nullopt, 0).passed());
    EXPECT_TRUE(find(certs, 1, std::nullopt, kHalf).passed());
    for (const auto& c : certs) EXPECT_TRUE(c.passed());
}

TEST(SequenceInN, Examples) {
    using bern::SequenceClaim;
    using bern::SequenceConclusion;
    EXPECT_EQ(bern::certify_sequence_in_n(Rational(1, 8), SequenceClaim::T5, 12).conclusion,
              SequenceConclusion::Increasing);
    EXPECT_EQ(bern::certify_sequence_in_n(Rational(3, 4), SequenceClaim::T5, 12).conclusion,
              SequenceConclusion::Decreasing);
    EXPECT_EQ(bern::certify_sequence_in_n(Rational(1, 8), SequenceClaim::T6, 12).conclusion,
              SequenceConclusion::Decreasing);
    EXPECT_TRUE(bern::certify_sequence_in_n(Rational(1, 8), SequenceClaim::T6, 12).passed());
}

TEST(SequenceInN, RejectsDegenerateT) {
    using bern::SequenceClaim;
    EXPECT_THROW((void)bern::certify_sequence_in_n(kHalf, SequenceClaim::T5, 5), std::invalid_argument);
    EXPECT_THROW((void)bern::certify_sequence_in_n(0, SequenceClaim::T6, 5), std::invalid_argument);
    EXPECT_THROW((void)bern::certify_sequence_in_n(Rational(3, 2), SequenceClaim::T5, 5), std::invalid_argument);
}

TEST(SequenceInN, T5DifferencesShareSignAndFlipUnderReflection) {
    auto term = [](unsigned n, const Rational& t) {
        return Rational(2 * static_cast<long>(n) + 1) * B(2 * n).evaluate(t) / B(2 * n + 1).evaluate(t);
    };
    for (const Rational& t : bern::sequence_grid(16)) {
        if (!(t < kHalf)) continue;
        const Rational u = 1 - t;
        int left = 0;
        int right = 0;
        for (unsigned n = 0; n < 12; ++n) {
            const int dl = (term(n + 1, t) - term(n, t)).sign();
            const int dr = (term(n + 1, u) - term(n, u)).sign();
            ASSERT_NE(dl, 0);
            if (left == 0) left = dl;
            if (right == 0) right = dr;
            ASSERT_EQ(dl, left) << "t = " << t << " n = " << n;
            ASSERT_EQ(dr, right) << "t = " << u << " n = " << n;
        }
        EXPECT_EQ(left, -right) << "t = " << t;
        EXPECT_TRUE(bern::certify_sequence_in_n(t, bern::SequenceClaim::T5, 12).passed());
        EXPECT_TRUE(bern::certify_sequence_in_n(u, bern::SequenceClaim::T5, 12).passed());
        EXPECT_TRUE(bern::certify_sequence_in_n(t, bern::SequenceClaim::T6, 12).passed());
        EXPECT_TRUE(bern::certify_sequence_in_n(u, bern::SequenceClaim::T6, 12).passed());
    }
}

TEST(LogConvexity, Examples) {
    EXPECT_LE(Rational(1, 720) * Rational(1, 720), Rational(1, 12) * Rational(1, 30240));
    EXPECT_EQ(bern::bernoulli_number(4).abs() / Rational(bern::testing::fact(4)), Rational(1, 720));
    EXPECT_EQ(bern::bernoulli_number(6).abs() / Rational(bern::testing::fact(6)), Rational(1, 30240));
    auto half = [](unsigned n) { return bern::bernoulli_at_half(2 * n).abs() / Rational(bern::factorial(2 * n)); };
    EXPECT_GE(half(2) * half(2), half(1) * half(3));
    const Rational c1 = bern::zeta_even_coefficient(1), c2 = bern::zeta_even_coefficient(2),
                   c3 = bern::zeta_even_coefficient(3);
    EXPECT_LE(c2 * c2, c1 * c3);
    const auto seqs = bern::certify_logconvexity_sequences(10);
    EXPECT_FALSE(seqs.empty());
    for (const auto& s : seqs) EXPECT_TRUE(s.passed()) << s.claim_id;
    EXPECT_THROW((void)bern::certify_logconvexity_sequences(2), std::invalid_argument);
}

TEST(LogConvexity, RatioChainIncreasingUpTo50) {
    for (unsigned n = 1; n < 50; ++n) {
        const Rational a = (bern::bernoulli_number(2 * n + 2) / bern::bernoulli_number(2 * n)).abs();
        const Rational b = (bern::bernoulli_number(2 * n + 4) / bern::bernoulli_number(2 * n + 2)).abs();
        ASSERT_LT(a, b) << "n = " << n;
    }
}

TEST(CheckLimit, RatioLimitsAtOneEighth) {
    const Rational tol = Rational::inverse_power_of_ten(6);
    const auto a = bern::check_limit(bern::LimitClaim::Ratio2n2n1, Rational(1, 8), 15, tol);
    EXPECT_EQ(a.status, bern::LimitStatus::WithinTolerance);
    const auto& sa = a.sample(15).gap_enclosure;
    EXPECT_TRUE(bern::testing::near(sa.lo(), sa.hi(), bern::testing::kGapRatio2n2n1, 15));
    const auto b = bern::check_limit(bern::LimitClaim::Ratio2n2nm1, Rational(1, 8), 15, tol);
    EXPECT_EQ(b.status, bern::LimitStatus::WithinTolerance);
    const auto& sb = b.sample(15).gap_enclosure;
    EXPECT_TRUE(bern::testing::near(sb.lo(), sb.hi(), bern::testing::kGapRatio2n2nm1, 15));
    // the limit -1/pi
    const auto lim = b.limit.enclose(64);
    EXPECT_TRUE(bern::testing::near(lim.lo(), lim.hi(), "-0.3183098861837906715377675267450287240689", 18));
}

TEST(CheckLimit, GapTooLargeEarly) {
    const auto r = bern::check_limit(bern::LimitClaim::Ratio2n2n1, Rational(1, 8), 3,
                                     Rational::inverse_power_of_ten(6));
    EXPECT_EQ(r.status, bern::LimitStatus::OutsideTolerance);
}

TEST(CheckLimit, AsymptoticGapDecreases) {
    const auto r = bern::check_limit(bern::LimitClaim::Asymptotic, Rational(1, 8), 20,
                                     Rational::inverse_power_of_ten(6));
    EXPECT_TRUE(r.decreasing_from(4));
    EXPECT_EQ(r.undecided_comparisons, 0U);
    EXPECT_THROW((void)bern::check_limit(bern::LimitClaim::Asymptotic, kHalf, 20, Rational(1, 10)),
                 std::invalid_argument);
    EXPECT_THROW((void)bern::parse_limit_claim("nonsense"), std::invalid_argument);
    EXPECT_EQ(bern::parse_limit_claim(bern::to_string(bern::LimitClaim::Ratio2n2nm1)),
              bern::LimitClaim::Ratio2n2nm1);
}
