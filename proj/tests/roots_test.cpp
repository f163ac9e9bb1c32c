#include <algorithm>

#include <gtest/gtest.h>

#include "bern/bernoulli.hpp"
#include "bern/enclosure.hpp"
#include "bern/roots.hpp"
#include "oracles.hpp"

using bern::Poly;
using bern::Rational;

namespace {

const Rational kMargin = Rational::inverse_power_of_ten(9);
const Rational kHalf(1, 2);

}  // namespace

TEST(SturmSequence, Examples) {
    const auto chain = bern::sturm_sequence(bern::bernoulli_polynomial(2));
    ASSERT_EQ(chain.size(), 3U);
    EXPECT_TRUE(chain.back().is_constant());
    EXPECT_GT(chain.back().leading().sign(), 0);

    const auto linear = bern::sturm_sequence(Poly({-1, 2}));
    ASSERT_EQ(linear.size(), 2U);
    EXPECT_EQ(linear[0], Poly({-1, 2}));
    EXPECT_TRUE(linear[1].is_constant());
    EXPECT_GT(linear[1].leading().sign(), 0);

    const Poly square = Poly::from_roots({Rational(1, 3), Rational(1, 3)});
    const auto repeated = bern::sturm_sequence(square);
    EXPECT_FALSE(repeated.back().is_constant());
    EXPECT_EQ(bern::square_free_part(square).degree(), 1);
    EXPECT_THROW((void)bern::sturm_sequence(Poly()), std::invalid_argument);
}

TEST(CountRoots, Examples) {
    const Poly& b2 = bern::bernoulli_polynomial(2);
    EXPECT_EQ(bern::count_roots(b2, 0, kHalf), 1U);
    EXPECT_EQ(bern::count_roots(b2, 0, Rational(1, 10)), 0U);
    EXPECT_EQ(bern::count_roots(Poly::constant(1), 0, 1), 0U);
    EXPECT_THROW((void)bern::count_roots(bern::bernoulli_polynomial(3), 0, kHalf), bern::EndpointIsRoot);
}

TEST(CountRoots, MatchesKnownRootsOnRandomProducts) {
    bern::testing::Gen gen(31337);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> roots;
        const long k = gen.integer(1, 6);
        for (long j = 0; j < k; ++j) roots.push_back(gen.rational(3, 12));
        const Poly p = Poly::from_roots(roots) * Rational(gen.integer(1, 9), gen.integer(1, 4));
        const Rational lo = gen.rational(4, 7) - Rational(1, 1009);
        const Rational hi = lo + Rational(gen.integer(1, 50), 7);
        std::vector<Rational> distinct;
        for (const Rational& r : roots) {
            if (lo < r && r < hi && std::find(distinct.begin(), distinct.end(), r) == distinct.end()) {
                distinct.push_back(r);
            }
        }
        if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) continue;
        ASSERT_EQ(bern::count_roots(p, lo, hi), distinct.size());
    }
}

TEST(CountRoots, BernoulliOnFirstHalf) {
    for (unsigned n = 1; n <= 25; ++n) {
        EXPECT_EQ(bern::count_roots(bern::bernoulli_polynomial(2 * n), kMargin, kHalf - kMargin), 1U);
        EXPECT_EQ(bern::count_roots(bern::bernoulli_polynomial(2 * n + 1), kMargin, kHalf - kMargin), 0U);
        // nothing hides in the margins
        EXPECT_EQ(bern::count_roots(bern::bernoulli_polynomial(2 * n), 0, kMargin), 0U);
        EXPECT_EQ(bern::count_roots(bern::bernoulli_polynomial(2 * n), kHalf - kMargin, kHalf), 0U);
    }
}

TEST(IsolateR2n, ExampleN1) {
    const auto iv = bern::isolate_r2n(1, Rational::inverse_power_of_ten(6));
    EXPECT_LE(iv.width(), Rational::inverse_power_of_ten(6));
    EXPECT_TRUE(bern::testing::near(iv.lo, iv.hi, bern::testing::kR2, 30));
    // exact: (lo - 1/2)^2 >= 1/12 >= (hi - 1/2)^2
    EXPECT_GE((iv.lo - kHalf) * (iv.lo - kHalf), Rational(1, 12));
    EXPECT_LE((iv.hi - kHalf) * (iv.hi - kHalf), Rational(1, 12));
}

TEST(IsolateR2n, FrozenOracleValues) {
    const std::pair<unsigned, const char*> cases[] = {
        {2, bern::testing::kR4},   {3, bern::testing::kR6},   {5, bern::testing::kR10},
        {8, bern::testing::kR16},  {12, bern::testing::kR24}, {25, bern::testing::kR50}};
    const Rational width = Rational::inverse_power_of_ten(20);
    for (const auto& [n, value] : cases) {
        const auto iv = bern::isolate_r2n(n, width);
        EXPECT_TRUE(bern::testing::near(iv.lo, iv.hi, value, 30)) << "n = " << n << " " << iv.lo;
    }
}

TEST(IsolateR2n, BracketsAndRemarkBounds) {
    const Rational width = Rational::inverse_power_of_ten(12);
    for (unsigned n = 1; n <= 25; ++n) {
        const Poly& b = bern::bernoulli_polynomial(2 * n);
        const auto iv = bern::isolate_r2n(n, width);
        ASSERT_LE(iv.width(), width);
        const int s_lo = b.sign_at(iv.lo);
        ASSERT_NE(s_lo, 0);
        ASSERT_EQ(s_lo, -b.sign_at(iv.hi)) << "n = " << n;
        ASSERT_LT(Rational(1, 6), iv.lo);
        ASSERT_LE(iv.hi, Rational(1, 4));
        ASSERT_EQ(bern::compare_with_r2n(n, Rational(1, 6)), bern::Verdict::Less);
        ASSERT_EQ(bern::compare_with_r2n(n, Rational(1, 4)), bern::Verdict::Greater) << "n = " << n;
        ASSERT_EQ(bern::compare_lehmer_bound(n).verdict, bern::Verdict::Less) << "n = " << n;
    }
}

TEST(LehmerBound, DecidedAt64Bits) {
    // the pi error enters scaled by 2^-(2n+1), so 64 bits suffice even though
    // r_2n minus the bound falls from 1.1e-3 at n = 1 to 1.3e-31 at n = 25
    for (unsigned n = 1; n <= 25; ++n) {
        const auto c = bern::compare_lehmer_bound(n);
        ASSERT_EQ(c.verdict, bern::Verdict::Less) << "n = " << n;
        ASSERT_EQ(c.precision_used, 64);
    }
    EXPECT_EQ(bern::compare_lehmer_bound(3, 32).verdict, bern::Verdict::Undecided);
    EXPECT_THROW((void)bern::compare_lehmer_bound(0), std::invalid_argument);
}

TEST(CompareWithR2n, Examples) {
    const Rational r2_lo(211324, 1000000), r2_hi(211325, 1000000);  // r_2 = 1/2 - sqrt(3)/6
    EXPECT_EQ(bern::compare_with_r2n(1, r2_lo), bern::Verdict::Less);
    EXPECT_EQ(bern::compare_with_r2n(1, r2_hi), bern::Verdict::Greater);
    EXPECT_EQ(bern::compare_with_r2n(25, Rational(1, 4) - Rational::inverse_power_of_ten(15)), bern::Verdict::Less);
    EXPECT_THROW((void)bern::compare_with_r2n(2, Rational(1, 2)), std::invalid_argument);
}

TEST(LehmerBound, CoarseIntervalsCannotDecideIt) {
    // at n = 11 a 1e-12 isolating interval straddles the bound
    const auto pi = bern::pi_enclosure(64);
    const Rational bound = Rational(1, 4) - (Rational::power_of_two(23) * pi.hi()).reciprocal();
    const auto iv = bern::isolate_r2n(11, Rational::inverse_power_of_ten(12));
    EXPECT_LT(iv.lo, bound);
    EXPECT_LT(bound, iv.hi);
}

TEST(IsolateR2n, RejectsBadInput) {
    EXPECT_THROW((void)bern::isolate_r2n(0, Rational(1, 10)), std::invalid_argument);
    EXPECT_THROW((void)bern::isolate_r2n(1, Rational(0)), std::invalid_argument);
}

TEST(IsolateRoots, RefineRespectsWidth) {
    const Poly p = Poly::from_roots({Rational(1, 7), Rational(2, 7)}) * Poly({-2, 0, 1});  // and +-sqrt 2
    const auto roots = bern::isolate_roots(p, -3, 3, Rational(1, 1000000));
    ASSERT_EQ(roots.size(), 4U);
    for (const auto& r : roots) EXPECT_LE(r.width(), Rational(1, 1000000));
    EXPECT_TRUE(roots[1].contains(Rational(1, 7)));
    EXPECT_TRUE(roots[2].contains(Rational(2, 7)));
}

TEST(VerifyR2nMonotone, Examples) {
    const auto two = bern::verify_r2n_monotone(2, Rational::inverse_power_of_ten(8));
    EXPECT_TRUE(two.increasing);
    const auto ten = bern::verify_r2n_monotone(10, Rational::inverse_power_of_ten(8));
    EXPECT_TRUE(ten.increasing);
    EXPECT_EQ(ten.first_failure, 0U);
    ASSERT_GE(ten.intervals.size(), 8U);
    for (unsigned n = 8; n <= ten.intervals.size(); ++n) {
        EXPECT_LT(Rational(1, 4) - ten.intervals[n - 1].lo, Rational::inverse_power_of_ten(4)) << n;
    }
    EXPECT_THROW((void)bern::verify_r2n_monotone(1, Rational(1, 10)), std::invalid_argument);
}
