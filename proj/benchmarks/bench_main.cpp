#include <benchmark/benchmark.h>

#include "bern/bernoulli.hpp"
#include "bern/certify.hpp"
#include "bern/enclosure.hpp"
#include "bern/inequalities.hpp"
#include "bern/roots.hpp"

namespace {

const bern::Rational kHalf(1, 2);

// Fresh cache each iteration, so the recurrence is timed rather than the memo.
void BM_BernoulliNumbersCold(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        bern::BernoulliCache cache;
        benchmark::DoNotOptimize(cache.number(n));
    }
}
BENCHMARK(BM_BernoulliNumbersCold)->Arg(24)->Arg(60)->Arg(120);

void BM_BernoulliPolynomialsCold(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        bern::BernoulliCache cache;
        benchmark::DoNotOptimize(cache.polynomial(n).degree());
    }
}
BENCHMARK(BM_BernoulliPolynomialsCold)->Arg(24)->Arg(60);

void BM_EvaluateAtQuarter(benchmark::State& state) {
    const auto& p = bern::bernoulli_polynomial(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(bern::Rational(1, 4)));
}
BENCHMARK(BM_EvaluateAtQuarter)->Arg(20)->Arg(60);

void BM_SturmCount(benchmark::State& state) {
    const auto& p = bern::bernoulli_polynomial(2 * static_cast<unsigned>(state.range(0)));
    const bern::Rational m = bern::endpoint_margin();
    for (auto _ : state) benchmark::DoNotOptimize(bern::count_roots(p, m, kHalf - m));
}
BENCHMARK(BM_SturmCount)->Arg(5)->Arg(12)->Arg(25);

void BM_IsolateR2n(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const bern::Rational width = bern::Rational::inverse_power_of_ten(12);
    for (auto _ : state) benchmark::DoNotOptimize(bern::isolate_r2n(n, width).lo);
}
BENCHMARK(BM_IsolateR2n)->Arg(5)->Arg(25);

void BM_TrigEnclosure(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    const auto x = bern::RationalInterval::point(bern::Rational(5, 7));
    for (auto _ : state) benchmark::DoNotOptimize(bern::trig_enclosure(bern::TrigFn::Sin, x, bits));
}
BENCHMARK(BM_TrigEnclosure)->Arg(64)->Arg(256);

void BM_CompareQuantity(benchmark::State& state) {
    const bern::Quantity lhs = bern::Quantity::sqrt(bern::Rational(3)) / bern::Quantity(36);
    const bern::Quantity rhs = bern::Quantity(bern::Rational(3)) / (bern::Quantity(2) * bern::Quantity::pi()) /
                               bern::Quantity(6);
    for (auto _ : state) benchmark::DoNotOptimize(bern::compare(lhs, rhs).verdict);
}
BENCHMARK(BM_CompareQuantity);

void BM_CertifyRatio(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto& f = bern::bernoulli_polynomial(2 * n - 1);
    const auto& g = bern::bernoulli_polynomial(2 * n + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bern::certify_ratio_monotone(f, g, 0, kHalf, bern::Direction::Increasing).conclusion);
    }
}
BENCHMARK(BM_CertifyRatio)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_VerifyClaim(benchmark::State& state) {
    const auto& entry = bern::registry_entry(state.range(0) == 0 ? "R1" : "R4");
    const auto grid = bern::default_grid(16);
    for (auto _ : state) benchmark::DoNotOptimize(bern::verify_claim(entry, 6, grid, 64, 1).instances_checked);
}
BENCHMARK(BM_VerifyClaim)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
