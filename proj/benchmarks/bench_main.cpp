#include <benchmark/benchmark.h>

#include <numbers>

#include "lpsum/constructions.hpp"
#include "lpsum/experiments.hpp"
#include "lpsum/norm_estimator.hpp"

using namespace lpsum;

namespace {

CoefficientTensor fourier_form(std::size_t n) {
    CoefficientTensor t({n, n}, 0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>(k * l % n) / static_cast<double>(n);
            t.at(std::vector<std::size_t>{k, l}) = Complex(std::cos(angle), std::sin(angle));
        }
    return t;
}

}  // namespace

static void BM_ExponentDispatch(benchmark::State& state) {
    const DomainVector ps{ExtExponent(8), ExtExponent(8)};
    for (auto _ : state) {
        auto res = lp_valued_exponent(ExtExponent(1), ExtExponent(2), ps);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ExponentDispatch);

static void BM_EstimateNormFourier(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CoefficientTensor t = fourier_form(n);
    const auto spec = MultilinearSpec::scalar({ExtExponent(2), ExtExponent(2)});
    EstimatorConfig cfg;
    cfg.restarts = 8;
    for (auto _ : state) {
        auto est = estimate_norm(t, spec, cfg);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_EstimateNormFourier)->Arg(16)->Arg(32)->Arg(64);

static void BM_EstimateNormRandomSign(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CoefficientTensor t = random_sign_tensor(n, 2, 42);
    const auto spec = MultilinearSpec::scalar({ExtExponent(4), ExtExponent(4)});
    EstimatorConfig cfg;
    cfg.restarts = 8;
    for (auto _ : state) {
        auto est = estimate_norm(t, spec, cfg);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_EstimateNormRandomSign)->Arg(16)->Arg(32);

static void BM_BruteForce2x2x2(benchmark::State& state) {
    const CoefficientTensor t = random_sign_tensor(2, 3, 7);
    const auto spec = MultilinearSpec::scalar({ExtExponent(2), ExtExponent(2), ExtExponent(2)});
    for (auto _ : state) {
        auto v = brute_force_norm(t, spec);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BruteForce2x2x2);

static void BM_CoefficientSum(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto c = fourier_vector(n, {ExtExponent(8), ExtExponent(8)}, ExtExponent(1));
    const auto spec = c.spec.with_measure(ExtExponent(2));
    const ExtExponent t = ExtExponent::from_value(Rational(4, 3));
    for (auto _ : state) {
        auto v = coefficient_sum(c.tensor, spec, t);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CoefficientSum)->Arg(16)->Arg(32);

static void BM_MixedSum(benchmark::State& state) {
    const CoefficientTensor t = random_sign_tensor(16, 2, 11);
    const auto spec = MultilinearSpec::scalar({ExtExponent(8), ExtExponent(8)});
    const ExtExponent lambda = ExtExponent::from_value(Rational(4, 3));
    for (auto _ : state) {
        auto r = mixed_sum(t, spec, 0, ExtExponent(2), lambda);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MixedSum);

BENCHMARK_MAIN();
