#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lpsum/experiments.hpp"
#include "test_support.hpp"

using namespace lpsum;

namespace {
const ExtExponent inf = ExtExponent::infinity();
const std::vector<std::size_t> kGrid = {4, 8, 16, 32};
}  // namespace

TEST_CASE("growth fit on exact power laws") {
    const std::vector<double> xs = {2, 4, 8, 16};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(x * x);
    auto fit = fit_growth(std::span<const double>(xs), std::span<const double>(ys));
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.max_residual <= 1e-12);

    ys.clear();
    for (double x : xs) ys.push_back(3.0 * std::pow(x, 1.5));
    fit = fit_growth(std::span<const double>(xs), std::span<const double>(ys));
    CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
}

TEST_CASE("growth fit under one percent multiplicative noise") {
    std::mt19937_64 rng(301);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    const std::vector<double> xs = {2, 4, 8, 16, 32, 64};
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> ys;
        for (double x : xs) ys.push_back(std::pow(x, 1.5) * (1.0 + noise(rng)));
        const auto fit = fit_growth(std::span<const double>(xs), std::span<const double>(ys));
        CHECK(std::abs(fit.slope - 1.5) <= 0.05);
    }
}

TEST_CASE("growth fit input validation") {
    const std::vector<double> two = {1, 2};
    const std::vector<double> ys2 = {1, 2};
    CHECK_THROWS_AS(fit_growth(std::span<const double>(two), std::span<const double>(ys2)), Error);

    const std::vector<double> unsorted = {1, 3, 2};
    const std::vector<double> ys3 = {1, 2, 3};
    CHECK_THROWS_AS(fit_growth(std::span<const double>(unsorted), std::span<const double>(ys3)), Error);

    const std::vector<double> xs = {1, 2, 3};
    const std::vector<double> with_zero = {1, 0, 3};
    CHECK_THROWS_AS(fit_growth(std::span<const double>(xs), std::span<const double>(with_zero)), Error);
}

TEST_CASE("diagonal ratio is exactly one at the witnessed exponent") {
    const FamilySpec fam{Family::diagonal, DomainVector{ExtExponent(4), ExtExponent(4)}, {}, {}, 42};
    const ExtExponent t = family_target_exponent(fam);
    CHECK(t == ExtExponent(2));
    for (std::size_t n : kGrid) {
        const auto c = make_construction(fam, n);
        const double ratio = verify_inequality(c, t, {}, NormSource::analytic_bound);
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("all-zero tensors give ratio zero") {
    const CoefficientTensor zero({3, 3}, 0);
    const auto spec = MultilinearSpec::scalar({ExtExponent(4), ExtExponent(4)});
    CHECK(verify_inequality(zero, spec, ExtExponent(2), {}) == 0.0);
}

TEST_CASE("optimality slopes for the diagonal family") {
    const FamilySpec fam{Family::diagonal, DomainVector{ExtExponent(4), ExtExponent(4)}, {}, {}, 42};

    const auto flat = optimality_slope(fam, ExtExponent(2), kGrid, {});
    CHECK(std::abs(flat.slope) <= 0.02);

    const auto diverging = optimality_slope(fam, ExtExponent::from_value(Rational(3, 2)), kGrid, {});
    CHECK(diverging.slope == doctest::Approx(1.0 / 6.0).epsilon(0.2));
    CHECK(std::abs(diverging.slope - 1.0 / 6.0) <= 0.03);
}

TEST_CASE("fourier family is flat at the I_B formula exponent") {
    const FamilySpec fam{Family::fourier, DomainVector{ExtExponent(8), ExtExponent(8)}, ExtExponent(1),
                         ExtExponent(2), 42};
    const ExtExponent t = family_target_exponent(fam);
    CHECK(t == ExtExponent::from_value(Rational(4, 3)));
    const auto fit = optimality_slope(fam, t, kGrid, {});
    CHECK(std::abs(fit.slope) <= 0.05);
}

TEST_CASE("ratios stay flat or shrink at and above the optimal exponent") {
    const FamilySpec diag{Family::diagonal, DomainVector{ExtExponent(4), ExtExponent(4)}, {}, {}, 42};
    const FamilySpec diag_vec{Family::diagonal_vector, DomainVector{ExtExponent(8), ExtExponent(8)},
                              ExtExponent(2), {}, 42};
    const FamilySpec four{Family::fourier, DomainVector{ExtExponent(8), ExtExponent(8)}, ExtExponent(1),
                          ExtExponent(2), 42};
    for (const auto& fam : {diag, diag_vec, four}) {
        const ExtExponent t0 = family_target_exponent(fam);
        for (const Rational factor : {Rational(1), Rational(5, 4)}) {
            const ExtExponent t = ExtExponent::from_value(t0.value() * factor);
            const auto sweep = sweep_inequality(fam, t, kGrid, {}, NormSource::analytic_bound);
            for (std::size_t i = 1; i < sweep.ratio_values.size(); ++i)
                CHECK(sweep.ratio_values[i] <= sweep.ratio_values[i - 1] * 1.05);
        }
        // ten percent below the witnessed exponent the ratio diverges
        const ExtExponent below = ExtExponent::from_value(t0.value() * Rational(9, 10));
        const auto fit = optimality_slope(fam, below, kGrid, {});
        CHECK(fit.slope >= 0.02);
    }
}

TEST_CASE("family target exponents") {
    CHECK(family_target_exponent({Family::diagonal_vector, DomainVector{ExtExponent(8), ExtExponent(8)},
                                  ExtExponent(2), {}, 42}) == ExtExponent(4));
    CHECK(family_target_exponent({Family::random_sign, DomainVector{inf, inf}, {}, {}, 42}) ==
          ExtExponent::from_value(Rational(4, 3)));
    CHECK_THROWS_AS(family_target_exponent({Family::fourier, DomainVector{inf, inf}, {}, {}, 42}), Error);
}

TEST_CASE("mixed sums of one-slot maps meet the dual identity") {
    const double worst = mixed_sum_check({ExtExponent(4)}, ExtExponent(2), 25, 5, {}, NormSource::oracle);
    CHECK(worst <= 1.0 + 1e-9);
    CHECK(worst == doctest::Approx(1.0).epsilon(1e-6));  // exact for m = 1
}

TEST_CASE("mixed sums of random bilinear maps respect the sqrt2 ceiling") {
    EstimatorConfig cfg;
    cfg.seed = 7;
    const double worst =
        mixed_sum_check({ExtExponent(8), ExtExponent(8)}, ExtExponent(2), 20, 3, cfg, NormSource::oracle);
    CHECK(worst <= std::sqrt(2.0) * 1.02);
    CHECK(worst > 0.5);  // sanity: ratios are not degenerate
}

TEST_CASE("mixed sum check validates its region") {
    CHECK_THROWS_AS(mixed_sum_check({ExtExponent(2), ExtExponent(2)}, ExtExponent(2), 5, 3, {}), Error);
}

TEST_CASE("diagonal closed-form mixed sums stay below the norm") {
    // for the diagonal form the mixed sum equals n^(1/lambda) at q = 2,
    // matching the norm bound exactly
    const auto c = diagonal_scalar(8, {ExtExponent(4), ExtExponent(4)});
    const ExtExponent lambda = ExtExponent(2);
    for (int slot : {0, 1}) {
        const auto r = mixed_sum(c.tensor, c.spec, slot, ExtExponent(2), lambda);
        CHECK(r.value <= c.norm_upper_bound * (1.0 + 1e-12));
        CHECK(r.value == doctest::Approx(c.norm_upper_bound).epsilon(1e-12));
    }
}

TEST_CASE("chevet bound exponent") {
    CHECK(chevet_bound_exponent(DomainVector{ExtExponent(4), ExtExponent(4)}) == Rational(1));
    CHECK(chevet_bound_exponent(DomainVector{inf, inf}) == Rational(3, 2));
    CHECK(chevet_bound_exponent(DomainVector{inf}) == Rational(1));
}

TEST_CASE("sign vectors on l_inf grow linearly") {
    // m = 1: the norm of a sign vector as a functional on l_inf is exactly n
    EstimatorConfig cfg;
    cfg.restarts = 2;
    const std::vector<std::size_t> grid = {4, 8, 16};
    const auto fit = chevet_growth(DomainVector{inf}, grid, 4, cfg);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("chevet growth validates its preconditions") {
    CHECK_THROWS_AS(chevet_growth(DomainVector{ExtExponent(2), ExtExponent(2)}, kGrid, 2, {}), Error);
}

TEST_CASE("random-sign bilinear forms on l_inf grow within the n^(3/2) ceiling") {
    EstimatorConfig cfg;
    cfg.restarts = 16;
    cfg.seed = 5;
    const std::vector<std::size_t> grid = {4, 8, 16, 32};
    const auto fit = chevet_growth(DomainVector{inf, inf}, grid, 16, cfg);
    const double bound = chevet_bound_exponent(DomainVector{inf, inf}).to_double();
    CHECK(bound == 1.5);
    // the window is pre-asymptotic, so allow a little headroom over 3/2
    CHECK(fit.slope <= bound + 0.15);
    CHECK(fit.slope >= 1.2);  // the classical family really does grow superlinearly
}

TEST_CASE("sweep csv layout") {
    const FamilySpec fam{Family::diagonal, DomainVector{ExtExponent(4), ExtExponent(4)}, {}, {}, 42};
    const auto sweep = sweep_inequality(fam, ExtExponent(2), kGrid, {}, NormSource::analytic_bound);
    std::ostringstream out;
    write_sweep_csv(out, sweep);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,lhs,norm,ratio");
    std::size_t rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == kGrid.size());
}
