#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpsum/constructions.hpp"
#include "lpsum/norm_estimator.hpp"

using namespace lpsum;

namespace {
const ExtExponent inf = ExtExponent::infinity();
}

TEST_CASE("diagonal scalar form carries the n^(1/lambda) bound") {
    const auto c = diagonal_scalar(4, {ExtExponent(4), ExtExponent(4)});
    CHECK(c.norm_upper_bound == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(c.norm_upper_bound_formula == "n^(1/2)");
    CHECK(diagonal_scalar(1, {ExtExponent(4), ExtExponent(4)}).norm_upper_bound == doctest::Approx(1.0));
    CHECK(diagonal_scalar(9, {inf, inf, inf}).norm_upper_bound == doctest::Approx(9.0));
    CHECK_THROWS_AS(diagonal_scalar(4, {ExtExponent(2), ExtExponent(2)}), Error);
}

TEST_CASE("uniform vectors attain the diagonal bound") {
    const std::size_t n = 6;
    const DomainVector ps{ExtExponent(4), ExtExponent(4), ExtExponent(8)};
    const auto c = diagonal_scalar(n, ps);
    std::vector<std::vector<Complex>> xs;
    for (int j = 0; j < 3; ++j) {
        const double mag = std::pow(static_cast<double>(n), -ps[j].recip().to_double());
        xs.emplace_back(n, Complex(mag, 0.0));
    }
    const Complex at = c.tensor.evaluate_scalar(xs);
    CHECK(at.real() == doctest::Approx(c.norm_upper_bound).epsilon(1e-12));
    CHECK(at.imag() == 0.0);

    EstimatorConfig cfg;
    cfg.restarts = 8;
    const auto est = estimate_norm(c.tensor, c.spec, cfg);
    CHECK(est.value == doctest::Approx(c.norm_upper_bound).epsilon(1e-9));
    CHECK(est.value <= c.norm_upper_bound * (1.0 + 1e-9));
}

TEST_CASE("diagonal vector map") {
    const auto c = diagonal_vector(8, {ExtExponent(8), ExtExponent(8)}, ExtExponent(2));
    CHECK(c.norm_upper_bound == doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-13));
    CHECK(diagonal_vector(1, {ExtExponent(8), ExtExponent(8)}, ExtExponent(2)).norm_upper_bound ==
          doctest::Approx(1.0));
    CHECK(diagonal_vector(16, {inf, inf}, ExtExponent(1)).norm_upper_bound == doctest::Approx(16.0));
    CHECK_THROWS_AS(diagonal_vector(4, {ExtExponent(4), ExtExponent(4)}, ExtExponent(2)), Error);

    // exactly n nonzero fibers, each a standard basis vector
    const auto& t = c.tensor;
    std::size_t nonzero_fibers = 0;
    for (std::size_t f = 0; f < t.fiber_count(); ++f) {
        double sum = 0.0;
        double top = 0.0;
        for (std::size_t k = 0; k < t.fiber_size(); ++k) {
            const double a = std::abs(t.entries()[f * t.fiber_size() + k]);
            sum += a;
            top = std::max(top, a);
        }
        if (sum > 0.0) {
            ++nonzero_fibers;
            CHECK(sum == 1.0);
            CHECK(top == 1.0);
        }
    }
    CHECK(nonzero_fibers == 8);

    // coefficient l_t sum is n^(1/t) for any measuring exponent
    for (auto q : {ExtExponent(2), ExtExponent(4), inf}) {
        const auto spec = c.spec.with_measure(q);
        CHECK(coefficient_sum(c.tensor, spec, ExtExponent(2)) ==
              doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
        CHECK(coefficient_sum(c.tensor, spec, ExtExponent(4)) ==
              doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-12));
    }
}

TEST_CASE("fourier construction satisfies the orthogonality relation") {
    for (std::size_t n : {1, 2, 3, 5, 16, 49, 128}) {
        // rebuild the matrix exactly as the construction defines it
        std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const double angle =
                    2.0 * std::numbers::pi * static_cast<double>((k + 1) * (l + 1) % n) / static_cast<double>(n);
                a[k][l] = Complex(std::cos(angle), std::sin(angle));
            }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                Complex dot(0, 0);
                for (std::size_t j = 0; j < n; ++j) dot += a[k][j] * std::conj(a[l][j]);
                const Complex want = k == l ? Complex(static_cast<double>(n), 0) : Complex(0, 0);
                CHECK(std::abs(dot - want) <= 1e-10 * static_cast<double>(n));
            }
    }
}

TEST_CASE("fourier construction bound and coefficient sums") {
    const DomainVector ps{ExtExponent(8), ExtExponent(8)};
    const auto c = fourier_vector(4, ps, ExtExponent(1));
    CHECK(c.norm_upper_bound == doctest::Approx(std::pow(4.0, 1.25)).epsilon(1e-12));

    // fibers on the diagonal are columns of the Fourier matrix
    const auto spec2 = c.spec.with_measure(ExtExponent(2));
    for (auto [t, expo] : std::initializer_list<std::pair<ExtExponent, double>>{
             {ExtExponent(2), 1.0}, {ExtExponent(4), 0.75}, {ExtExponent(1), 1.5}}) {
        CHECK(coefficient_sum(c.tensor, spec2, t) ==
              doctest::Approx(std::pow(4.0, expo)).epsilon(1e-12));  // n^(1/t + 1/q)
    }

    CHECK_THROWS_AS(fourier_vector(4, {ExtExponent(4), ExtExponent(4)}, ExtExponent(1)), Error);
    CHECK_THROWS_AS(fourier_vector(4, ps, ExtExponent(3)), Error);
}

TEST_CASE("fourier index convention does not change the norms") {
    const std::size_t n = 4;
    const DomainVector ps{ExtExponent(8), ExtExponent(8)};
    const auto c = fourier_vector(n, ps, ExtExponent(2));

    // zero-based variant of the same construction
    CoefficientTensor zero_based({n, n}, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k * j % n) / static_cast<double>(n);
            zero_based.at(std::vector<std::size_t>{j, j}, k) = Complex(std::cos(angle), std::sin(angle));
        }

    const auto spec = c.spec.with_measure(ExtExponent(2));
    CHECK(coefficient_sum(zero_based, spec, ExtExponent(2)) ==
          doctest::Approx(coefficient_sum(c.tensor, spec, ExtExponent(2))).epsilon(1e-12));

    EstimatorConfig cfg;
    cfg.restarts = 8;
    const double norm_one = estimate_norm(c.tensor, c.spec, cfg).value;
    const double norm_zero = estimate_norm(zero_based, c.spec, cfg).value;
    CHECK(norm_one == doctest::Approx(norm_zero).epsilon(1e-6));
}

TEST_CASE("estimates never exceed the analytic bounds") {
    EstimatorConfig cfg;
    cfg.restarts = 8;
    const auto diag_vec = diagonal_vector(8, {ExtExponent(8), ExtExponent(8)}, ExtExponent(2));
    CHECK(estimate_norm(diag_vec.tensor, diag_vec.spec, cfg).value <=
          diag_vec.norm_upper_bound * (1.0 + 1e-9));

    const auto four = fourier_vector(4, {ExtExponent(8), ExtExponent(8)}, ExtExponent(1));
    CHECK(estimate_norm(four.tensor, four.spec, cfg).value <= four.norm_upper_bound * (1.0 + 1e-9));

    const auto diag = diagonal_scalar(16, {ExtExponent(4), ExtExponent(8), ExtExponent(8)});
    CHECK(estimate_norm(diag.tensor, diag.spec, cfg).value <= diag.norm_upper_bound * (1.0 + 1e-9));
}

TEST_CASE("random sign tensors") {
    const auto t = random_sign_tensor(3, 2, 99);
    for (const Complex& e : t.entries()) {
        CHECK(e.imag() == 0.0);
        CHECK(std::abs(e.real()) == 1.0);
    }

    const auto spec = MultilinearSpec::scalar({inf, inf});
    for (auto [te, expo] : std::initializer_list<std::pair<ExtExponent, double>>{
             {ExtExponent(2), 1.0}, {ExtExponent::from_value(Rational(4, 3)), 1.5}}) {
        CHECK(coefficient_sum(t, spec, te) == doctest::Approx(std::pow(3.0, expo)).epsilon(1e-12));
    }

    const auto again = random_sign_tensor(3, 2, 99);
    for (std::size_t i = 0; i < t.entries().size(); ++i) CHECK(t.entries()[i] == again.entries()[i]);

    const auto other = random_sign_tensor(3, 2, 100);
    bool any_diff = false;
    for (std::size_t i = 0; i < t.entries().size(); ++i)
        if (t.entries()[i] != other.entries()[i]) any_diff = true;
    CHECK(any_diff);
}
