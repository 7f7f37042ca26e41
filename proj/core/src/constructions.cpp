#include "lpsum/constructions.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "lpsum/errors.hpp"
#include "lpsum/exponent_calculus.hpp"

namespace lpsum {

namespace {

std::vector<std::size_t> cube_dims(std::size_t n, int m) {
    if (n == 0 || m < 1) raise(Errc::invalid_params, "construction needs n >= 1, m >= 1");
    return std::vector<std::size_t>(static_cast<std::size_t>(m), n);
}

std::string power_tag(const Rational& exponent) { return "n^(" + exponent.to_string() + ")"; }

double power_of(std::size_t n, const Rational& exponent) {
    return std::pow(static_cast<double>(n), exponent.to_double());
}

}  // namespace

ConstructionOutput diagonal_scalar(std::size_t n, const DomainVector& ps) {
    const ExtExponent lambda = lambda_exponent(ExtExponent(1), ps);  // throws when sum 1/p >= 1
    CoefficientTensor t(cube_dims(n, ps.arity()), 0);
    std::vector<std::size_t> idx(static_cast<std::size_t>(ps.arity()));
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(idx.begin(), idx.end(), i);
        t.at(idx) = Complex(1.0, 0.0);
    }
    return ConstructionOutput{std::move(t), MultilinearSpec::scalar(ps), power_of(n, lambda.recip()),
                              power_tag(lambda.recip())};
}

ConstructionOutput diagonal_vector(std::size_t n, const DomainVector& ps, ExtExponent u) {
    const Rational s = ps.sum_recip();
    if (s >= u.recip())
        raise(Errc::precondition_violated,
              "requires sum 1/p_j < 1/u, got " + s.to_string() + " >= " + u.recip().to_string());
    CoefficientTensor t(cube_dims(n, ps.arity()), n);
    std::vector<std::size_t> idx(static_cast<std::size_t>(ps.arity()));
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(idx.begin(), idx.end(), j);
        t.at(idx, j) = Complex(1.0, 0.0);
    }
    const Rational e = u.recip() - s;
    return ConstructionOutput{std::move(t), MultilinearSpec::vector_valued(ps, u), power_of(n, e),
                              power_tag(e)};
}

ConstructionOutput fourier_vector(std::size_t n, const DomainVector& ps, ExtExponent u) {
    const Rational s = ps.sum_recip();
    if (s >= Rational(1, 2))
        raise(Errc::precondition_violated, "requires sum 1/p_j < 1/2, got " + s.to_string());
    if (u.recip() < Rational(1, 2))
        raise(Errc::precondition_violated, "requires 1 <= u <= 2, got u = " + u.to_string());

    CoefficientTensor t(cube_dims(n, ps.arity()), n);
    std::vector<std::size_t> idx(static_cast<std::size_t>(ps.arity()));
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(idx.begin(), idx.end(), j);
        for (std::size_t k = 0; k < n; ++k) {
            // a_kl = exp(2 pi i k l / n) with 1-based k, l
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((k + 1) * (j + 1) % n) /
                                 static_cast<double>(n);
            t.at(idx, k) = Complex(std::cos(angle), std::sin(angle));
        }
    }
    const Rational e = Rational(1, 2) + u.recip() - s;
    return ConstructionOutput{std::move(t), MultilinearSpec::vector_valued(ps, u), power_of(n, e),
                              power_tag(e)};
}

CoefficientTensor random_sign_tensor(std::size_t n, int m, std::uint64_t rng_seed) {
    CoefficientTensor t(cube_dims(n, m), 0);
    std::mt19937_64 rng(rng_seed);
    for (Complex& e : t.mutable_entries()) e = Complex(((rng() >> 32) & 1u) ? 1.0 : -1.0, 0.0);
    return t;
}

}  // namespace lpsum
