#pragma once

#include <cstdint>
#include <string>

#include "lpsum/tensor.hpp"

namespace lpsum {

/// An extremal family member together with its analytic operator-norm upper
/// bound (the formula tag records the exponent used, e.g. "n^(3/4)").
struct ConstructionOutput {
    CoefficientTensor tensor;
    MultilinearSpec spec;
    double norm_upper_bound = 0.0;
    std::string norm_upper_bound_formula;
};

/// Diagonal scalar form sum_i x1_i ... xm_i on l_{p_1} x ... x l_{p_m}.
/// Norm bound n^(1/lambda) with 1/lambda = 1 - sum 1/p_j, attained at the
/// uniform vectors x_j = n^(-1/p_j) (1,...,1). Requires sum 1/p_j < 1.
ConstructionOutput diagonal_scalar(std::size_t n, const DomainVector& ps);

/// Diagonal map sum_j x1_j ... xm_j e_j into l_u; norm bound
/// n^(1/u - sum 1/p_j), coefficient l_t sum exactly n^(1/t).
/// Requires sum 1/p_j < 1/u.
ConstructionOutput diagonal_vector(std::size_t n, const DomainVector& ps, ExtExponent u);

/// Fourier-matrix map sum_i sum_j a_ij x1_j ... xm_j e_i with
/// a_kl = exp(2 pi i k l / n) (1-based indices); the coefficient at
/// (j,...,j) is column j of the matrix. Norm bound
/// n^(1/2 + 1/u - sum 1/p_j). Requires sum 1/p_j < 1/2 and 1 <= u <= 2.
ConstructionOutput fourier_vector(std::size_t n, const DomainVector& ps, ExtExponent u);

/// Full tensor of i.i.d. +-1 entries from the seeded generator; the
/// coefficient l_t sum is exactly n^(m/t).
CoefficientTensor random_sign_tensor(std::size_t n, int m, std::uint64_t rng_seed);

}  // namespace lpsum
