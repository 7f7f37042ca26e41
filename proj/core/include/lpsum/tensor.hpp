#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lpsum/exponent.hpp"

namespace lpsum {

using Complex = std::complex<double>;

/// Dense coefficient tensor of an m-linear map: a[i_1...i_m] on basis
/// vectors, scalar-valued (target_dim = 0) or with values in C^d
/// (target_dim = d >= 1). Entries are stored row-major with the target axis
/// fastest-varying; immutable use after construction is the expected
/// pattern. Accumulation order in all reductions is fixed (row-major) so
/// results are reproducible for a given build.
class CoefficientTensor {
public:
    CoefficientTensor(std::vector<std::size_t> dims, std::size_t target_dim = 0);

    static CoefficientTensor from_entries(std::vector<std::size_t> dims, std::size_t target_dim,
                                          std::vector<Complex> entries);

    int arity() const { return static_cast<int>(dims_.size()); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t target_dim() const { return target_dim_; }
    bool vector_valued() const { return target_dim_ > 0; }

    /// max(target_dim, 1): the length of one coefficient fiber.
    std::size_t fiber_size() const { return target_dim_ > 0 ? target_dim_ : 1; }
    /// Product of the m extents.
    std::size_t fiber_count() const;

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> mutable_entries() { return entries_; }

    std::size_t flat_index(std::span<const std::size_t> idx, std::size_t k = 0) const;
    Complex& at(std::span<const std::size_t> idx, std::size_t k = 0);
    const Complex& at(std::span<const std::size_t> idx, std::size_t k = 0) const;

    /// T(x_1, ..., x_m), componentwise over the target axis; a scalar-valued
    /// tensor yields a single component. Multilinear in each slot.
    std::vector<Complex> evaluate(std::span<const std::vector<Complex>> xs) const;

    /// Shorthand for scalar-valued tensors.
    Complex evaluate_scalar(std::span<const std::vector<Complex>> xs) const;

private:
    std::vector<std::size_t> dims_;
    std::size_t target_dim_ = 0;
    std::vector<Complex> entries_;
};

/// Where an m-linear map lives: domain exponents p_1..p_m, the target space
/// (scalar, or l_u), and the exponent q of the norm in which coefficient
/// fibers are measured (q >= u; defaults to u).
struct MultilinearSpec {
    DomainVector domain;
    std::optional<ExtExponent> target;  // nullopt = scalar-valued
    ExtExponent measure = ExtExponent::infinity();

    static MultilinearSpec scalar(DomainVector ps);
    static MultilinearSpec vector_valued(DomainVector ps, ExtExponent u,
                                         std::optional<ExtExponent> q = std::nullopt);

    bool is_vector_valued() const { return target.has_value(); }
    MultilinearSpec with_measure(ExtExponent q) const;
};

/// (sum |v_i|^q)^(1/q); q = inf gives the max modulus. Scaled by the largest
/// modulus to stay finite for large q.
double lq_norm(std::span<const Complex> v, ExtExponent q);

/// (sum over all multi-indices of |fiber|_{l_q}^t)^(1/t) with q =
/// spec.measure; scalar-valued tensors use the modulus. t = inf gives the
/// max fiber norm.
double coefficient_sum(const CoefficientTensor& tensor, const MultilinearSpec& spec, ExtExponent t);

struct MixedSumReport {
    int slot = 0;  // fixed index position, 0-based
    ExtExponent inner_exponent;
    ExtExponent outer_exponent;
    double value = 0.0;
};

/// The doubly-indexed mixed norm: fix index position `slot`, take the inner
/// l_q sum of fiber norms over all remaining indices, then the outer
/// l_lambda sum over the fixed index. For m = 1 this is a plain l_lambda
/// norm.
MixedSumReport mixed_sum(const CoefficientTensor& tensor, const MultilinearSpec& spec, int slot,
                         ExtExponent q, ExtExponent lambda);

/// Coefficient vector of the linear map x_slot -> T(x_1, ..., x_m) with the
/// other slots held fixed: c[i] = sum over the remaining indices of
/// a[..i..] * prod_{k != slot} x_k[i_k]. Scalar-valued tensors only.
std::vector<Complex> slot_coefficients(const CoefficientTensor& tensor,
                                       std::span<const std::vector<Complex>> xs, int slot);

}  // namespace lpsum
