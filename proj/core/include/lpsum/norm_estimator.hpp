#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lpsum/tensor.hpp"

namespace lpsum {

struct EstimatorConfig {
    int restarts = 64;
    int max_sweeps = 200;
    double rel_tol = 1e-10;
    std::uint64_t seed = 42;
};

/// Certified lower bound on the multilinear operator norm, with the point
/// where it is attained. For vector-valued input the maximizer has m + 1
/// vectors (the scalarized problem's); `iterations` counts sweeps summed
/// over restarts and `converged` refers to the best restart.
struct NormEstimate {
    double value = 0.0;
    std::vector<std::vector<Complex>> maximizer;
    int restarts_used = 0;
    bool converged = false;
    int iterations = 0;
};

/// Closed-form Hoelder extremizer: value = |c|_{p'} = max{ |sum c_i x_i| :
/// |x|_p <= 1 } and a unit vector x attaining it. For p = 1 the mass sits on
/// the lowest index of maximal |c_i|; a zero c yields value 0 and x = e_1.
std::pair<double, std::vector<Complex>> dual_maximizer(std::span<const Complex> c, ExtExponent p);

/// The (m+1)-linear scalar tensor b[i_1..i_m, k] = (a[i_1..i_m])_k together
/// with the extended domain (p_1, ..., p_m, u'); its norm equals the norm of
/// the vector-valued map (the l_u norm as a supremum over the dual ball).
std::pair<CoefficientTensor, DomainVector> scalarize(const CoefficientTensor& tensor,
                                                     const MultilinearSpec& spec);

/// Alternating maximization with random restarts. Each slot subproblem is
/// linear, so the dual_maximizer update is exactly slot-optimal and the
/// objective never decreases within a restart; the first start is the
/// uniform positive point, the rest are seeded complex Gaussians on the
/// l_p spheres. Vector-valued inputs are scalarized first. Fixed seeds
/// reproduce the result bit-exactly on a given build.
NormEstimate estimate_norm(const CoefficientTensor& tensor, const MultilinearSpec& spec,
                           const EstimatorConfig& cfg = {});

/// Deterministic grid search over magnitude/phase patterns on the l_p
/// spheres, refined by local polish; test oracle for small instances
/// (product of extents capped at `max_cells`, else TOO_LARGE).
double brute_force_norm(const CoefficientTensor& tensor, const MultilinearSpec& spec,
                        int grid_density = 8, std::size_t max_cells = 64);

}  // namespace lpsum
