#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "lpsum/constructions.hpp"
#include "lpsum/exponent_calculus.hpp"
#include "lpsum/norm_estimator.hpp"

namespace lpsum {

/// Where the denominator of an inequality ratio comes from. Analytic bounds
/// overestimate the norm (so optimality slopes are conservative); estimates
/// underestimate it (so reported ratios are conservative upper estimates);
/// the oracle is the grid search for small instances.
enum class NormSource { estimate, analytic_bound, oracle };

std::string_view to_string(NormSource s);

struct GrowthFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;  // in log space
};

/// Least-squares line through (log x, log y); the slope is the growth
/// exponent estimate. Needs >= 3 strictly increasing positive xs;
/// DEGENERATE if any y <= 0.
GrowthFit fit_growth(std::span<const double> xs, std::span<const double> ys);
GrowthFit fit_growth(std::span<const std::size_t> ns, std::span<const double> ys);

enum class Family { diagonal, diagonal_vector, fourier, random_sign };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

/// One extremal family with its parameters; `n` stays free so sweeps can
/// instantiate a whole grid of dimensions.
struct FamilySpec {
    Family family = Family::diagonal;
    DomainVector domain;
    std::optional<ExtExponent> u;  // target exponent, vector-valued families
    std::optional<ExtExponent> q;  // coefficient-measuring exponent override
    std::uint64_t seed = 42;       // random-sign draws

    ExtExponent measure_or_default() const;
};

ConstructionOutput make_construction(const FamilySpec& family, std::size_t n);

/// The summability exponent the family witnesses, used to resolve "t = auto":
/// the scalar table value for diagonal and random-sign, 1/(1/u - sum 1/p)
/// for the vector diagonal, and the I_B-formula value for the Fourier family
/// (evaluated at the parameters whether or not they lie in region I_B).
ExtExponent family_target_exponent(const FamilySpec& family);

struct SweepResult {
    std::vector<std::size_t> n_values;
    std::vector<double> lhs_values;    // coefficient sums at the tested t
    std::vector<double> norm_values;   // denominator per norm_source
    std::vector<double> ratio_values;  // lhs / norm
    NormSource norm_source = NormSource::estimate;
};

/// lhs / norm for one instance. The all-zero tensor gives ratio 0.
double verify_inequality(const ConstructionOutput& c, ExtExponent t, const EstimatorConfig& cfg,
                         NormSource source = NormSource::estimate);
double verify_inequality(const CoefficientTensor& tensor, const MultilinearSpec& spec, ExtExponent t,
                         const EstimatorConfig& cfg);

/// Ratios across a grid of dimensions (>= 3 points).
SweepResult sweep_inequality(const FamilySpec& family, ExtExponent t, std::span<const std::size_t> n_grid,
                             const EstimatorConfig& cfg, NormSource source = NormSource::estimate);

/// Slope of log(ratio) against log(n) over >= 4 dimensions: positive slope
/// at t below the optimal exponent witnesses non-summability; at the optimal
/// t the slope sits at zero up to fit tolerance.
GrowthFit optimality_slope(const FamilySpec& family, ExtExponent t, std::span<const std::size_t> n_grid,
                           const EstimatorConfig& cfg, NormSource source = NormSource::analytic_bound);

/// Worst mixed_sum(slot, q, lambda) / norm over seeded random scalar
/// tensors, all slots; 1/lambda = 1 - sum 1/p_j. Scalar targets obey
/// worst <= (sqrt 2)^(m-1) up to tolerance. Requires sum 1/p_j < 1 - 1/q.
double mixed_sum_check(const DomainVector& ps, ExtExponent q, int trials, std::size_t n,
                       const EstimatorConfig& cfg, NormSource source = NormSource::oracle);

/// Fits the growth of the mean estimated norm of random-sign forms on
/// l_{p_1} x ... x l_{p_m} over the dimension grid; the expected ceiling is
/// chevet_bound_exponent. Requires every p_j > 2.
GrowthFit chevet_growth(const DomainVector& ps, std::span<const std::size_t> n_grid, int samples,
                        const EstimatorConfig& cfg);

/// 1 - sum 1/p_j + (m-1)/2, the analytic growth exponent ceiling.
Rational chevet_bound_exponent(const DomainVector& ps);

/// CSV with header "n,lhs,norm,ratio" and one row per dimension.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace lpsum
