#pragma once

#include <optional>
#include <string_view>

#include "lpsum/exponent.hpp"

namespace lpsum {

/// Region tags for the piecewise exponent tables. I_A..III name the case
/// regions of the lp-valued table (and the analogous Kwapien regions);
/// LAMBDA_REGIME / MU_REGIME name the two branches of the general
/// multilinear bound.
enum class CaseLabel {
    case_1a,
    case_1b,
    case_2a,
    case_2b,
    case_3,
    lambda_regime,
    mu_regime,
};

std::string_view to_string(CaseLabel c);
std::optional<CaseLabel> parse_case_label(std::string_view text);

struct ExponentResult {
    ExtExponent rho;
    CaseLabel label = CaseLabel::case_3;
    /// True exactly for the regions whose optimality is proved; metadata only.
    bool optimality_known = false;
    /// Whether the parameters satisfy the returned case's region condition.
    /// Always true for dispatched results; case-formula evaluation may
    /// produce false.
    bool applicable = true;
};

/// 1/lambda = 1/r - (1/p_1 + ... + 1/p_m); requires sum 1/p_j < 1/r.
ExtExponent lambda_exponent(ExtExponent r, const DomainVector& ps);

/// 1/mu = 1/(m lambda) + (m-1)/(m q).
ExtExponent mu_exponent(ExtExponent lambda, ExtExponent q, int m);

/// Summability exponent for m-linear maps composed with an (r,1)-summing
/// operator into a cotype-q space: lambda when lambda >= q, else mu.
/// Requires 1 <= r <= q and sum 1/p_j < 1/r.
ExponentResult multilinear_exponent(ExtExponent r, ExtExponent q, const DomainVector& ps);

/// Optimal (r,1)-summing index of the inclusion l_u into l_q:
/// r = 2/(1 + 2(1/u - 1/q)) if q < 2, r = u if q >= 2. Requires u <= q.
ExtExponent bennett_carl_r(ExtExponent u, ExtExponent q);

/// Scalar-valued table: lambda when 1/2 <= sum 1/p_j < 1, mu (with q = 2)
/// when sum 1/p_j < 1/2. Both regions are optimal. Requires sum 1/p_j < 1.
ExponentResult praciano_exponent(const DomainVector& ps);

/// The five-region table for maps into l_u with coefficients measured in
/// l_q (1 <= u <= q), as a function of S = sum 1/p_j:
///
///   I   (u <= q <= 2):   1a  S < 1/u - 1/q           1/rho = 1/2 + (1/u - 1/q - S)/m
///                        1b  ... <= S < 1/2 + 1/u - 1/q   1/rho = 1/2 + (1/u - 1/q - S)
///   II  (u <= 2 <= q):   2a  S < 1/u - 1/2           1/rho = 1/2 + (1/u - 1/2 - S)/m
///                        2b  ... <= S < 1/u          1/rho = 1/u - S
///   III (2 <= u <= q):       S < 1/u                 1/rho = 1/u - S
///
/// Ties at a closed endpoint go to the stated region; u >= 2 dispatches to
/// III and q >= 2 to II, so the overlapping boundary parameters classify
/// deterministically (the formulas agree there).
ExponentResult lp_valued_exponent(ExtExponent u, ExtExponent q, const DomainVector& ps);

/// Evaluates one region's formula at arbitrary parameters, ignoring region
/// membership. Boundary-continuity checks evaluate two adjacent formulas at
/// the same point.
ExtExponent lp_valued_case_formula(CaseLabel c, ExtExponent u, ExtExponent q, const Rational& sum_recip,
                                   int m);

/// Whether (u, q, sum 1/p_j) lies in the given region.
bool lp_valued_case_applies(CaseLabel c, ExtExponent u, ExtExponent q, const Rational& sum_recip);

/// Formula value plus the membership flag, for callers that want a case
/// evaluated outside its region (ExponentResult::applicable records it).
ExponentResult lp_valued_case(CaseLabel c, ExtExponent u, ExtExponent q, const DomainVector& ps);

/// The polynomial table: same regions as lp_valued_exponent with the
/// diagonal domain (p, ..., p) m-fold, classified by thresholds on p
/// (e.g. case 1a is mqu/(q-u) < p <= inf). Kept as an independent
/// computation so the two routes cross-check each other.
ExponentResult polynomial_exponent(ExtExponent u, ExtExponent q, ExtExponent p, int m);

/// Table for maps into l_1 composed with any operator into l_q, via the
/// (r,1)-summing index 1/r = 1 - |1/q - 1/2| (r = 1 at q = 2). Case I is
/// q <= 2, case II is q > 2; the a/b split is the mu/lambda regime.
ExponentResult kwapien_exponent(ExtExponent q, const DomainVector& ps);

/// Diagonal-coefficient exponent p/(p - m) for m-homogeneous polynomials on
/// l_p; equals 1 at p = inf. Requires p > m.
ExtExponent zalduendo_exponent(ExtExponent p, int m);

/// Cotype of l_q: max(q, 2). q = inf yields inf, meaning no finite cotype.
ExtExponent cotype_of_lq(ExtExponent q);

}  // namespace lpsum
