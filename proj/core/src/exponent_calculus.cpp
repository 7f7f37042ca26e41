#include "lpsum/exponent_calculus.hpp"

namespace lpsum {

namespace {

const Rational kHalf(1, 2);

ExtExponent from_recip_checked(const Rational& r) { return ExtExponent::from_recip(r); }

}  // namespace

std::string_view to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::case_1a: return "I_A";
        case CaseLabel::case_1b: return "I_B";
        case CaseLabel::case_2a: return "II_A";
        case CaseLabel::case_2b: return "II_B";
        case CaseLabel::case_3: return "III";
        case CaseLabel::lambda_regime: return "LAMBDA_REGIME";
        case CaseLabel::mu_regime: return "MU_REGIME";
    }
    return "?";
}

std::optional<CaseLabel> parse_case_label(std::string_view text) {
    for (CaseLabel c : {CaseLabel::case_1a, CaseLabel::case_1b, CaseLabel::case_2a, CaseLabel::case_2b,
                        CaseLabel::case_3, CaseLabel::lambda_regime, CaseLabel::mu_regime}) {
        if (text == to_string(c)) return c;
    }
    return std::nullopt;
}

ExtExponent lambda_exponent(ExtExponent r, const DomainVector& ps) {
    const Rational s = ps.sum_recip();
    if (s >= r.recip())
        raise(Errc::precondition_violated,
              "sum of reciprocals " + s.to_string() + " must be < 1/r = " + r.recip().to_string() +
                  " (the condition is necessary)");
    return from_recip_checked(r.recip() - s);
}

ExtExponent mu_exponent(ExtExponent lambda, ExtExponent q, int m) {
    if (m < 1) raise(Errc::invalid_params, "arity must be >= 1");
    const Rational recip = (lambda.recip() + Rational(m - 1) * q.recip()) / Rational(m);
    return from_recip_checked(recip);
}

ExponentResult multilinear_exponent(ExtExponent r, ExtExponent q, const DomainVector& ps) {
    if (r > q) raise(Errc::invalid_params, "requires r <= q, got r = " + r.to_string() + ", q = " + q.to_string());
    const ExtExponent lambda = lambda_exponent(r, ps);
    if (lambda >= q) return {lambda, CaseLabel::lambda_regime, false, true};
    return {mu_exponent(lambda, q, ps.arity()), CaseLabel::mu_regime, false, true};
}

ExtExponent bennett_carl_r(ExtExponent u, ExtExponent q) {
    if (u > q) raise(Errc::invalid_params, "requires u <= q, got u = " + u.to_string() + ", q = " + q.to_string());
    if (q.recip() <= kHalf) return u;  // q >= 2
    return from_recip_checked(kHalf + u.recip() - q.recip());
}

ExponentResult praciano_exponent(const DomainVector& ps) {
    const Rational s = ps.sum_recip();
    if (s >= Rational(1))
        raise(Errc::precondition_violated,
              "sum of reciprocals " + s.to_string() +
                  " must be < 1; the condition is necessary (the diagonal form is bounded with unit "
                  "coefficients otherwise)");
    const Rational recip_lambda = Rational(1) - s;
    if (s >= kHalf)  // lambda >= 2
        return {from_recip_checked(recip_lambda), CaseLabel::lambda_regime, true, true};
    const int m = ps.arity();
    const Rational recip_mu = (recip_lambda + Rational(m - 1) * kHalf) / Rational(m);
    return {from_recip_checked(recip_mu), CaseLabel::mu_regime, true, true};
}

ExtExponent lp_valued_case_formula(CaseLabel c, ExtExponent u, ExtExponent q, const Rational& sum_recip,
                                   int m) {
    if (m < 1) raise(Errc::invalid_params, "arity must be >= 1");
    const Rational a = u.recip();
    const Rational b = q.recip();
    const Rational& s = sum_recip;
    switch (c) {
        case CaseLabel::case_1a: return from_recip_checked(kHalf + (a - b - s) / Rational(m));
        case CaseLabel::case_1b: return from_recip_checked(kHalf + (a - b - s));
        case CaseLabel::case_2a: return from_recip_checked(kHalf + (a - kHalf - s) / Rational(m));
        case CaseLabel::case_2b:
        case CaseLabel::case_3: return from_recip_checked(a - s);
        default: raise(Errc::invalid_params, "not an lp-valued case label");
    }
}

bool lp_valued_case_applies(CaseLabel c, ExtExponent u, ExtExponent q, const Rational& sum_recip) {
    if (u > q) return false;
    const Rational a = u.recip();
    const Rational b = q.recip();
    const Rational& s = sum_recip;
    const bool u_le_2 = a >= kHalf;
    const bool u_ge_2 = a <= kHalf;
    const bool q_le_2 = b >= kHalf;
    const bool q_ge_2 = b <= kHalf;
    switch (c) {
        case CaseLabel::case_1a: return u_le_2 && q_le_2 && s < a - b;
        case CaseLabel::case_1b: return u_le_2 && q_le_2 && s >= a - b && s < kHalf + a - b;
        case CaseLabel::case_2a: return u_le_2 && q_ge_2 && s < a - kHalf;
        case CaseLabel::case_2b: return u_le_2 && q_ge_2 && s >= a - kHalf && s < a;
        case CaseLabel::case_3: return u_ge_2 && s < a;
        default: return false;
    }
}

namespace {

/// Whether optimality of the table value is proved at this parameter point:
/// membership in 1a, 2b or 3 under any reading, or in 1b with S < 1/2. At
/// the q = 2 overlap a point labelled II_A can still be optimal through its
/// I_A reading.
bool point_optimality(ExtExponent u, ExtExponent q, const Rational& s) {
    if (lp_valued_case_applies(CaseLabel::case_1a, u, q, s)) return true;
    if (lp_valued_case_applies(CaseLabel::case_2b, u, q, s)) return true;
    if (lp_valued_case_applies(CaseLabel::case_3, u, q, s)) return true;
    if (lp_valued_case_applies(CaseLabel::case_1b, u, q, s) && s < kHalf) return true;
    return false;
}

}  // namespace

ExponentResult lp_valued_case(CaseLabel c, ExtExponent u, ExtExponent q, const DomainVector& ps) {
    const Rational s = ps.sum_recip();
    ExponentResult res;
    res.rho = lp_valued_case_formula(c, u, q, s, ps.arity());
    res.label = c;
    res.applicable = lp_valued_case_applies(c, u, q, s);
    switch (c) {
        case CaseLabel::case_1a:
        case CaseLabel::case_2b:
        case CaseLabel::case_3: res.optimality_known = res.applicable; break;
        case CaseLabel::case_1b: res.optimality_known = res.applicable && s < kHalf; break;
        default: res.optimality_known = false;
    }
    return res;
}

ExponentResult lp_valued_exponent(ExtExponent u, ExtExponent q, const DomainVector& ps) {
    if (u > q) raise(Errc::invalid_params, "requires u <= q, got u = " + u.to_string() + ", q = " + q.to_string());
    const Rational s = ps.sum_recip();
    const Rational a = u.recip();
    const Rational b = q.recip();

    CaseLabel c;
    if (a <= kHalf) {  // u >= 2: region III
        if (s >= a)
            raise(Errc::out_of_region, "sum of reciprocals " + s.to_string() + " must be < 1/u = " + a.to_string());
        c = CaseLabel::case_3;
    } else if (b <= kHalf) {  // u < 2 <= q: region II
        if (s < a - kHalf) c = CaseLabel::case_2a;
        else if (s < a) c = CaseLabel::case_2b;
        else
            raise(Errc::out_of_region, "sum of reciprocals " + s.to_string() + " must be < 1/u = " + a.to_string());
    } else {  // u <= q < 2: region I
        if (s < a - b) c = CaseLabel::case_1a;
        else if (s < kHalf + a - b) c = CaseLabel::case_1b;
        else
            raise(Errc::out_of_region, "sum of reciprocals " + s.to_string() + " must be < 1/2 + 1/u - 1/q = " +
                                           (kHalf + a - b).to_string());
    }
    ExponentResult res = lp_valued_case(c, u, q, ps);
    res.optimality_known = point_optimality(u, q, s);
    return res;
}

ExponentResult polynomial_exponent(ExtExponent u, ExtExponent q, ExtExponent p, int m) {
    if (m < 1) raise(Errc::invalid_params, "arity must be >= 1");
    if (u > q) raise(Errc::invalid_params, "requires u <= q, got u = " + u.to_string() + ", q = " + q.to_string());

    // Threshold comparisons are done on p directly: p > n/d iff d > n/p,
    // which in reciprocal form is recip(p) * n < d. Handles p = inf as
    // recip 0.
    const auto p_above = [&p](const Rational& threshold) {
        // threshold <= 0 means every p >= 1 qualifies
        if (threshold <= Rational(0)) return true;
        return p.recip() * threshold < Rational(1);
    };
    const Rational a = u.recip();
    const Rational b = q.recip();
    const Rational mp = Rational(m) * p.recip();  // m/p

    ExponentResult res;
    if (a <= kHalf) {  // 2 <= u <= q: case III, requires mu < p
        if (u.is_infinite() || !p_above(Rational(m) * u.value()))
            raise(Errc::out_of_region, "requires p > m*u");
        res.rho = ExtExponent::from_value((a - mp).reciprocal());
        res.label = CaseLabel::case_3;
    } else if (b <= kHalf) {  // 1 <= u < 2 <= q: case II (u = 2 went to III)
        const Rational uv = u.value();
        const bool in_2a = p_above(Rational(2 * m) * uv / (Rational(2) - uv));
        if (in_2a) {
            // rho = 2m / (m + 2(1/u - 1/2 - m/p))
            const Rational den = Rational(m) + Rational(2) * (a - kHalf - mp);
            res.rho = ExtExponent::from_value(Rational(2 * m) / den);
            res.label = CaseLabel::case_2a;
        } else if (p_above(Rational(m) * uv)) {
            res.rho = ExtExponent::from_value((a - mp).reciprocal());
            res.label = CaseLabel::case_2b;
        } else {
            raise(Errc::out_of_region, "requires p > m*u");
        }
    } else {  // 1 <= u <= q <= 2: case I
        const Rational uv = u.value();
        const Rational qv = q.value();
        const bool in_1a = u < q && p_above(Rational(m) * qv * uv / (qv - uv));
        if (in_1a) {
            // rho = 2m / (m + 2(1/u - 1/q - m/p))
            const Rational den = Rational(m) + Rational(2) * (a - b - mp);
            res.rho = ExtExponent::from_value(Rational(2 * m) / den);
            res.label = CaseLabel::case_1a;
        } else if (p_above(Rational(2 * m) * uv * qv / (uv * qv + Rational(2) * qv - Rational(2) * uv))) {
            // rho = 2 / (1 + 2(1/u - 1/q - m/p)); optimal for p > 2m
            const Rational den = Rational(1) + Rational(2) * (a - b - mp);
            res.rho = ExtExponent::from_value(Rational(2) / den);
            res.label = CaseLabel::case_1b;
        } else {
            raise(Errc::out_of_region, "p below the lower threshold of the table");
        }
    }
    res.optimality_known = point_optimality(u, q, mp);
    return res;
}

ExponentResult kwapien_exponent(ExtExponent q, const DomainVector& ps) {
    const Rational b = q.recip();
    // (r,1)-summing index of any operator from l_1 into l_q:
    // 1/r = 1 - |1/q - 1/2| (r = 1 at q = 2, Grothendieck).
    const Rational recip_r = Rational(1) - (b - kHalf).abs();
    const ExtExponent cot = cotype_of_lq(q);

    const Rational s = ps.sum_recip();
    if (s >= recip_r)
        raise(Errc::out_of_region,
              "sum of reciprocals " + s.to_string() + " must be < 1/r = " + recip_r.to_string());
    const ExtExponent lambda = from_recip_checked(recip_r - s);

    const bool q_le_2 = b >= kHalf;
    ExponentResult res;
    if (lambda >= cot) {
        res.rho = lambda;
        res.label = q_le_2 ? CaseLabel::case_1b : CaseLabel::case_2b;
    } else {
        res.rho = mu_exponent(lambda, cot, ps.arity());
        res.label = q_le_2 ? CaseLabel::case_1a : CaseLabel::case_2a;
    }
    res.optimality_known = false;
    return res;
}

ExtExponent zalduendo_exponent(ExtExponent p, int m) {
    if (m < 1) raise(Errc::invalid_params, "arity must be >= 1");
    const Rational mp = Rational(m) * p.recip();
    if (mp >= Rational(1))
        raise(Errc::precondition_violated, "requires p > m, got p = " + p.to_string() + ", m = " + std::to_string(m));
    return from_recip_checked(Rational(1) - mp);
}

ExtExponent cotype_of_lq(ExtExponent q) {
    if (q.recip() > kHalf) return ExtExponent(2);  // q < 2
    return q;
}

}  // namespace lpsum
