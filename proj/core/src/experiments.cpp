#include "lpsum/experiments.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include <json.hpp>

#include "lpsum/errors.hpp"

namespace lpsum {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double denominator_for(const ConstructionOutput& c, const EstimatorConfig& cfg, NormSource source) {
    switch (source) {
        case NormSource::estimate: return estimate_norm(c.tensor, c.spec, cfg).value;
        case NormSource::oracle: return brute_force_norm(c.tensor, c.spec);
        case NormSource::analytic_bound:
            if (!std::isfinite(c.norm_upper_bound) || c.norm_upper_bound < 0.0)
                raise(Errc::invalid_params, "construction carries no analytic norm bound");
            return c.norm_upper_bound;
    }
    return 0.0;
}

double safe_ratio(double lhs, double denom) {
    if (lhs == 0.0) return 0.0;
    if (denom <= 0.0) raise(Errc::degenerate, "zero norm under a nonzero coefficient sum");
    return lhs / denom;
}

CoefficientTensor random_gaussian_tensor(std::size_t n, int m, std::uint64_t seed) {
    CoefficientTensor t(std::vector<std::size_t>(static_cast<std::size_t>(m), n), 0);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Complex& e : t.mutable_entries()) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        e = Complex(re, im);
    }
    return t;
}

}  // namespace

std::string_view to_string(NormSource s) {
    switch (s) {
        case NormSource::estimate: return "estimate";
        case NormSource::analytic_bound: return "analytic_bound";
        case NormSource::oracle: return "oracle";
    }
    return "?";
}

GrowthFit fit_growth(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 3)
        raise(Errc::invalid_params, "growth fit needs >= 3 matching points");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) raise(Errc::invalid_params, "xs must be strictly increasing");
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) raise(Errc::degenerate, "growth fit needs positive data");

    const std::size_t k = xs.size();
    std::vector<double> lx(k), ly(k);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    GrowthFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < k; ++i)
        fit.max_residual = std::max(fit.max_residual, std::abs(ly[i] - (fit.intercept + fit.slope * lx[i])));
    return fit;
}

GrowthFit fit_growth(std::span<const std::size_t> ns, std::span<const double> ys) {
    std::vector<double> xs(ns.begin(), ns.end());
    return fit_growth(xs, ys);
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::diagonal: return "diagonal";
        case Family::diagonal_vector: return "diagonal-vector";
        case Family::fourier: return "fourier";
        case Family::random_sign: return "random-sign";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text) {
    for (Family f : {Family::diagonal, Family::diagonal_vector, Family::fourier, Family::random_sign})
        if (text == to_string(f)) return f;
    return std::nullopt;
}

ExtExponent FamilySpec::measure_or_default() const {
    if (q) return *q;
    if (family == Family::fourier) return ExtExponent(2);
    if (u) return *u;
    return ExtExponent::infinity();
}

ConstructionOutput make_construction(const FamilySpec& fs, std::size_t n) {
    const auto need_u = [&]() -> ExtExponent {
        if (!fs.u) raise(Errc::invalid_params, std::string(to_string(fs.family)) + " needs a target exponent u");
        return *fs.u;
    };
    switch (fs.family) {
        case Family::diagonal: return diagonal_scalar(n, fs.domain);
        case Family::diagonal_vector: {
            auto c = diagonal_vector(n, fs.domain, need_u());
            if (fs.q) c.spec = c.spec.with_measure(*fs.q);
            return c;
        }
        case Family::fourier: {
            auto c = fourier_vector(n, fs.domain, need_u());
            c.spec = c.spec.with_measure(fs.measure_or_default());
            return c;
        }
        case Family::random_sign: {
            ConstructionOutput c{random_sign_tensor(n, fs.domain.arity(), mix_seed(fs.seed, n)),
                                 MultilinearSpec::scalar(fs.domain),
                                 std::numeric_limits<double>::quiet_NaN(),
                                 ""};
            return c;
        }
    }
    raise(Errc::invalid_params, "unknown family");
}

ExtExponent family_target_exponent(const FamilySpec& fs) {
    const Rational s = fs.domain.sum_recip();
    switch (fs.family) {
        case Family::diagonal:
        case Family::random_sign: return praciano_exponent(fs.domain).rho;
        case Family::diagonal_vector: {
            if (!fs.u) raise(Errc::invalid_params, "diagonal-vector needs a target exponent u");
            if (s >= fs.u->recip())
                raise(Errc::precondition_violated, "requires sum 1/p_j < 1/u");
            return ExtExponent::from_recip(fs.u->recip() - s);
        }
        case Family::fourier: {
            if (!fs.u) raise(Errc::invalid_params, "fourier needs a target exponent u");
            return lp_valued_case_formula(CaseLabel::case_1b, *fs.u, fs.measure_or_default(), s,
                                          fs.domain.arity());
        }
    }
    raise(Errc::invalid_params, "unknown family");
}

double verify_inequality(const ConstructionOutput& c, ExtExponent t, const EstimatorConfig& cfg,
                         NormSource source) {
    const double lhs = coefficient_sum(c.tensor, c.spec, t);
    return safe_ratio(lhs, denominator_for(c, cfg, source));
}

double verify_inequality(const CoefficientTensor& tensor, const MultilinearSpec& spec, ExtExponent t,
                         const EstimatorConfig& cfg) {
    const double lhs = coefficient_sum(tensor, spec, t);
    return safe_ratio(lhs, estimate_norm(tensor, spec, cfg).value);
}

SweepResult sweep_inequality(const FamilySpec& family, ExtExponent t, std::span<const std::size_t> n_grid,
                             const EstimatorConfig& cfg, NormSource source) {
    if (n_grid.size() < 3) raise(Errc::invalid_params, "sweep needs >= 3 dimensions");
    SweepResult out;
    out.norm_source = source;
    for (std::size_t n : n_grid) {
        const ConstructionOutput c = make_construction(family, n);
        const double lhs = coefficient_sum(c.tensor, c.spec, t);
        const double denom = denominator_for(c, cfg, source);
        out.n_values.push_back(n);
        out.lhs_values.push_back(lhs);
        out.norm_values.push_back(denom);
        out.ratio_values.push_back(safe_ratio(lhs, denom));
    }
    return out;
}

GrowthFit optimality_slope(const FamilySpec& family, ExtExponent t, std::span<const std::size_t> n_grid,
                           const EstimatorConfig& cfg, NormSource source) {
    if (n_grid.size() < 4) raise(Errc::invalid_params, "optimality slope needs >= 4 dimensions");
    const SweepResult sweep = sweep_inequality(family, t, n_grid, cfg, source);
    return fit_growth(sweep.n_values, sweep.ratio_values);
}

double mixed_sum_check(const DomainVector& ps, ExtExponent q, int trials, std::size_t n,
                       const EstimatorConfig& cfg, NormSource source) {
    if (trials < 1 || n == 0) raise(Errc::invalid_params, "needs trials >= 1 and n >= 1");
    const Rational s = ps.sum_recip();
    if (s >= Rational(1) - q.recip())
        raise(Errc::precondition_violated,
              "requires sum 1/p_j < 1 - 1/q, got " + s.to_string() + " with q = " + q.to_string());
    const ExtExponent lambda = ExtExponent::from_recip(Rational(1) - s);
    const MultilinearSpec spec = MultilinearSpec::scalar(ps);

    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const CoefficientTensor t =
            random_gaussian_tensor(n, ps.arity(), mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
        double denom = 0.0;
        switch (source) {
            case NormSource::estimate: denom = estimate_norm(t, spec, cfg).value; break;
            case NormSource::oracle: denom = brute_force_norm(t, spec); break;
            case NormSource::analytic_bound:
                raise(Errc::invalid_params, "random tensors carry no analytic bound");
        }
        for (int slot = 0; slot < ps.arity(); ++slot) {
            const double value = mixed_sum(t, spec, slot, q, lambda).value;
            worst = std::max(worst, safe_ratio(value, denom));
        }
    }
    return worst;
}

Rational chevet_bound_exponent(const DomainVector& ps) {
    return Rational(1) - ps.sum_recip() + Rational(ps.arity() - 1, 2);
}

GrowthFit chevet_growth(const DomainVector& ps, std::span<const std::size_t> n_grid, int samples,
                        const EstimatorConfig& cfg) {
    for (const ExtExponent& p : ps)
        if (p.recip() >= Rational(1, 2))
            raise(Errc::precondition_violated, "requires every p_j > 2, got " + p.to_string());
    if (n_grid.size() < 3) raise(Errc::invalid_params, "needs >= 3 dimensions");
    if (samples < 1) raise(Errc::invalid_params, "needs samples >= 1");

    const MultilinearSpec spec = MultilinearSpec::scalar(ps);
    std::vector<double> means;
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
        const std::size_t n = n_grid[gi];
        double total = 0.0;
        for (int k = 0; k < samples; ++k) {
            const std::uint64_t seed = mix_seed(cfg.seed, (static_cast<std::uint64_t>(gi) << 32) |
                                                              static_cast<std::uint64_t>(k));
            const CoefficientTensor t = random_sign_tensor(n, ps.arity(), seed);
            total += estimate_norm(t, spec, cfg).value;
        }
        means.push_back(total / samples);
    }
    return fit_growth(n_grid, means);
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
    out << "n,lhs,norm,ratio\n";
    for (std::size_t i = 0; i < sweep.n_values.size(); ++i) {
        out << sweep.n_values[i] << "," << nlohmann::json(sweep.lhs_values[i]).dump() << ","
            << nlohmann::json(sweep.norm_values[i]).dump() << ","
            << nlohmann::json(sweep.ratio_values[i]).dump() << "\n";
    }
}

}  // namespace lpsum
