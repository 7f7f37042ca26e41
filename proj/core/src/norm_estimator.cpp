#include "lpsum/norm_estimator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lpsum/errors.hpp"

namespace lpsum {

namespace {

Complex sign_of(const Complex& c) {
    const double a = std::abs(c);
    if (a == 0.0) return Complex(1.0, 0.0);
    return c / a;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Nonzero entries with their per-slot indices, so slot contractions touch
/// only the support (the extremal families are mostly zeros).
struct SparseView {
    std::vector<Complex> values;
    std::vector<std::vector<std::uint32_t>> idx;  // [slot][t]

    static SparseView build(const CoefficientTensor& tensor) {
        SparseView v;
        const std::size_t m = static_cast<std::size_t>(tensor.arity());
        v.idx.resize(m);
        const auto entries = tensor.entries();
        const auto& dims = tensor.dims();
        std::vector<std::size_t> at(m, 0);
        for (std::size_t f = 0; f < entries.size(); ++f) {
            const Complex& e = entries[f];
            if (e.real() != 0.0 || e.imag() != 0.0) {
                v.values.push_back(e);
                for (std::size_t k = 0; k < m; ++k) v.idx[k].push_back(static_cast<std::uint32_t>(at[k]));
            }
            for (std::size_t k = m; k-- > 0;) {
                if (++at[k] < dims[k]) break;
                at[k] = 0;
            }
        }
        return v;
    }

    void contract(std::span<const std::vector<Complex>> xs, std::size_t slot,
                  std::vector<Complex>& out) const {
        std::fill(out.begin(), out.end(), Complex(0.0, 0.0));
        const std::size_t m = idx.size();
        for (std::size_t t = 0; t < values.size(); ++t) {
            Complex w = values[t];
            for (std::size_t k = 0; k < m; ++k)
                if (k != slot) w *= xs[k][idx[k][t]];
            out[idx[slot][t]] += w;
        }
    }
};

void normalize_to_unit_sphere(std::vector<Complex>& x, ExtExponent p) {
    const double norm = lq_norm(x, p);
    if (norm == 0.0) {
        std::fill(x.begin(), x.end(), Complex(0.0, 0.0));
        x[0] = Complex(1.0, 0.0);
        return;
    }
    for (Complex& c : x) c /= norm;
}

std::vector<Complex> uniform_start(std::size_t n, ExtExponent p) {
    double mag = 1.0;
    if (!p.is_infinite()) mag = std::pow(static_cast<double>(n), -p.recip().to_double());
    return std::vector<Complex>(n, Complex(mag, 0.0));
}

std::vector<Complex> gaussian_start(std::size_t n, ExtExponent p, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> x(n);
    for (Complex& c : x) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = Complex(re, im);
    }
    normalize_to_unit_sphere(x, p);
    return x;
}

/// One full cycle of slot-optimal updates; returns the objective after the
/// last slot (equal to |T(xs)| since the final slot is dual-optimal).
double sweep(const SparseView& view, const DomainVector& ps, std::vector<std::vector<Complex>>& xs,
             std::vector<Complex>& scratch) {
    double value = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        scratch.resize(xs[j].size());
        view.contract(xs, j, scratch);
        auto [v, x] = dual_maximizer(scratch, ps[static_cast<int>(j)]);
        xs[j] = std::move(x);
        value = v;
    }
    return value;
}

struct GridCandidate {
    std::vector<std::vector<Complex>> xs;
    double value = 0.0;
};

/// Visits every composition of `total` into n nonnegative parts.
template <typename Visit>
void for_each_composition(std::size_t n, int total, std::vector<int>& g, Visit&& visit, std::size_t at = 0,
                          int left = -1) {
    if (left < 0) left = total;
    if (at + 1 == n) {
        g[at] = left;
        visit(g);
        return;
    }
    for (int v = 0; v <= left; ++v) {
        g[at] = v;
        for_each_composition(n, total, g, visit, at + 1, left - v);
    }
}

/// Number of grid candidates for one slot without materializing them;
/// saturates at `cap`.
double slot_candidate_count(std::size_t n, ExtExponent p, int mag_steps, int phase_steps, double cap) {
    if (p.is_infinite()) return std::min(cap, std::pow(static_cast<double>(phase_steps),
                                                       static_cast<double>(n - 1)));
    double count = 0.0;
    std::vector<int> g(n, 0);
    for_each_composition(n, mag_steps, g, [&](const std::vector<int>& parts) {
        if (count > cap) return;
        std::size_t support = 0;
        for (int v : parts)
            if (v > 0) ++support;
        if (support == 0) return;
        count += std::pow(static_cast<double>(phase_steps), static_cast<double>(support - 1));
    });
    return std::min(count, cap);
}

/// All magnitude/phase patterns for one slot vector on the l_p sphere:
/// simplex weights w (sum w = 1) with |x_i| = w_i^{1/p}, phases on a uniform
/// grid with the first supported entry fixed at phase 0. For p = inf only
/// the all-ones magnitude pattern appears.
std::vector<std::vector<Complex>> slot_candidates(std::size_t n, ExtExponent p, int mag_steps,
                                                  int phase_steps) {
    std::vector<std::vector<double>> magnitude_patterns;
    if (p.is_infinite()) {
        magnitude_patterns.emplace_back(n, 1.0);
    } else {
        const double pd = p.value().to_double();
        std::vector<int> g(n, 0);
        for_each_composition(n, mag_steps, g, [&](const std::vector<int>& parts) {
            std::vector<double> mags(n);
            for (std::size_t i = 0; i < n; ++i)
                mags[i] = parts[i] == 0 ? 0.0 : std::pow(static_cast<double>(parts[i]) / mag_steps, 1.0 / pd);
            magnitude_patterns.push_back(std::move(mags));
        });
    }

    std::vector<std::vector<Complex>> out;
    for (const auto& mags : magnitude_patterns) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (mags[i] > 0.0) support.push_back(i);
        if (support.empty()) continue;
        const std::size_t free_phases = support.size() - 1;  // first supported entry stays real
        std::vector<int> ph(free_phases, 0);
        const auto emit_vec = [&]() {
            std::vector<Complex> x(n, Complex(0.0, 0.0));
            x[support[0]] = Complex(mags[support[0]], 0.0);
            for (std::size_t s = 1; s < support.size(); ++s) {
                const double a = 2.0 * std::numbers::pi * ph[s - 1] / phase_steps;
                x[support[s]] = mags[support[s]] * Complex(std::cos(a), std::sin(a));
            }
            out.push_back(std::move(x));
        };
        if (free_phases == 0) {
            emit_vec();
            continue;
        }
        while (true) {
            emit_vec();
            std::size_t k = 0;
            while (k < free_phases && ++ph[k] == phase_steps) ph[k++] = 0;
            if (k == free_phases) break;
        }
    }
    return out;
}

/// Keep the K best combos of the gridded slots; `objective` scores a full
/// assignment of the gridded slots.
template <typename Objective>
std::vector<GridCandidate> grid_search(const std::vector<std::vector<std::vector<Complex>>>& per_slot,
                                       std::size_t keep, Objective&& objective) {
    std::vector<GridCandidate> best;
    std::vector<std::size_t> pick(per_slot.size(), 0);
    std::vector<std::vector<Complex>> xs(per_slot.size());
    while (true) {
        for (std::size_t j = 0; j < per_slot.size(); ++j) xs[j] = per_slot[j][pick[j]];
        const double v = objective(xs);
        if (best.size() < keep || v > best.back().value) {
            GridCandidate cand{xs, v};
            best.insert(std::upper_bound(best.begin(), best.end(), cand,
                                         [](const GridCandidate& a, const GridCandidate& b) {
                                             return a.value > b.value;
                                         }),
                        std::move(cand));
            if (best.size() > keep) best.pop_back();
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == per_slot[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return best;
}

std::vector<std::vector<std::vector<Complex>>> build_grids(const CoefficientTensor& tensor,
                                                           const DomainVector& ps, std::size_t count,
                                                           int density) {
    // cap on gridded combinations; polish supplies the precision beyond it
    constexpr double kBudget = 250e3;
    int chosen = 2;
    for (int d = density; d >= 2; --d) {
        double total = 1.0;
        // the count saturates above the budget so a saturated slot rejects d
        for (std::size_t j = 0; j < count && total <= kBudget; ++j)
            total *= slot_candidate_count(tensor.dims()[j], ps[static_cast<int>(j)], d, d, 2.0 * kBudget);
        if (total <= kBudget || d == 2) {
            chosen = d;
            break;
        }
    }
    std::vector<std::vector<std::vector<Complex>>> grids;
    for (std::size_t j = 0; j < count; ++j)
        grids.push_back(slot_candidates(tensor.dims()[j], ps[static_cast<int>(j)], chosen, chosen));
    return grids;
}

double polish_scalar(const SparseView& view, const DomainVector& ps,
                     std::vector<std::vector<Complex>> xs) {
    std::vector<Complex> scratch;
    double value = 0.0;
    for (int s = 0; s < 500; ++s) {
        const double prev = value;
        value = sweep(view, ps, xs, scratch);
        if (s > 0 && value - prev <= 1e-13 * std::max(value, 1e-300)) break;
    }
    return value;
}

/// Derivative-free refinement of a full assignment for vector-valued
/// objectives: coordinate moves on magnitude weights (renormalized onto the
/// l_p sphere) and phases, with shrinking step.
template <typename Objective>
double polish_pattern(const DomainVector& ps, std::vector<std::vector<Complex>> xs,
                      Objective&& objective) {
    const std::size_t m = xs.size();
    std::vector<std::vector<double>> weights(m), phases(m);
    for (std::size_t j = 0; j < m; ++j) {
        const ExtExponent p = ps[static_cast<int>(j)];
        const std::size_t n = xs[j].size();
        weights[j].resize(n);
        phases[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double mag = std::abs(xs[j][i]);
            weights[j][i] = p.is_infinite() ? mag : std::pow(mag, p.value().to_double());
            phases[j][i] = std::arg(xs[j][i]);
        }
    }

    const auto rebuild = [&](std::size_t j) {
        const ExtExponent p = ps[static_cast<int>(j)];
        const std::size_t n = weights[j].size();
        if (p.is_infinite()) {
            for (std::size_t i = 0; i < n; ++i) {
                const double mag = std::clamp(weights[j][i], 0.0, 1.0);
                xs[j][i] = mag * Complex(std::cos(phases[j][i]), std::sin(phases[j][i]));
            }
            return;
        }
        double total = 0.0;
        for (double w : weights[j]) total += std::max(w, 0.0);
        if (total <= 0.0) total = 1.0;
        const double inv_p = 1.0 / p.value().to_double();
        for (std::size_t i = 0; i < n; ++i) {
            const double w = std::max(weights[j][i], 0.0) / total;
            xs[j][i] = std::pow(w, inv_p) * Complex(std::cos(phases[j][i]), std::sin(phases[j][i]));
        }
    };

    for (std::size_t j = 0; j < m; ++j) rebuild(j);
    double best = objective(xs);
    double step = 0.25;
    for (int pass = 0; pass < 600 && step > 1e-10; ++pass) {
        bool improved = false;
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < weights[j].size(); ++i) {
                for (double delta : {step, -step}) {
                    const double saved = weights[j][i];
                    weights[j][i] = saved + delta;
                    rebuild(j);
                    const double v = objective(xs);
                    if (v > best) {
                        best = v;
                        improved = true;
                    } else {
                        weights[j][i] = saved;
                        rebuild(j);
                    }
                }
                for (double delta : {step, -step}) {
                    const double saved = phases[j][i];
                    phases[j][i] = saved + delta * 2.0 * std::numbers::pi;
                    rebuild(j);
                    const double v = objective(xs);
                    if (v > best) {
                        best = v;
                        improved = true;
                    } else {
                        phases[j][i] = saved;
                        rebuild(j);
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

double brute_force_scalar(const CoefficientTensor& tensor, const DomainVector& ps, int density) {
    const std::size_t m = static_cast<std::size_t>(tensor.arity());
    const SparseView view = SparseView::build(tensor);
    if (view.values.empty()) return 0.0;

    if (m == 1) {
        // exact: the dual norm of the coefficient vector
        return dual_maximizer(tensor.entries(), ps[0]).first;
    }

    const auto grids = build_grids(tensor, ps, m - 1, density);
    const ExtExponent last_p = ps[static_cast<int>(m) - 1];
    std::vector<Complex> coeff(tensor.dims().back());
    std::vector<std::vector<Complex>> padded(m);

    const auto objective = [&](const std::vector<std::vector<Complex>>& partial) {
        for (std::size_t j = 0; j + 1 < m; ++j) padded[j] = partial[j];
        padded[m - 1].assign(tensor.dims().back(), Complex(0.0, 0.0));
        view.contract(padded, m - 1, coeff);
        return lq_norm(coeff, last_p.conjugate());
    };
    const auto top = grid_search(grids, 8, objective);

    double best = 0.0;
    for (const auto& cand : top) {
        std::vector<std::vector<Complex>> xs = cand.xs;
        xs.push_back(std::vector<Complex>(tensor.dims().back(), Complex(0.0, 0.0)));
        view.contract(xs, m - 1, coeff);
        xs[m - 1] = dual_maximizer(coeff, last_p).second;
        best = std::max(best, polish_scalar(view, ps, std::move(xs)));
    }
    return best;
}

double brute_force_vector(const CoefficientTensor& tensor, const MultilinearSpec& spec, int density) {
    const std::size_t m = static_cast<std::size_t>(tensor.arity());
    const ExtExponent u = *spec.target;
    const auto grids = build_grids(tensor, spec.domain, m, density);

    const auto objective = [&](const std::vector<std::vector<Complex>>& xs) {
        return lq_norm(tensor.evaluate(xs), u);
    };
    const auto top = grid_search(grids, 8, objective);

    double best = 0.0;
    for (const auto& cand : top)
        best = std::max(best, polish_pattern(spec.domain, cand.xs, objective));
    return best;
}

}  // namespace

std::pair<double, std::vector<Complex>> dual_maximizer(std::span<const Complex> c, ExtExponent p) {
    std::vector<Complex> x(c.size(), Complex(0.0, 0.0));
    if (c.empty()) return {0.0, x};

    double top = 0.0;
    std::size_t top_at = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double a = std::abs(c[i]);
        if (a > top) {
            top = a;
            top_at = i;
        }
    }
    if (top == 0.0) {
        x[0] = Complex(1.0, 0.0);
        return {0.0, x};
    }

    if (p == ExtExponent(1)) {  // mass on the lowest index of maximal |c_i|
        x[top_at] = std::conj(sign_of(c[top_at]));
        return {top, x};
    }
    if (p.is_infinite()) {
        for (std::size_t i = 0; i < c.size(); ++i) x[i] = std::conj(sign_of(c[i]));
        return {lq_norm(c, ExtExponent(1)), x};
    }

    const ExtExponent pc = p.conjugate();
    const double value = lq_norm(c, pc);
    const double expo = pc.value().to_double() - 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double a = std::abs(c[i]);
        if (a == 0.0) continue;
        x[i] = std::conj(sign_of(c[i])) * std::pow(a / top, expo);
    }
    normalize_to_unit_sphere(x, p);
    return {value, x};
}

std::pair<CoefficientTensor, DomainVector> scalarize(const CoefficientTensor& tensor,
                                                     const MultilinearSpec& spec) {
    if (!tensor.vector_valued() || !spec.target)
        raise(Errc::not_vector_valued, "scalarize expects a vector-valued tensor");

    // The target axis is already the fastest-varying one, so the flat
    // entries are identical; only the shape changes.
    std::vector<std::size_t> dims = tensor.dims();
    dims.push_back(tensor.target_dim());
    auto entries = std::vector<Complex>(tensor.entries().begin(), tensor.entries().end());
    CoefficientTensor flat = CoefficientTensor::from_entries(std::move(dims), 0, std::move(entries));

    std::vector<ExtExponent> ps = spec.domain.entries();
    ps.push_back(spec.target->conjugate());
    return {std::move(flat), DomainVector(std::move(ps))};
}

NormEstimate estimate_norm(const CoefficientTensor& tensor, const MultilinearSpec& spec,
                           const EstimatorConfig& cfg) {
    if (tensor.arity() != spec.domain.arity())
        raise(Errc::dimension_mismatch, "tensor arity " + std::to_string(tensor.arity()) +
                                            " does not match spec arity " +
                                            std::to_string(spec.domain.arity()));
    if (cfg.restarts < 1 || cfg.max_sweeps < 1 || !(cfg.rel_tol > 0.0))
        raise(Errc::invalid_params, "estimator config requires restarts >= 1, max_sweeps >= 1, rel_tol > 0");

    if (tensor.vector_valued()) {
        auto [flat, ps] = scalarize(tensor, spec);
        return estimate_norm(flat, MultilinearSpec::scalar(std::move(ps)), cfg);
    }

    const DomainVector& ps = spec.domain;
    const std::size_t m = static_cast<std::size_t>(tensor.arity());
    const SparseView view = SparseView::build(tensor);

    NormEstimate out;
    out.restarts_used = cfg.restarts;
    if (view.values.empty()) {
        out.converged = true;
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Complex> e(tensor.dims()[j], Complex(0.0, 0.0));
            e[0] = Complex(1.0, 0.0);
            out.maximizer.push_back(std::move(e));
        }
        return out;
    }

    std::vector<Complex> scratch;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<std::vector<Complex>> xs(m);
        if (r == 0) {
            for (std::size_t j = 0; j < m; ++j) xs[j] = uniform_start(tensor.dims()[j], ps[static_cast<int>(j)]);
        } else {
            std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
            for (std::size_t j = 0; j < m; ++j) xs[j] = gaussian_start(tensor.dims()[j], ps[static_cast<int>(j)], rng);
        }

        double value = 0.0;
        bool converged = false;
        for (int s = 0; s < cfg.max_sweeps; ++s) {
            const double prev = value;
            value = sweep(view, ps, xs, scratch);
            assert(value >= prev - 1e-12 * std::max(1.0, value));
            ++out.iterations;
            if (s > 0 && value - prev <= cfg.rel_tol * std::max(value, 1e-300)) {
                converged = true;
                break;
            }
        }
        if (!have_best || value > out.value) {
            have_best = true;
            out.value = value;
            out.maximizer = std::move(xs);
            out.converged = converged;
        }
    }
    return out;
}

double brute_force_norm(const CoefficientTensor& tensor, const MultilinearSpec& spec, int grid_density,
                        std::size_t max_cells) {
    if (tensor.arity() != spec.domain.arity())
        raise(Errc::dimension_mismatch, "tensor arity does not match spec arity");
    if (tensor.fiber_count() > max_cells)
        raise(Errc::too_large, "brute force is capped at " + std::to_string(max_cells) + " cells, tensor has " +
                                   std::to_string(tensor.fiber_count()));
    if (grid_density < 2) raise(Errc::invalid_params, "grid density must be >= 2");

    if (tensor.vector_valued()) return brute_force_vector(tensor, spec, grid_density);
    return brute_force_scalar(tensor, spec.domain, grid_density);
}

}  // namespace lpsum
