#include "lpsum/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lpsum/errors.hpp"

namespace lpsum {

namespace {

std::size_t checked_fiber_count(const std::vector<std::size_t>& dims) {
    if (dims.empty()) raise(Errc::invalid_params, "tensor arity must be >= 1");
    std::size_t n = 1;
    for (std::size_t d : dims) {
        if (d == 0) raise(Errc::invalid_params, "tensor extents must be positive");
        n *= d;
    }
    return n;
}

/// l_q reduction of nonnegative reals, scaled by the maximum.
double reduce_lq(std::span<const double> v, ExtExponent q) {
    double top = 0.0;
    for (double x : v) top = std::max(top, x);
    if (top == 0.0) return 0.0;
    if (q.is_infinite()) return top;
    const double qd = q.value().to_double();
    double acc = 0.0;
    for (double x : v) {
        const double r = x / top;
        acc += std::pow(r, qd);
    }
    return top * std::pow(acc, 1.0 / qd);
}

}  // namespace

CoefficientTensor::CoefficientTensor(std::vector<std::size_t> dims, std::size_t target_dim)
    : dims_(std::move(dims)), target_dim_(target_dim) {
    entries_.assign(checked_fiber_count(dims_) * fiber_size(), Complex(0.0, 0.0));
}

CoefficientTensor CoefficientTensor::from_entries(std::vector<std::size_t> dims, std::size_t target_dim,
                                                  std::vector<Complex> entries) {
    CoefficientTensor t(std::move(dims), target_dim);
    if (entries.size() != t.entries_.size())
        raise(Errc::dimension_mismatch, "entry count " + std::to_string(entries.size()) + " does not match shape (" +
                                            std::to_string(t.entries_.size()) + " expected)");
    for (const Complex& e : entries)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            raise(Errc::invalid_params, "tensor entries must be finite");
    t.entries_ = std::move(entries);
    return t;
}

std::size_t CoefficientTensor::fiber_count() const {
    std::size_t n = 1;
    for (std::size_t d : dims_) n *= d;
    return n;
}

std::size_t CoefficientTensor::flat_index(std::span<const std::size_t> idx, std::size_t k) const {
    if (idx.size() != dims_.size()) raise(Errc::dimension_mismatch, "index arity does not match tensor arity");
    if (k >= fiber_size()) raise(Errc::index_out_of_range, "target component out of range");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        if (idx[j] >= dims_[j]) raise(Errc::index_out_of_range, "index out of range in axis " + std::to_string(j));
        flat = flat * dims_[j] + idx[j];
    }
    return flat * fiber_size() + k;
}

Complex& CoefficientTensor::at(std::span<const std::size_t> idx, std::size_t k) {
    return entries_[flat_index(idx, k)];
}

const Complex& CoefficientTensor::at(std::span<const std::size_t> idx, std::size_t k) const {
    return entries_[flat_index(idx, k)];
}

std::vector<Complex> CoefficientTensor::evaluate(std::span<const std::vector<Complex>> xs) const {
    if (xs.size() != dims_.size())
        raise(Errc::dimension_mismatch, "expected " + std::to_string(dims_.size()) + " argument vectors");
    for (std::size_t j = 0; j < dims_.size(); ++j)
        if (xs[j].size() != dims_[j])
            raise(Errc::dimension_mismatch, "argument " + std::to_string(j) + " has length " +
                                                std::to_string(xs[j].size()) + ", expected " +
                                                std::to_string(dims_[j]));

    // Contract the last domain axis repeatedly; the buffer keeps logical
    // shape (n_1 .. n_j, fiber).
    const std::size_t fib = fiber_size();
    std::vector<Complex> buf(entries_.begin(), entries_.end());
    for (int j = arity() - 1; j >= 0; --j) {
        const std::size_t nj = dims_[static_cast<std::size_t>(j)];
        const std::size_t pre = buf.size() / (nj * fib);
        std::vector<Complex> next(pre * fib, Complex(0.0, 0.0));
        const auto& x = xs[static_cast<std::size_t>(j)];
        for (std::size_t a = 0; a < pre; ++a) {
            for (std::size_t i = 0; i < nj; ++i) {
                const Complex w = x[i];
                const std::size_t in_base = (a * nj + i) * fib;
                const std::size_t out_base = a * fib;
                for (std::size_t k = 0; k < fib; ++k) next[out_base + k] += buf[in_base + k] * w;
            }
        }
        buf = std::move(next);
    }
    return buf;
}

Complex CoefficientTensor::evaluate_scalar(std::span<const std::vector<Complex>> xs) const {
    if (vector_valued()) raise(Errc::invalid_params, "evaluate_scalar on a vector-valued tensor");
    return evaluate(xs)[0];
}

MultilinearSpec MultilinearSpec::scalar(DomainVector ps) {
    MultilinearSpec s{std::move(ps), std::nullopt, ExtExponent::infinity()};
    return s;
}

MultilinearSpec MultilinearSpec::vector_valued(DomainVector ps, ExtExponent u, std::optional<ExtExponent> q) {
    const ExtExponent measure = q.value_or(u);
    if (measure < u)
        raise(Errc::invalid_params,
              "coefficients must be measured in a weaker norm: q = " + measure.to_string() + " < u = " + u.to_string());
    return MultilinearSpec{std::move(ps), u, measure};
}

MultilinearSpec MultilinearSpec::with_measure(ExtExponent q) const {
    if (!target) return *this;
    return vector_valued(domain, *target, q);
}

double lq_norm(std::span<const Complex> v, ExtExponent q) {
    double top = 0.0;
    for (const Complex& c : v) top = std::max(top, std::abs(c));
    if (top == 0.0) return 0.0;
    if (q.is_infinite()) return top;
    const double qd = q.value().to_double();
    double acc = 0.0;
    for (const Complex& c : v) acc += std::pow(std::abs(c) / top, qd);
    return top * std::pow(acc, 1.0 / qd);
}

double coefficient_sum(const CoefficientTensor& tensor, const MultilinearSpec& spec, ExtExponent t) {
    const std::size_t fib = tensor.fiber_size();
    const std::size_t count = tensor.fiber_count();
    const auto entries = tensor.entries();

    std::vector<double> fiber_norms(count);
    for (std::size_t f = 0; f < count; ++f) {
        if (fib == 1) fiber_norms[f] = std::abs(entries[f]);
        else fiber_norms[f] = lq_norm(entries.subspan(f * fib, fib), spec.measure);
    }
    return reduce_lq(fiber_norms, t);
}

MixedSumReport mixed_sum(const CoefficientTensor& tensor, const MultilinearSpec& spec, int slot,
                         ExtExponent q, ExtExponent lambda) {
    if (slot < 0 || slot >= tensor.arity())
        raise(Errc::index_out_of_range, "slot " + std::to_string(slot) + " out of range for arity " +
                                            std::to_string(tensor.arity()));
    const std::size_t fib = tensor.fiber_size();
    const std::size_t count = tensor.fiber_count();
    const auto entries = tensor.entries();
    const auto& dims = tensor.dims();

    std::size_t stride = 1;
    for (std::size_t k = static_cast<std::size_t>(slot) + 1; k < dims.size(); ++k) stride *= dims[k];
    const std::size_t n_slot = dims[static_cast<std::size_t>(slot)];

    // Per value of the fixed index, the fiber norms of every remaining index.
    std::vector<std::vector<double>> groups(n_slot);
    for (auto& g : groups) g.reserve(count / n_slot);
    for (std::size_t f = 0; f < count; ++f) {
        const std::size_t i = (f / stride) % n_slot;
        const double fn =
            fib == 1 ? std::abs(entries[f]) : lq_norm(entries.subspan(f * fib, fib), spec.measure);
        groups[i].push_back(fn);
    }

    std::vector<double> inner(n_slot);
    for (std::size_t i = 0; i < n_slot; ++i) inner[i] = reduce_lq(groups[i], q);
    return MixedSumReport{slot, q, lambda, reduce_lq(inner, lambda)};
}

std::vector<Complex> slot_coefficients(const CoefficientTensor& tensor,
                                       std::span<const std::vector<Complex>> xs, int slot) {
    if (tensor.vector_valued()) raise(Errc::invalid_params, "slot_coefficients expects a scalar-valued tensor");
    if (slot < 0 || slot >= tensor.arity()) raise(Errc::index_out_of_range, "slot out of range");
    if (xs.size() != static_cast<std::size_t>(tensor.arity()))
        raise(Errc::dimension_mismatch, "expected one vector per slot");
    const auto& dims = tensor.dims();
    for (std::size_t j = 0; j < dims.size(); ++j)
        if (xs[j].size() != dims[j]) raise(Errc::dimension_mismatch, "argument length mismatch");

    const auto entries = tensor.entries();
    const std::size_t m = dims.size();
    std::vector<Complex> coeff(dims[static_cast<std::size_t>(slot)], Complex(0.0, 0.0));
    std::vector<std::size_t> idx(m, 0);
    for (std::size_t f = 0; f < entries.size(); ++f) {
        Complex w(1.0, 0.0);
        for (std::size_t k = 0; k < m; ++k)
            if (k != static_cast<std::size_t>(slot)) w *= xs[k][idx[k]];
        coeff[idx[static_cast<std::size_t>(slot)]] += entries[f] * w;
        for (std::size_t k = m; k-- > 0;) {
            if (++idx[k] < dims[k]) break;
            idx[k] = 0;
        }
    }
    return coeff;
}

}  // namespace lpsum
