#include "lpsum/exponent.hpp"

#include <limits>
#include <utility>

namespace lpsum {

ExtExponent ExtExponent::from_value(const Rational& p) {
    if (p < Rational(1)) raise(Errc::invalid_params, "exponent must satisfy p >= 1, got " + p.to_string());
    ExtExponent e;
    e.recip_ = p.reciprocal();
    return e;
}

ExtExponent ExtExponent::from_recip(const Rational& r) {
    if (r < Rational(0) || r > Rational(1))
        raise(Errc::invalid_params, "reciprocal exponent must lie in [0, 1], got " + r.to_string());
    ExtExponent e;
    e.recip_ = r;
    return e;
}

double ExtExponent::to_double() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return 1.0 / recip_.to_double();
}

std::string ExtExponent::to_string() const {
    if (is_infinite()) return "inf";
    return value().to_string();
}

std::optional<ExtExponent> ExtExponent::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") return infinity();
    auto r = Rational::parse(text);
    if (!r || *r < Rational(1)) return std::nullopt;
    return from_value(*r);
}

DomainVector::DomainVector(std::vector<ExtExponent> ps) : ps_(std::move(ps)) {
    if (ps_.empty()) raise(Errc::invalid_params, "domain vector needs at least one exponent");
}

DomainVector DomainVector::uniform(int m, ExtExponent p) {
    if (m < 1) raise(Errc::invalid_params, "arity must be >= 1");
    return DomainVector(std::vector<ExtExponent>(static_cast<std::size_t>(m), p));
}

Rational DomainVector::sum_recip() const {
    Rational s(0);
    for (const auto& p : ps_) s += p.recip();
    return s;
}

std::string DomainVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < ps_.size(); ++i) {
        if (i) out += ",";
        out += ps_[i].to_string();
    }
    return out;
}

}  // namespace lpsum
