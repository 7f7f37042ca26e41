#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpsum/rational.hpp"

namespace lpsum {

/// An exponent p in [1, inf], stored as its reciprocal 1/p in [0, 1] so that
/// p = inf is the ordinary value 0 and all formulas reduce to exact rational
/// arithmetic on reciprocals. Ordering and comparisons are by value, with inf
/// largest.
class ExtExponent {
public:
    /// Defaults to p = inf (recip 0).
    ExtExponent() = default;

    /// Integer value p >= 1.
    explicit ExtExponent(std::int64_t p) : ExtExponent(from_value(Rational(p))) {}

    static ExtExponent from_value(const Rational& p);
    static ExtExponent from_recip(const Rational& r);
    static ExtExponent infinity() { return ExtExponent(); }

    const Rational& recip() const { return recip_; }
    bool is_infinite() const { return recip_.num() == 0; }

    /// The value p as a rational; invalid for p = inf.
    Rational value() const {
        if (is_infinite()) raise(Errc::invalid_params, "value() of an infinite exponent");
        return recip_.reciprocal();
    }

    /// Conjugate exponent p' with 1/p + 1/p' = 1.
    ExtExponent conjugate() const { return from_recip(Rational(1) - recip_); }

    double to_double() const;

    std::string to_string() const;

    /// Accepts "inf", integers, "a/b" fractions and decimals.
    static std::optional<ExtExponent> parse(std::string_view text);

    friend bool operator==(const ExtExponent& a, const ExtExponent& b) = default;
    friend std::strong_ordering operator<=>(const ExtExponent& a, const ExtExponent& b) {
        return b.recip_ <=> a.recip_;  // value order reverses reciprocal order
    }

private:
    Rational recip_;  // 0 <= recip_ <= 1
};

/// The tuple of domain exponents (p_1, ..., p_m), m >= 1.
class DomainVector {
public:
    DomainVector(std::initializer_list<ExtExponent> ps) : DomainVector(std::vector<ExtExponent>(ps)) {}
    explicit DomainVector(std::vector<ExtExponent> ps);

    /// m copies of the same exponent.
    static DomainVector uniform(int m, ExtExponent p);

    int arity() const { return static_cast<int>(ps_.size()); }
    const ExtExponent& operator[](int j) const { return ps_[static_cast<std::size_t>(j)]; }
    const std::vector<ExtExponent>& entries() const { return ps_; }

    /// Sum of reciprocals 1/p_1 + ... + 1/p_m, exact.
    Rational sum_recip() const;

    std::string to_string() const;

    auto begin() const { return ps_.begin(); }
    auto end() const { return ps_.end(); }

    friend bool operator==(const DomainVector&, const DomainVector&) = default;

private:
    std::vector<ExtExponent> ps_;
};

}  // namespace lpsum
