#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "lpsum/errors.hpp"

namespace lpsum {

/// Exact rational number on int64, always held reduced with a positive
/// denominator. Magnitudes here stay tiny (reciprocals of exponents and short
/// sums of them), so int64 with gcd reduction and 128-bit intermediates is
/// ample.
class Rational {
    static constexpr std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

    static constexpr __int128 iabs128(__int128 v) { return v < 0 ? -v : v; }

    static constexpr __int128 gcd128(__int128 a, __int128 b) {
        a = iabs128(a);
        b = iabs128(b);
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    /// Reduces a 128-bit numerator/denominator pair and narrows it back to
    /// int64, raising instead of wrapping.
    static constexpr Rational reduce128(__int128 num, __int128 den) {
        if (den == 0) raise(Errc::invalid_params, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num == 0 ? den : num, den);
        num /= g;
        den /= g;
        constexpr __int128 kMax = INT64_MAX;
        if (num > kMax || num < -kMax || den > kMax)
            raise(Errc::invalid_params, "rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_integer() const { return den_ == 1; }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        const __int128 num =
            static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        const __int128 den = static_cast<__int128>(a.den_) * b.den_;
        return reduce128(num, den);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) raise(Errc::invalid_params, "rational division by zero");
        return reduce128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    constexpr Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const auto lhs = static_cast<__int128>(a.num_) * b.den_;
        const auto rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    constexpr Rational reciprocal() const {
        if (num_ == 0) raise(Errc::invalid_params, "reciprocal of zero");
        return Rational(den_, num_);
    }

    constexpr Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "a", "-a/b" and decimal forms like "1.25" (parsed exactly).
    static std::optional<Rational> parse(std::string_view text);

private:
    constexpr void normalize() {
        if (den_ == 0) raise(Errc::invalid_params, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(iabs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) return std::nullopt;
    }
    const auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto to_int = [](std::string_view s) -> std::optional<std::int64_t> {
        if (s.size() > 18) return std::nullopt;
        std::int64_t v = 0;
        for (char c : s) v = v * 10 + (c - '0');
        return v;
    };

    std::int64_t num = 0, den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto ns = text.substr(0, slash), ds = text.substr(slash + 1);
        if (!digits_only(ns) || !digits_only(ds)) return std::nullopt;
        auto n = to_int(ns), d = to_int(ds);
        if (!n || !d || *d == 0) return std::nullopt;
        num = *n;
        den = *d;
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto ws = text.substr(0, dot), fs = text.substr(dot + 1);
        if (ws.empty() && fs.empty()) return std::nullopt;
        if ((!ws.empty() && !digits_only(ws)) || (!fs.empty() && !digits_only(fs))) return std::nullopt;
        if (fs.size() > 15) return std::nullopt;
        auto whole = ws.empty() ? std::optional<std::int64_t>(0) : to_int(ws);
        auto frac = fs.empty() ? std::optional<std::int64_t>(0) : to_int(fs);
        if (!whole || !frac) return std::nullopt;
        den = 1;
        for (std::size_t i = 0; i < fs.size(); ++i) den *= 10;
        num = *whole * den + *frac;
    } else {
        if (!digits_only(text)) return std::nullopt;
        auto n = to_int(text);
        if (!n) return std::nullopt;
        num = *n;
    }
    Rational r(num, den);
    return negative ? -r : r;
}

}  // namespace lpsum
