#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "appnorm/errors.hpp"

namespace appnorm {

// Exact signed rational on int64 with gcd-normalized representation.
// Intermediates run through __int128; results that do not fit int64 throw,
// which surfaces loudly instead of silently wrapping.
class rational {
public:
    constexpr rational() = default;
    rational(std::int64_t n) : num_(n), den_(1) {}
    rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend rational operator+(const rational& a, const rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw failure("DivisionByZero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    rational operator-() const { return from128(-i128(num_), den_); }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    // Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "p", "p/q" and exact decimals like "2.75".
    static std::optional<rational> parse(const std::string& text);

private:
    using i128 = __int128;

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw failure("DivisionByZero");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    static rational from128(i128 n, i128 d) {
        if (d == 0) throw failure("DivisionByZero");
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw failure("RationalOverflow");
        rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// A value in the lattice [0, inf]: a nonnegative rational or the distinguished
// top element. Addition absorbs inf; truncated subtraction follows
// x (-) y = (x - y) v 0 with inf (-) y = inf for finite y and x (-) inf = 0.
class extvalue {
public:
    constexpr extvalue() = default;
    extvalue(std::int64_t n) : extvalue(rational(n)) {}
    extvalue(const rational& r) : inf_(false), r_(r) {
        if (r.is_negative()) throw failure("NegativeValue", {{"value", r.str()}});
    }

    static extvalue infinity() {
        extvalue v;
        v.inf_ = true;
        return v;
    }

    bool is_inf() const { return inf_; }
    bool finite() const { return !inf_; }
    const rational& ratio() const {
        if (inf_) throw failure("InfiniteValue");
        return r_;
    }

    friend extvalue operator+(const extvalue& a, const extvalue& b) {
        if (a.inf_ || b.inf_) return infinity();
        return extvalue(a.r_ + b.r_);
    }

    // x (-) y
    friend extvalue tsub(const extvalue& a, const extvalue& b) {
        if (b.inf_) return extvalue(0);
        if (a.inf_) return infinity();
        rational d = a.r_ - b.r_;
        return d.is_negative() ? extvalue(0) : extvalue(d);
    }

    // Finite scaling, used by the affine stage rescale; the factor must be a
    // nonnegative rational and the value finite unless the factor is positive.
    friend extvalue operator*(const extvalue& a, const rational& c) {
        if (c.is_negative()) throw failure("NegativeValue", {{"value", c.str()}});
        if (a.inf_) {
            if (c.is_zero()) return extvalue(0);
            return infinity();
        }
        return extvalue(a.r_ * c);
    }

    friend extvalue operator/(const extvalue& a, const rational& c) {
        if (c.is_negative() || c.is_zero()) throw failure("DivisionByZero");
        if (a.inf_) return infinity();
        return extvalue(a.r_ / c);
    }

    friend bool operator==(const extvalue& a, const extvalue& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.r_ == b.r_;
    }
    friend std::strong_ordering operator<=>(const extvalue& a, const extvalue& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        return a.r_ <=> b.r_;
    }

    std::string str() const { return inf_ ? "inf" : r_.str(); }

    // Accepts "inf" plus everything rational::parse accepts; rejects negatives.
    static std::optional<extvalue> parse(const std::string& text);

private:
    bool inf_ = false;
    rational r_;
};

inline extvalue min(const extvalue& a, const extvalue& b) { return a <= b ? a : b; }
inline extvalue max(const extvalue& a, const extvalue& b) { return a >= b ? a : b; }

}  // namespace appnorm
