#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vpg0 {

// Exact rational over int64 with normalized sign and gcd-reduced terms.
// Coordinates in this project stay tiny (grid indices plus halves/quarters),
// so int64 with __int128 intermediates is more than enough headroom.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    static Rational half() { return Rational(1, 2); }

    Rational operator-() const { return Rational(-num_, den_, Raw{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return fromWide(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return fromWide((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return fromWide((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double toDouble() const { return (double)num_ / (double)den_; }

    // Canonical text form is always "num/den", e.g. "3/1", "-1/2".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            std::int64_t n = std::stoll(s.substr(0, slash));
            std::int64_t d = std::stoll(s.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad rational literal: " + s);
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct Raw {};
    Rational(std::int64_t n, std::int64_t d, Raw) : num_(n), den_(d) {}

    static Rational fromWide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcdWide(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        return Rational((std::int64_t)n, (std::int64_t)d, Raw{});
    }

    static __int128 gcdWide(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) * Rational(1, 2);
}

// Closed interval [lo, hi] with rational endpoints; point intervals allowed.
struct RInterval {
    Rational lo;
    Rational hi;

    RInterval() = default;
    RInterval(Rational l, Rational h) : lo(l), hi(h) {
        if (h < l) throw std::invalid_argument("interval with hi < lo");
    }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool intersects(const RInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool strictlyLeftOf(const RInterval& o) const { return hi < o.lo; }

    friend bool operator==(const RInterval& a, const RInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

}  // namespace vpg0
