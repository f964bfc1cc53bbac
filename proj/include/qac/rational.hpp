#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qac {

// Exact rational with reduced representation, den > 0.
// Arithmetic goes through 128-bit intermediates and throws on
// overflow of the reduced result instead of wrapping.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = (__int128)a.num_ * b.den_, r = (__int128)b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Representative of the class mod 1 in [0, 1).
    Rat mod1() const { return *this - Rat(floor()); }

    // Exact quotient if *this / d is an integer.
    bool integer_quotient(const Rat& d, long long& out) const {
        Rat q = *this / d;
        if (!q.is_integer()) return false;
        out = q.num_;
        return true;
    }

    // "n" or "n/d"
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "n" or "n/d" with optional leading sign.
    static Rat parse(std::string_view s);

private:
    long long num_, den_;

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    static Rat from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rat: overflow");
        Rat r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
};

inline Rat Rat::parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("Rat: cannot parse '" + std::string(s) + "'"); };
    size_t slash = s.find('/');
    auto to_ll = [&](std::string_view t) -> long long {
        if (t.empty()) bad();
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        long long v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') bad();
            v = v * 10 + (t[i] - '0');
        }
        return (t[0] == '-') ? -v : v;
    };
    if (slash == std::string_view::npos) return Rat(to_ll(s));
    return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

} // namespace qac
