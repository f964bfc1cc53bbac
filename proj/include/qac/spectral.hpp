#pragma once

#include <compare>
#include <optional>
#include <string>

#include "qac/rational.hpp"

namespace qac {

// Element of the parameter group {zeta * q^r}: a root of unity
// exp(2*pi*i*zeta) times a rational power of q.  zeta is kept reduced
// in [0,1); equality is exact equality of both fields.
struct SpectralParam {
    Rat zeta;  // in [0,1)
    Rat qexp;

    SpectralParam() = default;
    SpectralParam(Rat z, Rat r) : zeta(z.mod1()), qexp(r) {}

    bool is_one() const { return zeta.is_zero() && qexp.is_zero(); }

    friend bool operator==(const SpectralParam&, const SpectralParam&) = default;
    friend std::strong_ordering operator<=>(const SpectralParam& a, const SpectralParam& b) {
        if (auto c = a.zeta <=> b.zeta; c != 0) return c;
        return a.qexp <=> b.qexp;
    }
};

inline SpectralParam operator*(const SpectralParam& a, const SpectralParam& b) {
    return SpectralParam(a.zeta + b.zeta, a.qexp + b.qexp);
}

inline SpectralParam inverse(const SpectralParam& a) {
    return SpectralParam(-a.zeta, -a.qexp);
}

inline SpectralParam operator/(const SpectralParam& a, const SpectralParam& b) {
    return a * inverse(b);
}

// Bar involution: q^{1/m} -> q^{-1/m}, roots of unity fixed.
inline SpectralParam param_bar(const SpectralParam& a) {
    return SpectralParam(a.zeta, -a.qexp);
}

SpectralParam param_pow(const SpectralParam& a, long long k);

// q^k, (-q)^k = exp(pi*i*k) q^k, and the identity.
inline SpectralParam q_pow(const Rat& r) { return SpectralParam(Rat(0), r); }
inline SpectralParam neg_q_pow(long long k) { return SpectralParam(Rat(k, 2), Rat(k)); }
inline SpectralParam param_one() { return SpectralParam(); }

// Validates the lattice generator: zeta = 0 and qexp > 0.
void check_ptilde(const SpectralParam& ptilde);

// k such that a = ptilde^k exactly, if any.
std::optional<long long> ptilde_exponent(const SpectralParam& a, const SpectralParam& ptilde);

// Canonical spellings: "q^r", "(-q)^k" (k odd), "zeta(p/q)*q^(r)".
std::string render_param(const SpectralParam& a);

// Inverse of render_param, also the <param> production of the module
// expression grammar.  Throws std::invalid_argument on malformed input.
SpectralParam parse_param(std::string_view text);

} // namespace qac
