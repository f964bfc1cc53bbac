#pragma once

#include <map>
#include <string>
#include <vector>

#include "qac/spectral.hpp"

namespace qac {

// Class of a formal product prod_a phi(a z)^{eta_a} modulo units
// k[z^{±1}]^x, stored as its finite exponent map.  The constant and the
// z-power of the ambient group are quotiented away; every degree
// functional below is insensitive to them.
class GFun {
public:
    GFun() = default;

    // phi(a z)^e
    static GFun phi(const SpectralParam& a, long long e = 1) {
        GFun f;
        if (e != 0) f.eta_[a] = e;
        return f;
    }

    const std::map<SpectralParam, long long>& eta() const { return eta_; }
    bool is_one() const { return eta_.empty(); }
    long long exponent_of(const SpectralParam& a) const {
        auto it = eta_.find(a);
        return it == eta_.end() ? 0 : it->second;
    }

    GFun& mul_factor(const SpectralParam& a, long long e) {
        if (e == 0) return *this;
        auto it = eta_.find(a);
        if (it == eta_.end()) {
            eta_[a] = e;
        } else if ((it->second += e) == 0) {
            eta_.erase(it);
        }
        return *this;
    }

    friend GFun operator*(const GFun& f, const GFun& g) {
        GFun out = f;
        for (const auto& [a, e] : g.eta_) out.mul_factor(a, e);
        return out;
    }
    friend GFun operator/(const GFun& f, const GFun& g) {
        GFun out = f;
        for (const auto& [a, e] : g.eta_) out.mul_factor(a, -e);
        return out;
    }
    GFun inverse() const {
        GFun out;
        for (const auto& [a, e] : eta_) out.eta_[a] = -e;
        return out;
    }

    // f(az): every key b becomes b*a.
    GFun shifted(const SpectralParam& a) const {
        GFun out;
        for (const auto& [b, e] : eta_) out.eta_[b * a] = e;
        return out;
    }

    GFun barred() const {
        GFun out;
        for (const auto& [b, e] : eta_) out.mul_factor(param_bar(b), e);
        return out;
    }

    friend bool operator==(const GFun&, const GFun&) = default;

    // Factors sorted by (zeta, qexp): "phi(q^2*z)^-1 phi(z)".
    std::string str() const;

private:
    std::map<SpectralParam, long long> eta_;
};

// Sum of eta_a over a in ptilde^{Z<=0}.
long long deg_tilde(const GFun& f, const SpectralParam& ptilde);
// Sum of eta_a over a in ptilde^Z.
long long deg_inf(const GFun& f, const SpectralParam& ptilde);
// 2*deg_tilde - deg_inf.
long long deg(const GFun& f, const SpectralParam& ptilde);

// Smallest n0 >= 1 such that for all n >= n0 every ptilde-power key of f
// leaves the counting window under shift by ptilde^{±n}, i.e.
// deg(f(ptilde^n z)) = -deg_inf(f) and deg(f(ptilde^-n z)) = deg_inf(f).
long long escape_exponent(const GFun& f, const SpectralParam& ptilde);

// prod_x (z - x)^{m_x} modulo units, as a finite multiset of roots.
// Negative multiplicities encode rational functions.
class RootMultiset {
public:
    RootMultiset() = default;

    RootMultiset& add(const SpectralParam& root, long long mult = 1) {
        if (mult == 0) return *this;
        auto it = mult_.find(root);
        if (it == mult_.end()) {
            mult_[root] = mult;
        } else if ((it->second += mult) == 0) {
            mult_.erase(it);
        }
        return *this;
    }

    const std::map<SpectralParam, long long>& roots() const { return mult_; }
    bool empty() const { return mult_.empty(); }
    long long multiplicity(const SpectralParam& root) const {
        auto it = mult_.find(root);
        return it == mult_.end() ? 0 : it->second;
    }

    friend RootMultiset operator*(const RootMultiset& p, const RootMultiset& q) {
        RootMultiset out = p;
        for (const auto& [r, m] : q.mult_) out.add(r, m);
        return out;
    }

    friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

    std::string str() const;

private:
    std::map<SpectralParam, long long> mult_;
};

// Class of p in the phi-group via (1 - az) = phi(az)/phi(ptilde*az):
// each root x of multiplicity m contributes {x^-1: +m, ptilde*x^-1: -m}.
GFun embed_poly(const RootMultiset& p, const SpectralParam& ptilde);

// Total multiplicity of the root z = 1.
long long zero_order_at_one(const RootMultiset& p);

} // namespace qac
