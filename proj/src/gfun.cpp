#include "qac/gfun.hpp"

#include <algorithm>

namespace qac {

std::string GFun::str() const {
    if (eta_.empty()) return "1";
    std::string out;
    for (const auto& [a, e] : eta_) {
        if (!out.empty()) out += " ";
        out += a.is_one() ? "phi(z)" : "phi(" + render_param(a) + "*z)";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

long long deg_tilde(const GFun& f, const SpectralParam& ptilde) {
    check_ptilde(ptilde);
    long long sum = 0;
    for (const auto& [a, e] : f.eta()) {
        auto k = ptilde_exponent(a, ptilde);
        if (k && *k <= 0) sum += e;
    }
    return sum;
}

long long deg_inf(const GFun& f, const SpectralParam& ptilde) {
    check_ptilde(ptilde);
    long long sum = 0;
    for (const auto& [a, e] : f.eta()) {
        if (ptilde_exponent(a, ptilde)) sum += e;
    }
    return sum;
}

long long deg(const GFun& f, const SpectralParam& ptilde) {
    return 2 * deg_tilde(f, ptilde) - deg_inf(f, ptilde);
}

long long escape_exponent(const GFun& f, const SpectralParam& ptilde) {
    long long n0 = 1;
    for (const auto& [a, e] : f.eta()) {
        (void)e;
        if (auto k = ptilde_exponent(a, ptilde)) {
            n0 = std::max(n0, 1 - *k);  // push ptilde^k into the > 0 zone
            n0 = std::max(n0, *k);      // and into the <= 0 zone
        }
    }
    return n0;
}

std::string RootMultiset::str() const {
    if (mult_.empty()) return "1";
    std::string out;
    for (const auto& [r, m] : mult_) {
        if (!out.empty()) out += " ";
        out += "(z - " + render_param(r) + ")";
        if (m != 1) out += "^" + std::to_string(m);
    }
    return out;
}

GFun embed_poly(const RootMultiset& p, const SpectralParam& ptilde) {
    check_ptilde(ptilde);
    GFun out;
    for (const auto& [x, m] : p.roots()) {
        SpectralParam xinv = inverse(x);
        out.mul_factor(xinv, m);
        out.mul_factor(ptilde * xinv, -m);
    }
    return out;
}

long long zero_order_at_one(const RootMultiset& p) {
    return p.multiplicity(param_one());
}

} // namespace qac
