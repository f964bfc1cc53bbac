#include "qac/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace qac {

const char* certificate_name(Certificate c) {
    return c == Certificate::CertifiedCommutingFamily ? "CertifiedCommutingFamily"
                                                      : "ProductOnly";
}

GFun renormalizing_coefficient(const AffineTypeData& T, const StandardModule& m,
                               const StandardModule& n) {
    GFun c;
    for (const auto& f : m.factors)
        for (const auto& g : n.factors)
            c = c * fundamental_c(T, f.node, g.node).shifted(g.param / f.param);
    return c;
}

long long lambda(const AffineTypeData& T, const StandardModule& m, const StandardModule& n) {
    return deg(renormalizing_coefficient(T, m, n), T.ptilde);
}

long long lambda_tilde(const AffineTypeData& T, const StandardModule& m, const StandardModule& n) {
    return deg_tilde(renormalizing_coefficient(T, m, n), T.ptilde);
}

long long lambda_inf(const AffineTypeData& T, const StandardModule& m, const StandardModule& n) {
    return deg_inf(renormalizing_coefficient(T, m, n), T.ptilde);
}

long long de_fundamental(const AffineTypeData& T, const FundParam& p, const FundParam& q) {
    SpectralParam ratio = q.param / p.param;
    return T.denom_at(p.node, q.node).multiplicity(ratio) +
           T.denom_at(q.node, p.node).multiplicity(inverse(ratio));
}

bool strongly_commutes(const AffineTypeData& T, const FundParam& p, const FundParam& q) {
    return de_fundamental(T, p, q) == 0;
}

bool commuting_family(const AffineTypeData& T, const StandardModule& m) {
    for (size_t i = 0; i < m.factors.size(); ++i)
        for (size_t j = i + 1; j < m.factors.size(); ++j)
            if (!strongly_commutes(T, m.factors[i], m.factors[j])) return false;
    return true;
}

DeValue de(const AffineTypeData& T, const StandardModule& m, const StandardModule& n) {
    long long sum = lambda(T, m, n) + lambda(T, n, m);
    if (sum % 2 != 0)
        throw std::logic_error("de: lambda(M,N) + lambda(N,M) is odd; denominator table is inconsistent");
    DeValue out;
    out.value = sum / 2;
    out.certificate = (commuting_family(T, m) && commuting_family(T, n))
                          ? Certificate::CertifiedCommutingFamily
                          : Certificate::ProductOnly;
    return out;
}

InvariantReport invariant_report(const AffineTypeData& T, const StandardModule& m,
                                 const StandardModule& n) {
    InvariantReport r;
    r.c = renormalizing_coefficient(T, m, n);
    r.lambda = deg(r.c, T.ptilde);
    r.lambda_tilde = deg_tilde(r.c, T.ptilde);
    r.lambda_inf = deg_inf(r.c, T.ptilde);
    DeValue d = de(T, m, n);
    r.certificate = d.certificate;
    if (d.certificate == Certificate::CertifiedCommutingFamily) r.de = d.value;
    return r;
}

long long spectrum_bound(const AffineTypeData& T, const StandardModule& m,
                         const StandardModule& n) {
    if (m.is_unit() || n.is_unit()) return 0;
    Rat max_root(0);
    for (const auto& [pair, roots] : T.denom) {
        (void)pair;
        for (const auto& [root, mult] : roots.roots()) {
            (void)mult;
            Rat a = root.qexp < Rat(0) ? -root.qexp : root.qexp;
            max_root = std::max(max_root, a);
        }
    }
    Rat max_dist(0);
    for (const auto& f : m.factors)
        for (const auto& g : n.factors) {
            Rat d = g.param.qexp - f.param.qexp;
            if (d < Rat(0)) d = -d;
            max_dist = std::max(max_dist, d);
        }
    Rat reach = (max_root + max_dist) / T.pstar.qexp;
    return reach.floor() + 1;
}

DeSpectrum de_spectrum(const AffineTypeData& T, const StandardModule& m,
                       const StandardModule& n) {
    DeSpectrum s;
    s.bound = spectrum_bound(T, m, n);
    for (long long k = -s.bound; k <= s.bound; ++k) {
        long long v = de(T, m, dual_power(T, n, k)).value;
        if (v != 0) s.values[k] = v;
    }
    return s;
}

long long lambda_via_spectrum(const AffineTypeData& T, const StandardModule& m,
                              const StandardModule& n) {
    long long sum = 0;
    for (const auto& [k, v] : de_spectrum(T, m, n).values) {
        long long parity = k + (k < 0 ? 1 : 0);
        sum += (parity % 2 == 0 ? v : -v);
    }
    return sum;
}

long long lambda_inf_via_spectrum(const AffineTypeData& T, const StandardModule& m,
                                  const StandardModule& n) {
    long long sum = 0;
    for (const auto& [k, v] : de_spectrum(T, m, n).values)
        sum += (k % 2 == 0 ? v : -v);
    return sum;
}

long long zero_order_c(const AffineTypeData& T, const StandardModule& m,
                       const StandardModule& n) {
    long long sum = 0;
    for (const auto& [k, v] : de_spectrum(T, m, n).values)
        if (k >= 0) sum += (k % 2 == 0 ? v : -v);
    return sum;
}

NotRationalError::NotRationalError(std::vector<SpectralParam> cls)
    : std::runtime_error([&cls] {
          std::string msg = "quotient of renormalizing coefficients is not rational; "
                            "obstructing phi-classes:";
          for (const auto& c : cls) msg += " " + render_param(c);
          return msg;
      }()),
      classes(std::move(cls)) {}

long long lambda_gap(const AffineTypeData& T, const StandardModule& n1,
                     const StandardModule& n2, const StandardModule& m) {
    GFun h = renormalizing_coefficient(T, n1, m) / renormalizing_coefficient(T, n2, m);

    // rationality: the net exponent over each class a * ptilde^Z must vanish
    std::map<SpectralParam, long long> class_sum;
    Rat step = T.ptilde.qexp;
    for (const auto& [a, e] : h.eta()) {
        Rat shift = step * Rat((a.qexp / step).floor());
        class_sum[SpectralParam(a.zeta, a.qexp - shift)] += e;
    }
    std::vector<SpectralParam> obstructions;
    for (const auto& [rep, sum] : class_sum)
        if (sum != 0) obstructions.push_back(rep);
    if (!obstructions.empty()) throw NotRationalError(std::move(obstructions));

    long long gap = lambda(T, n1, m) - lambda(T, n2, m);
    if (gap != 2 * deg_tilde(h, T.ptilde))
        throw std::logic_error("lambda_gap: gap does not equal twice the zero order at z=1");
    return gap;
}

namespace {

bool cross_commutes(const AffineTypeData& T, const StandardModule& a, const StandardModule& b) {
    for (const auto& f : a.factors)
        for (const auto& g : b.factors)
            if (!strongly_commutes(T, f, g)) return false;
    return true;
}

} // namespace

bool normal_triple_sufficient(const AffineTypeData& T, const StandardModule& l,
                              const StandardModule& m, const StandardModule& n) {
    for (const StandardModule* x : {&l, &m, &n})
        if (!commuting_family(T, *x))
            throw std::invalid_argument(
                "normal_triple_sufficient: arguments must be certified commuting families");
    return cross_commutes(T, l, m) || cross_commutes(T, l, left_dual(T, n));
}

} // namespace qac
