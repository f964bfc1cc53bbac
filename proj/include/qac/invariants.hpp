#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qac/modexpr.hpp"

namespace qac {

// Whether the reported values are guaranteed to be invariants of the
// simple heads: both presentations must be pairwise strongly commuting
// families.  Otherwise they are invariants of the products only.
enum class Certificate { CertifiedCommutingFamily, ProductOnly };

const char* certificate_name(Certificate c);

// c_{M,N}(z): product over factor pairs ((i,a),(j,b)) of
// c_{i,j}((b/a) z).  Empty product for the trivial module.
GFun renormalizing_coefficient(const AffineTypeData& T, const StandardModule& m,
                               const StandardModule& n);

long long lambda(const AffineTypeData& T, const StandardModule& m, const StandardModule& n);
long long lambda_tilde(const AffineTypeData& T, const StandardModule& m, const StandardModule& n);
long long lambda_inf(const AffineTypeData& T, const StandardModule& m, const StandardModule& n);

// Multiplicity of z = 1 in d_{P,Q}(z) d_{Q,P}(z^{-1}), read off the
// root tables.
long long de_fundamental(const AffineTypeData& T, const FundParam& p, const FundParam& q);

bool strongly_commutes(const AffineTypeData& T, const FundParam& p, const FundParam& q);

// All internal factor pairs strongly commute.
bool commuting_family(const AffineTypeData& T, const StandardModule& m);

struct DeValue {
    long long value = 0;
    Certificate certificate = Certificate::ProductOnly;
};

// (lambda(M,N) + lambda(N,M)) / 2; certified when both sides are
// commuting families (then the value belongs to the simple heads).
DeValue de(const AffineTypeData& T, const StandardModule& m, const StandardModule& n);

struct InvariantReport {
    GFun c;
    long long lambda = 0;
    long long lambda_tilde = 0;
    long long lambda_inf = 0;
    std::optional<long long> de;  // present only when certified
    Certificate certificate = Certificate::ProductOnly;
};

InvariantReport invariant_report(const AffineTypeData& T, const StandardModule& m,
                                 const StandardModule& n);

struct DeSpectrum {
    std::map<long long, long long> values;  // k -> de(M, D^k N), nonzero entries
    long long bound = 0;                    // values vanish for |k| > bound
    long long at(long long k) const {
        auto it = values.find(k);
        return it == values.end() ? 0 : it->second;
    }
};

// Finite truncation bound: outside |k| <= bound no denominator root can
// align with a pstar^k shift, so the spectrum provably vanishes.
long long spectrum_bound(const AffineTypeData& T, const StandardModule& m,
                         const StandardModule& n);

DeSpectrum de_spectrum(const AffineTypeData& T, const StandardModule& m,
                       const StandardModule& n);

// The three alternating sums over the spectrum; they must reproduce
// deg, deg_inf and deg_tilde of c_{M,N}.
long long lambda_via_spectrum(const AffineTypeData& T, const StandardModule& m,
                              const StandardModule& n);
long long lambda_inf_via_spectrum(const AffineTypeData& T, const StandardModule& m,
                                  const StandardModule& n);
long long zero_order_c(const AffineTypeData& T, const StandardModule& m,
                       const StandardModule& n);

// c(N1,M)/c(N2,M) has a phi-class with nonzero net exponent, so it is
// not a rational function and the gap formula does not apply.
struct NotRationalError : std::runtime_error {
    std::vector<SpectralParam> classes;  // representatives mod ptilde powers
    explicit NotRationalError(std::vector<SpectralParam> cls);
};

// lambda(N1,M) - lambda(N2,M), checked against twice the zero order of
// the rational quotient at z = 1.  Throws NotRationalError.
long long lambda_gap(const AffineTypeData& T, const StandardModule& n1,
                     const StandardModule& n2, const StandardModule& m);

// Sufficient criterion: true when L commutes with M factorwise, or with
// the left dual of N factorwise.  False means inconclusive.
bool normal_triple_sufficient(const AffineTypeData& T, const StandardModule& l,
                              const StandardModule& m, const StandardModule& n);

} // namespace qac
