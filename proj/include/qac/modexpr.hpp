#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qac/cartan.hpp"

namespace qac {

// Shifted fundamental module V(node)_param.
struct FundParam {
    int node = 1;
    SpectralParam param;

    friend bool operator==(const FundParam&, const FundParam&) = default;
    friend std::strong_ordering operator<=>(const FundParam&, const FundParam&) = default;
};

// Ordered tensor product of shifted fundamental modules; the empty
// product is the trivial module.
struct StandardModule {
    std::vector<FundParam> factors;

    static StandardModule unit() { return {}; }
    bool is_unit() const { return factors.empty(); }
    size_t size() const { return factors.size(); }

    friend bool operator==(const StandardModule&, const StandardModule&) = default;
};

// Coordinates in the fundamental-weight lattice; zero entries dropped.
using Weight = std::map<int, long long>;

StandardModule tensor(const StandardModule& m, const StandardModule& n);
StandardModule shifted(const StandardModule& m, const SpectralParam& a);

// Duals dualize nodes via i -> i*, shift parameters by pstar^{-1} (left)
// or pstar (right), and reverse the factor order.
StandardModule left_dual(const AffineTypeData& T, const StandardModule& m);
StandardModule right_dual(const AffineTypeData& T, const StandardModule& m);

// k-fold right dual for k >= 0, (-k)-fold left dual for k < 0.
StandardModule dual_power(const AffineTypeData& T, const StandardModule& m, long long k);

// Parameters barred, factor order reversed.
StandardModule barred(const StandardModule& m);

// Factor multisets equal up to the m_i-equivalence on parameters
// (a ~ b iff (a/b)^{m_i} = 1).
bool iso_equal(const AffineTypeData& T, const StandardModule& m, const StandardModule& n);

Weight weight(const StandardModule& m);
Weight weight_sum(const Weight& a, const Weight& b);

std::string render_module(const StandardModule& m);

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t p, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(p) + ": " + what),
          pos(p) {}
};

// Grammar: module := factor ('*' factor)*; factor := '1' | 'V(' int ')[' param ']'.
// Whitespace-insensitive; node indices checked against T.
StandardModule parse_module(const AffineTypeData& T, std::string_view text);

} // namespace qac
