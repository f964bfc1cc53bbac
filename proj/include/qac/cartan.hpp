#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qac/gfun.hpp"

namespace qac {

struct TypeDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constants of an affine type: classical nodes 1..rank, the dualization
// parameter pstar with ptilde = pstar^2, the node involution i -> i*,
// the lattice constants m_i, and the denominator root table d_{i,j}.
struct AffineTypeData {
    std::string name;
    int rank = 0;
    SpectralParam pstar;
    SpectralParam ptilde;
    std::vector<int> dual;  // dual[i-1] = i*
    std::vector<int> m;     // m[i-1] = m_i
    std::map<std::pair<int, int>, RootMultiset> denom;

    void require_node(int i) const {
        if (i < 1 || i > rank)
            throw TypeDataError(name + ": node " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank));
    }
    int dual_node(int i) const {
        require_node(i);
        return dual[i - 1];
    }
    int m_of(int i) const {
        require_node(i);
        return m[i - 1];
    }
    const RootMultiset& denom_at(int i, int j) const {
        require_node(i);
        require_node(j);
        return denom.at({i, j});
    }

    // Involutivity, completeness of the denominator table, positive root
    // multiplicities, ptilde = pstar^2, m_i in {1,2,3}.  Throws TypeDataError.
    void validate() const;

    friend bool operator==(const AffineTypeData&, const AffineTypeData&) = default;
};

// A_{n-1}^{(1)}: nodes 1..n-1, pstar = (-q)^n, i* = n-i, m_i = 1,
// d_{i,j}(z) = prod_{s=1}^{min(i,j,n-i,n-j)} (z - (-q)^{2s+|i-j|}).
AffineTypeData builtin_type_A(int n);

// Reads and validates a type data file (JSON schema: name, rank,
// pstar {zeta, qexp}, dual, m, denominators {"i,j": [{zeta, qexp, mult}]}).
AffineTypeData load_type(const std::string& path);
AffineTypeData parse_type_data(const std::string& json_text);

// "A<n>~1" resolves to builtin_type_A(n+1); anything else is a file path.
AffineTypeData resolve_type(const std::string& name_or_path);

// a_{i,j}(z) assembled from the denominator tables:
//   prod_mu phi(pstar y_mu z) phi(pstar conj(y_mu) z)
//   / prod_nu phi(x_nu z) phi(ptilde conj(x_nu) z)
// with x running over roots of d_{i,j} and y over roots of d_{i*,j}.
GFun universal_coefficient(const AffineTypeData& T, int i, int j);

// c_{i,j}(z) = d_{i,j}(z) / a_{i,j}(z) as a class in the phi-group.
GFun fundamental_c(const AffineTypeData& T, int i, int j);

} // namespace qac
