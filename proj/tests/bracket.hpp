#pragma once

#include <initializer_list>

#include "qac/gfun.hpp"

// Test-side oracle notation: [a] := phi((-q)^a z).  Expected coefficient
// classes are written down as bracket quotients, independent of the
// library's assembly path.
namespace qac::testing {

inline GFun bracket(long long a) { return GFun::phi(neg_q_pow(a)); }

inline GFun brackets(std::initializer_list<long long> num,
                     std::initializer_list<long long> den) {
    GFun f;
    for (long long a : num) f.mul_factor(neg_q_pow(a), 1);
    for (long long a : den) f.mul_factor(neg_q_pow(a), -1);
    return f;
}

} // namespace qac::testing
