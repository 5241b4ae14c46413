#pragma once

#include <vector>
#include <cstdint>
#include "smf/rational.hpp"

namespace smf {

// p(t) / prod_i (1 - t^{d_i}) with integer numerator, expanded exactly.
struct SeriesQuotient {
    std::vector<long long> numer;   // numer[e] = coefficient of t^e
    std::vector<int> denom_factors; // each d_i >= 1

    static SeriesQuotient monomial_over(int e, std::vector<int> factors);

    // coefficients of t^0..t^n
    std::vector<Integer> expand(int n) const;
    Integer coeff(int n) const;
};

} // namespace smf
