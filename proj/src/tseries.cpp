#include "smf/tseries.hpp"
#include <stdexcept>

namespace smf {

SeriesQuotient SeriesQuotient::monomial_over(int e, std::vector<int> factors) {
    SeriesQuotient s;
    s.numer.assign(e + 1, 0);
    s.numer[e] = 1;
    s.denom_factors = std::move(factors);
    return s;
}

std::vector<Integer> SeriesQuotient::expand(int n) const {
    if (n < 0) throw std::invalid_argument("negative series order");
    std::vector<Integer> c(n + 1, 0);
    for (size_t e = 0; e < numer.size() && (int)e <= n; ++e)
        c[e] = numer[e];
    // multiply by 1/(1-t^d) = 1 + t^d + t^{2d} + ...
    for (int d : denom_factors) {
        if (d < 1) throw std::invalid_argument("denominator factor < 1");
        for (int i = d; i <= n; ++i) c[i] += c[i - d];
    }
    return c;
}

Integer SeriesQuotient::coeff(int n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    return expand(n)[n];
}

} // namespace smf
