#include "smf/sym.hpp"
#include <stdexcept>

namespace smf {

SymVector sym_action(const Mat2& M, int j, const SymVector& v) {
    if ((int)v.size() != j + 1)
        throw std::invalid_argument("sym_action: vector length != j+1");
    // x1 |-> a x1 + c x2,  x2 |-> b x1 + d x2  (substitution by M^t),
    // expand each basis monomial x1^{j-i} x2^i and collect.
    SymVector out(j + 1, Rational(0));
    // powers of the two linear forms as coefficient rows
    // (a x1 + c x2)^m has x1^{m-r} x2^r coefficient C(m,r) a^{m-r} c^r
    for (int i = 0; i <= j; ++i) {
        if (is_zero(v[i])) continue;
        int m = j - i; // exponent of the first form
        for (int r = 0; r <= m; ++r) {
            Integer f1 = binomial(m, r) * pow_int(M.a, m - r) * pow_int(M.c, r);
            if (f1 == 0) continue;
            for (int s = 0; s <= i; ++s) {
                Integer f2 = binomial(i, s) * pow_int(M.b, i - s) * pow_int(M.d, s);
                if (f2 == 0) continue;
                // monomial x1^{(m-r)+(i-s)} x2^{r+s}
                out[r + s] += v[i] * Rational(f1 * f2);
            }
        }
    }
    return out;
}

SymVector sym_mul(const SymVector& u, const SymVector& v) {
    SymVector out(u.size() + v.size() - 1, Rational(0));
    for (size_t i = 0; i < u.size(); ++i) {
        if (is_zero(u[i])) continue;
        for (size_t k = 0; k < v.size(); ++k) {
            if (is_zero(v[k])) continue;
            out[i + k] += u[i] * v[k];
        }
    }
    return out;
}

bool sym_is_zero(const SymVector& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

SymVector sym_scale(const Rational& c, const SymVector& v) {
    SymVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

void sym_add_scaled(SymVector& acc, const Rational& c, const SymVector& v) {
    if (acc.size() < v.size()) acc.resize(v.size(), Rational(0));
    for (size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

} // namespace smf
