#pragma once

#include <vector>
#include <array>
#include "smf/rational.hpp"

namespace smf {

// Coordinates of an element of Sym^j in the basis x1^{j-i} x2^i, i = 0..j.
using SymVector = std::vector<Rational>;

struct Mat2 {
    Integer a, b, c, d; // [[a,b],[c,d]]
};

// Image of v under the matrix of p(x) |-> p(M^t x) on Sym^j.
// For j = 1 this is M itself.
SymVector sym_action(const Mat2& M, int j, const SymVector& v);

// Multiplication Sym^{j1} x Sym^{j2} -> Sym^{j1+j2} in the monomial basis
// (plain polynomial product of the coordinate vectors).
SymVector sym_mul(const SymVector& u, const SymVector& v);

bool sym_is_zero(const SymVector& v);
SymVector sym_scale(const Rational& c, const SymVector& v);
void sym_add_scaled(SymVector& acc, const Rational& c, const SymVector& v);

} // namespace smf
