#pragma once

#include <map>
#include <array>
#include <cstdint>
#include <string>
#include "smf/rational.hpp"

namespace smf {

// Sparse exact polynomials in a0..a6, x1, x2. Exponents are packed into a
// single key: 5 bits per a_i (<= 31), 7 bits per x_i (<= 127).
struct Monomial {
    uint64_t key = 0;

    static constexpr int A_BITS = 5, X_BITS = 7;
    static constexpr uint64_t A_MASK = (1u << A_BITS) - 1;
    static constexpr uint64_t X_MASK = (1u << X_BITS) - 1;

    static Monomial from_exponents(const std::array<int, 9>& e);
    std::array<int, 9> exponents() const;

    int a_exp(int i) const { return int((key >> (A_BITS * i)) & A_MASK); }
    int x1_exp() const { return int((key >> (A_BITS * 7)) & X_MASK); }
    int x2_exp() const { return int((key >> (A_BITS * 7 + X_BITS)) & X_MASK); }

    int deg_a() const;
    int deg_x() const { return x1_exp() + x2_exp(); }

    // exponentwise sum; throws on field overflow
    Monomial operator*(const Monomial& o) const;

    auto operator<=>(const Monomial& o) const = default;
};

class MPoly {
public:
    using Map = std::map<uint64_t, Rational>;

    MPoly() = default;
    static MPoly constant(const Rational& c);
    static MPoly variable(int idx, int exp = 1); // idx 0..6 = a_i, 7 = x1, 8 = x2

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly pow(unsigned e) const;

    MPoly dx1() const;
    MPoly dx2() const;

    // -1 when not homogeneous in x1,x2
    int x_degree_if_homogeneous() const;
    // -1 when not homogeneous in a0..a6
    int a_degree_if_homogeneous() const;

    std::string str() const; // for diagnostics

private:
    Map terms_; // key -> nonzero coefficient
};

} // namespace smf
