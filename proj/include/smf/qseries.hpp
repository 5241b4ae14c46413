#pragma once

#include <map>
#include <string>
#include "smf/rational.hpp"

namespace smf {

// One-variable exact q-expansion with exponents in (1/D)Z, truncated:
// coefficients are guaranteed for all exponents < prec (rational prec,
// stored scaled by D).
class QSeries1 {
public:
    QSeries1() = default;
    QSeries1(long denom, long prec_scaled) : denom_(denom), prec_(prec_scaled) {}

    long denom() const { return denom_; }
    long prec_scaled() const { return prec_; }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // smallest stored exponent; prec when empty
    long order_scaled() const { return coeffs_.empty() ? prec_ : coeffs_.begin()->first; }

    void set(long exp_scaled, const Rational& c);
    void add(long exp_scaled, const Rational& c);
    Rational coeff_scaled(long exp_scaled) const;
    // coefficient of q^n (integer exponent)
    Rational coeff(long n) const { return coeff_scaled(n * denom_); }

    QSeries1 operator+(const QSeries1& o) const;
    QSeries1 operator-(const QSeries1& o) const;
    QSeries1 operator*(const QSeries1& o) const;
    QSeries1 operator*(const Rational& c) const;
    QSeries1 pow(unsigned e) const;

    // f(tau) -> f(d tau): exponents scaled by d
    QSeries1 expand_exponents(long d) const;
    // multiply by q^{e/D}
    QSeries1 shifted(long e_scaled) const;
    // convert to a common denominator multiple
    QSeries1 with_denom(long new_denom) const;
    QSeries1 truncated(long prec_scaled) const;

    bool operator==(const QSeries1& o) const;

    std::string str() const;

private:
    long denom_ = 1;
    long prec_ = 0;
    std::map<long, Rational> coeffs_;
};

} // namespace smf
