#pragma once

#include <vector>
#include "smf/rational.hpp"

namespace smf {

// Dense exact matrix, row major. Small sizes only (basis handling).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static QMatrix identity(size_t n);
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& c) const;

    // in-place reduced row echelon form; returns pivot columns
    std::vector<size_t> rref();
    size_t rank() const;
    // kernel basis as columns of a cols x dim matrix
    QMatrix kernel() const;

    // solve A x = b; returns false when inconsistent. When the system is
    // underdetermined, free variables are set to zero and *unique = false.
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x, bool* unique = nullptr) const;

    // characteristic polynomial, monic, coefficients low-to-high
    std::vector<Rational> charpoly() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Polynomials over Q, coefficients low-to-high, no trailing zeros.
using QPoly = std::vector<Rational>;

QPoly qpoly_trim(QPoly p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
// division with remainder (b nonzero); returns quotient, sets rem
QPoly qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& rem);
QPoly qpoly_gcd(QPoly a, QPoly b); // monic gcd
Rational qpoly_eval(const QPoly& p, const Rational& x);
std::string qpoly_str(const QPoly& p, const std::string& var = "x");

// integer roots of a monic integer polynomial within [-bound, bound]
std::vector<Integer> integer_roots(const QPoly& p, const Integer& bound);

} // namespace smf
