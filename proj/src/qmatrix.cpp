#include "smf/qmatrix.hpp"
#include <stdexcept>
#include <sstream>

namespace smf {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (is_zero(at(i, k))) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape");
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

std::vector<size_t> QMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && is_zero(at(sel, col))) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Rational inv = 1 / at(row, col);
        for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || is_zero(at(i, col))) continue;
            Rational f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t QMatrix::rank() const {
    QMatrix m = *this;
    return m.rref().size();
}

QMatrix QMatrix::kernel() const {
    QMatrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t dim = cols_ - pivots.size();
    QMatrix k(cols_, dim);
    size_t idx = 0;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        k.at(free_col, idx) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], idx) = -m.at(r, free_col);
        ++idx;
    }
    return k;
}

bool QMatrix::solve(const std::vector<Rational>& b, std::vector<Rational>& x, bool* unique) const {
    if (b.size() != rows_) throw std::invalid_argument("solve shape");
    QMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols_) return false;
    x.assign(cols_, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    if (unique) *unique = pivots.size() == cols_;
    return true;
}

std::vector<Rational> QMatrix::charpoly() const {
    if (rows_ != cols_) throw std::invalid_argument("charpoly: square matrix required");
    size_t n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1), M_{k+1} = A (M_k + c_{n-k} I)
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix M = *this;
    for (size_t k = 1; k <= n; ++k) {
        Rational tr = 0;
        for (size_t i = 0; i < n; ++i) tr += M.at(i, i);
        c[n - k] = -tr / Rational((long)k);
        if (k == n) break;
        QMatrix Mc = M;
        for (size_t i = 0; i < n; ++i) Mc.at(i, i) += c[n - k];
        M = (*this) * Mc;
    }
    return c;
}

QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return qpoly_trim(r);
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qpoly_trim(r);
}

QPoly qpoly_divmod(const QPoly& a, const QPoly& b0, QPoly& rem) {
    QPoly b = qpoly_trim(b0);
    if (b.empty()) throw std::invalid_argument("qpoly division by zero");
    rem = qpoly_trim(a);
    QPoly q;
    if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size()) {
        // the leading term cancels exactly, so rem strictly shrinks
        Rational f = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        rem = qpoly_trim(rem);
    }
    return qpoly_trim(q);
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = qpoly_trim(a);
    b = qpoly_trim(b);
    while (!b.empty()) {
        QPoly r;
        qpoly_divmod(a, b, r);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Rational inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

Rational qpoly_eval(const QPoly& p, const Rational& x) {
    Rational r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::string qpoly_str(const QPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (is_zero(p[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(p[i]) << ")";
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Integer> integer_roots(const QPoly& p0, const Integer& bound) {
    QPoly p = qpoly_trim(p0);
    std::vector<Integer> roots;
    if (p.empty()) return roots;
    // scale to integer coefficients, then scan with integer Horner
    Integer lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ip(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Rational c = p[i] * Rational(lcm);
        ip[i] = c.get_num();
    }
    for (Integer r = -bound; r <= bound; ++r) {
        Integer v = 0;
        for (size_t i = ip.size(); i-- > 0;) v = v * r + ip[i];
        if (v == 0) roots.push_back(r);
    }
    return roots;
}

} // namespace smf
