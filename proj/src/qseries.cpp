#include "smf/qseries.hpp"
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smf {

void QSeries1::set(long e, const Rational& c) {
    if (e >= prec_) return;
    if (is_zero(c)) coeffs_.erase(e);
    else coeffs_[e] = c;
}

void QSeries1::add(long e, const Rational& c) {
    if (e >= prec_ || is_zero(c)) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) coeffs_.erase(it);
    }
}

Rational QSeries1::coeff_scaled(long e) const {
    if (e >= prec_)
        throw std::out_of_range("q-series coefficient beyond certified precision");
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

QSeries1 QSeries1::with_denom(long nd) const {
    if (nd == denom_) return *this;
    if (nd % denom_ != 0)
        throw std::invalid_argument("denominator not a multiple");
    long f = nd / denom_;
    QSeries1 r(nd, prec_ * f);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * f] = c;
    return r;
}

QSeries1 QSeries1::operator+(const QSeries1& o) const {
    long d = std::lcm(denom_, o.denom_);
    QSeries1 a = with_denom(d), b = o.with_denom(d);
    QSeries1 r(d, std::min(a.prec_, b.prec_));
    r.coeffs_ = a.coeffs_;
    for (const auto& [e, c] : b.coeffs_) {
        auto [it, inserted] = r.coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) r.coeffs_.erase(it);
        }
    }
    // prune beyond the common precision
    r.coeffs_.erase(r.coeffs_.lower_bound(r.prec_), r.coeffs_.end());
    return r;
}

QSeries1 QSeries1::operator-(const QSeries1& o) const {
    return *this + o * Rational(-1);
}

QSeries1 QSeries1::operator*(const QSeries1& o) const {
    long d = std::lcm(denom_, o.denom_);
    QSeries1 a = with_denom(d), b = o.with_denom(d);
    long prec = std::min(a.prec_ + b.order_scaled(), b.prec_ + a.order_scaled());
    QSeries1 r(d, prec);
    for (const auto& [e1, c1] : a.coeffs_)
        for (const auto& [e2, c2] : b.coeffs_) {
            if (e1 + e2 >= prec) break; // e2 ascending
            r.add(e1 + e2, c1 * c2);
        }
    return r;
}

QSeries1 QSeries1::operator*(const Rational& c) const {
    QSeries1 r(denom_, prec_);
    if (is_zero(c)) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = c * v;
    return r;
}

QSeries1 QSeries1::pow(unsigned e) const {
    if (e == 0) {
        QSeries1 one(denom_, prec_);
        one.coeffs_[0] = 1;
        return one;
    }
    QSeries1 acc;
    bool have = false;
    QSeries1 b = *this;
    unsigned k = e;
    while (k) {
        if (k & 1) {
            acc = have ? acc * b : b;
            have = true;
        }
        k >>= 1;
        if (k) b = b * b;
    }
    return acc;
}

QSeries1 QSeries1::expand_exponents(long d) const {
    QSeries1 r(denom_, prec_ * d);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * d] = c;
    return r;
}

QSeries1 QSeries1::shifted(long e_scaled) const {
    QSeries1 r(denom_, prec_ + e_scaled);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + e_scaled] = c;
    return r;
}

QSeries1 QSeries1::truncated(long prec_scaled) const {
    if (prec_scaled > prec_)
        throw std::invalid_argument("cannot extend certified precision");
    QSeries1 r(denom_, prec_scaled);
    for (const auto& [e, c] : coeffs_) {
        if (e >= prec_scaled) break;
        r.coeffs_[e] = c;
    }
    return r;
}

bool QSeries1::operator==(const QSeries1& o) const {
    long d = std::lcm(denom_, o.denom_);
    QSeries1 a = with_denom(d), b = o.with_denom(d);
    long p = std::min(a.prec_, b.prec_);
    return a.truncated(p).coeffs_ == b.truncated(p).coeffs_;
}

std::string QSeries1::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")q^";
        if (e % denom_ == 0) os << e / denom_;
        else os << "(" << e << "/" << denom_ << ")";
    }
    if (first) os << "0";
    os << " + O(q^" << prec_ << "/" << denom_ << ")";
    return os.str();
}

} // namespace smf
