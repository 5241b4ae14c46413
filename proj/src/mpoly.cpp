#include "smf/mpoly.hpp"
#include <stdexcept>
#include <sstream>

namespace smf {

Monomial Monomial::from_exponents(const std::array<int, 9>& e) {
    Monomial m;
    for (int i = 0; i < 7; ++i) {
        if (e[i] < 0 || e[i] > (int)A_MASK) throw std::overflow_error("a-exponent out of range");
        m.key |= uint64_t(e[i]) << (A_BITS * i);
    }
    for (int i = 7; i < 9; ++i) {
        if (e[i] < 0 || e[i] > (int)X_MASK) throw std::overflow_error("x-exponent out of range");
        m.key |= uint64_t(e[i]) << (A_BITS * 7 + X_BITS * (i - 7));
    }
    return m;
}

std::array<int, 9> Monomial::exponents() const {
    std::array<int, 9> e;
    for (int i = 0; i < 7; ++i) e[i] = a_exp(i);
    e[7] = x1_exp();
    e[8] = x2_exp();
    return e;
}

int Monomial::deg_a() const {
    int d = 0;
    for (int i = 0; i < 7; ++i) d += a_exp(i);
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    auto e1 = exponents(), e2 = o.exponents();
    std::array<int, 9> e;
    for (int i = 0; i < 9; ++i) e[i] = e1[i] + e2[i];
    return from_exponents(e);
}

MPoly MPoly::constant(const Rational& c) {
    MPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

MPoly MPoly::variable(int idx, int exp) {
    std::array<int, 9> e{};
    e[idx] = exp;
    MPoly p;
    p.add_term(Monomial::from_exponents(e), Rational(1));
    return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m.key, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m.key);
    return it == terms_.end() ? Rational(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(Monomial{k}, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(Monomial{k}, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(Monomial{k1} * Monomial{k2}, c1 * c2);
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly r;
    if (is_zero(c)) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, c * v);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(Rational(1));
    MPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = (e >>= 1) ? b * b : b;
    }
    return r;
}

MPoly MPoly::dx1() const {
    MPoly r;
    for (const auto& [k, c] : terms_) {
        Monomial m{k};
        int e = m.x1_exp();
        if (e == 0) continue;
        auto ex = m.exponents();
        ex[7] -= 1;
        r.add_term(Monomial::from_exponents(ex), c * Rational(e));
    }
    return r;
}

MPoly MPoly::dx2() const {
    MPoly r;
    for (const auto& [k, c] : terms_) {
        Monomial m{k};
        int e = m.x2_exp();
        if (e == 0) continue;
        auto ex = m.exponents();
        ex[8] -= 1;
        r.add_term(Monomial::from_exponents(ex), c * Rational(e));
    }
    return r;
}

int MPoly::x_degree_if_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int dk = Monomial{k}.deg_x();
        if (d == -1) d = dk;
        else if (d != dk) return -1;
    }
    return d;
}

int MPoly::a_degree_if_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int dk = Monomial{k}.deg_a();
        if (d == -1) d = dk;
        else if (d != dk) return -1;
    }
    return d;
}

std::string MPoly::str() const {
    static const char* names[9] = {"a0", "a1", "a2", "a3", "a4", "a5", "a6", "x1", "x2"};
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        auto e = Monomial{k}.exponents();
        for (int i = 0; i < 9; ++i) {
            if (e[i] == 0) continue;
            os << "*" << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace smf
