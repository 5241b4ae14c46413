#include "smf/qforms.hpp"
#include "smf/dims.hpp"
#include <map>
#include <stdexcept>
#include <algorithm>

namespace smf {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Integer sigma(int k, long n) {
    Integer s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += pow_int(Integer(d), k);
        long e = n / d;
        if (e != d) s += pow_int(Integer(e), k);
    }
    return s;
}

// prod_{n>=1}(1 - q^n) via the pentagonal number theorem
QSeries1 euler_product(long prec) {
    QSeries1 p(1, prec);
    p.set(0, Rational(1));
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 >= prec && e2 >= prec) break;
        Rational sgn((k % 2) ? -1 : 1);
        p.add(e1, sgn);
        p.add(e2, sgn);
    }
    return p;
}

QSeries1 eisenstein(long prec, int power, long scale) {
    // 1 + scale * sum sigma_power(n) q^n
    QSeries1 s(1, prec);
    s.set(0, Rational(1));
    for (long n = 1; n < prec; ++n) s.set(n, Rational(scale) * Rational(sigma(power, n)));
    return s;
}

// Echelonize over Q, pivots at the smallest exponents. Drops zero rows.
std::vector<QSeries1> echelonize(std::vector<QSeries1> rows) {
    std::vector<QSeries1> basis;
    for (auto& r : rows) {
        for (const auto& b : basis) {
            if (r.is_zero()) break;
            Rational c = r.coeff_scaled(b.order_scaled());
            if (!is_zero(c)) r = r - b * c;
        }
        if (r.is_zero()) continue;
        r = r * (1 / r.coeff_scaled(r.order_scaled()));
        // keep reduced: clear this pivot from earlier rows
        for (auto& b : basis) {
            Rational c = b.coeff_scaled(r.order_scaled());
            if (!is_zero(c)) b = b - r * c;
        }
        basis.push_back(r);
    }
    std::sort(basis.begin(), basis.end(),
              [](const QSeries1& x, const QSeries1& y) { return x.order_scaled() < y.order_scaled(); });
    return basis;
}

struct BasisKey {
    int k, N;
    long prec;
    auto operator<=>(const BasisKey&) const = default;
};

} // namespace

QSeries1 named_qexp(const std::string& name, long prec) {
    if (prec < 1) throw std::invalid_argument("prec >= 1 required");
    if (name == "e4") return eisenstein(prec, 3, 240);
    if (name == "e6") return eisenstein(prec, 5, -504);
    if (name == "delta") {
        QSeries1 p = euler_product(prec);
        return p.pow(24).shifted(1).truncated(prec);
    }
    if (name == "eta12") {
        QSeries1 p = euler_product(prec);
        return p.pow(12).with_denom(2).shifted(1).truncated(2 * prec);
    }
    if (name == "E2_2") {
        // 2 E2(2t) - E2(t) = 1 + 24 sum sigma_1(n) q^n - 48 sum sigma_1(n) q^{2n}
        QSeries1 s(1, prec);
        s.set(0, Rational(1));
        for (long n = 1; n < prec; ++n) s.add(n, Rational(24) * Rational(sigma(1, n)));
        for (long n = 1; 2 * n < prec; ++n) s.add(2 * n, Rational(-48) * Rational(sigma(1, n)));
        return s;
    }
    if (name == "eta1eta2_8") {
        QSeries1 p = euler_product(prec);
        QSeries1 p2 = p.expand_exponents(2).truncated(prec);
        return (p.pow(8) * p2.pow(8)).shifted(1).truncated(prec);
    }
    if (name == "eta2_12") {
        QSeries1 p2 = euler_product(prec).expand_exponents(2).truncated(prec);
        return p2.pow(12).shifted(1).truncated(prec);
    }
    throw std::invalid_argument("unknown q-expansion name: " + name);
}

long expected_cusp_dim(int k, int N) {
    auto d = level2_elliptic_dims(k);
    switch (N) {
        case 1: return d.a;
        case 2: return d.a + d.b;              // new (b-a) plus 2a oldforms
        case 4: return d.a + 2 * d.b + d.c;    // 3a + 2(b-a) + c
        default: throw std::invalid_argument("level must be 1, 2 or 4");
    }
}

std::vector<QSeries1> cusp_basis(int k, int N, long prec) {
    if (k % 2 != 0 || k < 4) throw std::invalid_argument("cusp_basis: k even >= 4 required");
    static std::map<BasisKey, std::vector<QSeries1>> cache;
    BasisKey key{k, N, prec};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<QSeries1> rows;
    if (N == 1) {
        QSeries1 e4 = named_qexp("e4", prec);
        QSeries1 e6 = named_qexp("e6", prec);
        QSeries1 delta = named_qexp("delta", prec);
        for (int c = 1; 12 * c <= k; ++c) {
            int m = k - 12 * c;
            for (int b = 0; b <= 1; ++b) {
                if (m < 6 * b || (m - 6 * b) % 4) continue;
                int a = (m - 6 * b) / 4;
                rows.push_back(delta.pow(c) * e4.pow(a) * e6.pow(b));
            }
        }
    } else if (N == 2) {
        QSeries1 A = named_qexp("E2_2", prec);
        QSeries1 e4 = named_qexp("e4", prec);
        QSeries1 B = named_qexp("eta1eta2_8", prec);
        for (int b = 0; 8 + 4 * b <= k; ++b) {
            int rest = k - 8 - 4 * b;
            if (rest % 2) continue;
            rows.push_back(B * A.pow(rest / 2) * e4.pow(b));
        }
    } else if (N == 4) {
        QSeries1 A = named_qexp("E2_2", prec);
        QSeries1 A2 = A.expand_exponents(2).truncated(prec);
        QSeries1 G = named_qexp("eta2_12", prec);
        for (int b = 0; 6 + 2 * b <= k; ++b) {
            int a = (k - 6 - 2 * b) / 2;
            if (6 + 2 * b + 2 * a != k) continue;
            rows.push_back(G * A.pow(a) * A2.pow(b));
        }
    } else {
        throw std::invalid_argument("level must be 1, 2 or 4");
    }

    std::vector<QSeries1> basis = echelonize(std::move(rows));
    long expected = expected_cusp_dim(k, N);
    if ((long)basis.size() != expected)
        throw std::logic_error("cusp_basis dimension mismatch at k=" + std::to_string(k) +
                               ", N=" + std::to_string(N) + ": got " +
                               std::to_string(basis.size()) + ", series say " +
                               std::to_string(expected));
    cache.emplace(key, basis);
    return basis;
}

QSeries1 hecke_Tp_q(const QSeries1& f, int k, int N, long p) {
    if (!is_prime(p) || p % 2 == 0 || N % p == 0)
        throw std::invalid_argument("hecke_Tp_q: p must be an odd prime not dividing N");
    if (f.denom() != 1) throw std::invalid_argument("hecke_Tp_q: integral exponents required");
    long prec_out = f.prec_scaled() / p;
    if (prec_out < 1) throw std::invalid_argument("hecke_Tp_q: insufficient precision");
    QSeries1 r(1, prec_out);
    Rational pk1 = Rational(pow_int(Integer(p), k - 1));
    for (long n = 0; n < prec_out; ++n) {
        Rational c = f.coeff_scaled(n * p);
        if (n % p == 0) c += pk1 * f.coeff_scaled(n / p);
        r.set(n, c);
    }
    return r;
}

QMatrix tp_matrix(const std::vector<QSeries1>& basis, int k, int N, long p) {
    size_t dim = basis.size();
    if (dim == 0) return QMatrix(0, 0);
    long prec = basis[0].prec_scaled();
    for (const auto& b : basis) prec = std::min(prec, b.prec_scaled());
    long cols_prec = prec / p;
    long ncols = cols_prec - 1;
    if (ncols < (long)dim)
        throw std::invalid_argument("tp_matrix: insufficient precision");
    QMatrix A(ncols, dim);
    for (size_t j = 0; j < dim; ++j)
        for (long e = 1; e < cols_prec; ++e)
            A.at(e - 1, j) = basis[j].coeff_scaled(e);
    QMatrix M(dim, dim);
    for (size_t j = 0; j < dim; ++j) {
        QSeries1 img = hecke_Tp_q(basis[j], k, N, p);
        std::vector<Rational> rhs(ncols);
        for (long e = 1; e < cols_prec; ++e) rhs[e - 1] = img.coeff_scaled(e);
        std::vector<Rational> x;
        bool unique = false;
        if (!A.solve(rhs, x, &unique) || !unique)
            throw std::logic_error("tp_matrix: Hecke image not in span (precision or basis bug)");
        for (size_t i = 0; i < dim; ++i) M.at(i, j) = x[i];
    }
    return M;
}

namespace {

// char poly of T3 on the old subspace of S_k(Gamma_0(N))
QPoly oldspace_charpoly_T3(int k, int N, long prec) {
    QPoly p{Rational(1)};
    auto level1 = cusp_basis(k, 1, prec);
    QPoly p1 = level1.empty() ? QPoly{Rational(1)} : tp_matrix(level1, k, 1, 3).charpoly();
    int copies1 = (N == 2) ? 2 : 3;
    for (int i = 0; i < copies1; ++i) p = qpoly_mul(p, p1);
    if (N == 4) {
        QPoly p2 = newspace_charpoly(k, 2, 3, prec);
        p = qpoly_mul(p, qpoly_mul(p2, p2));
    }
    return p;
}

QMatrix poly_of_matrix(const QPoly& p, const QMatrix& M) {
    size_t n = M.rows();
    QMatrix acc(n, n);
    QMatrix pw = QMatrix::identity(n);
    for (size_t i = 0; i < p.size(); ++i) {
        if (!is_zero(p[i]))
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    acc.at(r, c) += p[i] * pw.at(r, c);
        if (i + 1 < p.size()) pw = pw * M;
    }
    return acc;
}

std::vector<QSeries1> combine(const std::vector<QSeries1>& basis, const QMatrix& cols) {
    std::vector<QSeries1> out;
    for (size_t j = 0; j < cols.cols(); ++j) {
        QSeries1 s(basis[0].denom(), basis[0].prec_scaled());
        for (size_t i = 0; i < basis.size(); ++i)
            if (!is_zero(cols.at(i, j))) s = s + basis[i] * cols.at(i, j);
        out.push_back(s);
    }
    return out;
}

} // namespace

QPoly newspace_charpoly(int k, int N, long p, long prec) {
    if (N == 1) {
        auto basis = cusp_basis(k, 1, prec);
        if (basis.empty()) return {Rational(1)};
        return tp_matrix(basis, k, 1, p).charpoly();
    }
    auto forms = newforms(k, N, prec);
    QPoly r{Rational(1)};
    for (const auto& nf : forms) {
        if (p == 3) {
            r = qpoly_mul(r, nf.t3_charpoly);
        } else {
            auto M = tp_matrix(nf.orbit, k, N, p);
            r = qpoly_mul(r, M.charpoly());
        }
    }
    return r;
}

std::vector<NewformData> newforms(int k, int N, long prec) {
    if (N != 2 && N != 4) throw std::invalid_argument("newforms: N must be 2 or 4");
    if (k % 2) throw std::invalid_argument("newforms: k must be even");
    static std::map<BasisKey, std::vector<NewformData>> cache;
    BasisKey key{k, N, prec};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<NewformData> out;
    long new_dim = (N == 2) ? dim_new_gamma0_2(k) : dim_new_gamma0_4(k);
    if (k < 4 || new_dim == 0) {
        cache.emplace(key, out);
        return out;
    }

    auto basis = cusp_basis(k, N, prec);
    QMatrix T3 = tp_matrix(basis, k, N, 3);
    QPoly p_full = T3.charpoly();
    QPoly p_old = oldspace_charpoly_T3(k, N, prec);
    QPoly rem;
    QPoly p_new = qpoly_divmod(p_full, p_old, rem);
    if (!rem.empty())
        throw std::logic_error("newforms: old charpoly does not divide full charpoly");
    if ((long)p_new.size() - 1 != new_dim)
        throw std::logic_error("newforms: new charpoly degree mismatch");
    if (qpoly_gcd(p_old, p_new).size() > 1)
        throw std::logic_error("newforms: old/new eigenvalues collide, kernel split invalid");

    // new subspace = ker p_new(T3)
    QMatrix newspace = poly_of_matrix(p_new, T3).kernel();
    if (newspace.cols() != (size_t)new_dim)
        throw std::logic_error("newforms: new subspace dimension mismatch");
    std::vector<QSeries1> new_basis = combine(basis, newspace);

    // rational eigenvalues via integer root scan within the Hasse bound
    Integer bound = 2 * pow_int(Integer(3), (k - 1) / 2 + 1);
    auto roots = integer_roots(p_new, bound);
    QPoly leftover = p_new;
    QMatrix T3new = tp_matrix(new_basis, k, N, 3);
    for (const Integer& r : roots) {
        QPoly lin{Rational(-r), Rational(1)};
        QPoly q, rr;
        q = qpoly_divmod(leftover, lin, rr);
        if (!rr.empty()) continue;
        leftover = q;
        {
            QPoly rr2;
            qpoly_divmod(leftover, lin, rr2);
            if (rr2.empty() && leftover.size() > 1)
                throw std::logic_error("newforms: repeated T3 eigenvalue on new space");
        }
        QMatrix shifted = T3new - QMatrix::identity(new_dim).scaled(Rational(r));
        QMatrix ker = shifted.kernel();
        if (ker.cols() != 1)
            throw std::logic_error("newforms: rational eigenspace not 1-dimensional");
        QSeries1 f = combine(new_basis, ker)[0];
        Rational a1 = f.coeff(1);
        if (is_zero(a1)) throw std::logic_error("newforms: eigenform with a(1)=0");
        f = f * (1 / a1);
        NewformData nf;
        nf.k = k;
        nf.N = N;
        nf.rational = true;
        nf.qexp = f;
        nf.orbit = {f};
        nf.t3_charpoly = lin;
        nf.a2 = f.coeff(2);
        if (N == 2) {
            Rational s = -nf.a2 / Rational(pow_int(Integer(2), k / 2 - 1));
            if (s != 1 && s != -1)
                throw std::logic_error("newforms: a2 violates the Fricke relation");
            nf.fricke_sign = (int)s.get_num().get_si();
        }
        out.push_back(nf);
    }

    if (leftover.size() > 1) {
        // single non-rational orbit block: ker leftover(T3) on the new space
        QMatrix ker = poly_of_matrix(leftover, T3new).kernel();
        if (ker.cols() + 1 != leftover.size())
            throw std::logic_error("newforms: orbit subspace dimension mismatch");
        NewformData nf;
        nf.k = k;
        nf.N = N;
        nf.rational = false;
        nf.orbit = combine(new_basis, ker);
        nf.t3_charpoly = leftover;
        if (N == 2) {
            // U2 acts on the orbit as a rational scalar
            QMatrix A((size_t)prec / 2 > 16 ? 16 : prec / 2 - 1, nf.orbit.size());
            size_t ncols = A.rows();
            for (size_t j = 0; j < nf.orbit.size(); ++j)
                for (size_t e = 1; e <= ncols; ++e)
                    A.at(e - 1, j) = nf.orbit[j].coeff_scaled((long)e);
            bool scalar_found = false;
            for (size_t j = 0; j < nf.orbit.size() && !scalar_found; ++j) {
                std::vector<Rational> rhs(ncols);
                for (size_t e = 1; e <= ncols; ++e)
                    rhs[e - 1] = nf.orbit[j].coeff_scaled((long)(2 * e));
                std::vector<Rational> x;
                bool unique;
                if (!A.solve(rhs, x, &unique) || !unique)
                    throw std::logic_error("newforms: U2 image not in orbit span");
                for (size_t i = 0; i < x.size(); ++i) {
                    if (i == j) continue;
                    if (!is_zero(x[i])) throw std::logic_error("newforms: U2 not scalar on orbit");
                }
                nf.a2 = x[j];
                scalar_found = true;
            }
            Rational s = -nf.a2 / Rational(pow_int(Integer(2), k / 2 - 1));
            if (s != 1 && s != -1)
                throw std::logic_error("newforms: orbit a2 violates the Fricke relation");
            nf.fricke_sign = (int)s.get_num().get_si();
        }
        out.push_back(nf);
    }

    cache.emplace(key, out);
    return out;
}

} // namespace smf
