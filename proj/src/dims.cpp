#include "smf/dims.hpp"
#include <stdexcept>

namespace smf {

namespace {

long series_coeff(int numer_exp, std::vector<int> factors, int n) {
    if (n < 0) return 0;
    if (n < numer_exp) return 0;
    auto s = SeriesQuotient::monomial_over(numer_exp, std::move(factors));
    return (long)s.coeff(n).get_si();
}

long binom2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

} // namespace

Level2Dims level2_elliptic_dims(int k) {
    if (k < 0) throw std::invalid_argument("negative weight");
    return {
        series_coeff(12, {4, 6}, k),
        series_coeff(8, {2, 6}, k),
        series_coeff(6, {4, 6}, k),
    };
}

long dim_cusp_level1(int k) { return level2_elliptic_dims(k).a; }
long dim_new_gamma0_2(int k) {
    auto d = level2_elliptic_dims(k);
    return d.b - d.a;
}
long dim_new_gamma0_4(int k) { return level2_elliptic_dims(k).c; }

FrickeSplit fricke_split(int k) {
    if (k <= 2 || k % 2 != 0) throw std::invalid_argument("fricke_split: k even > 2 required");
    long total = dim_new_gamma0_2(k);
    long d;
    switch (k % 8) {
        case 2: d = -1; break;
        case 4:
        case 6: d = 0; break;
        default: d = 1; break; // k = 0 mod 8
    }
    if ((total - d) % 2 != 0)
        throw std::logic_error("fricke_split: parity mismatch, series bug");
    return {(total + d) / 2, (total - d) / 2};
}

long yoshida_multiplicity(int j, const Partition& partition) {
    if (j < 0 || j % 2 != 0) throw std::invalid_argument("j must be even and >= 0");
    int k = j + 2;
    if (partition == Partition{1, 1, 1, 1, 1, 1}) {
        if (k <= 2) return 0;
        auto f = fricke_split(k);
        return f.plus * f.minus;
    }
    if (partition == Partition{2, 1, 1, 1, 1}) {
        return binom2(dim_new_gamma0_4(k));
    }
    if (partition == Partition{2, 2, 2}) {
        if (k <= 2) return 0;
        auto f = fricke_split(k);
        return binom2(f.plus) + binom2(f.minus);
    }
    throw std::invalid_argument("unsupported partition");
}

IsotypicTable conjecture_table(int j) {
    if (j < 0 || j % 2 != 0) throw std::invalid_argument("j must be even and >= 0");
    IsotypicTable t;
    t.j = j;
    t.entries["1^6"] = yoshida_multiplicity(j, {1, 1, 1, 1, 1, 1});
    t.entries["2,1^4"] = yoshida_multiplicity(j, {2, 1, 1, 1, 1});
    t.entries["2^3"] = yoshida_multiplicity(j, {2, 2, 2});
    return t;
}

long dim_sj7(int j) { return series_coeff(12, {1, 3, 4, 6}, j); }
long dim_sj2_eps_series(int j) { return series_coeff(12, {6, 8, 12}, j); }

ConsistencyReport consistency_checks(int jmax) {
    if (jmax % 2 != 0) throw std::invalid_argument("jmax must be even");
    ConsistencyReport rep;
    for (int j = 0; j <= std::min(jmax, 30); j += 2) {
        ConsistencyReport::Line line;
        line.j = j;
        long mult = yoshida_multiplicity(j, {1, 1, 1, 1, 1, 1});
        line.series_vs_multiplicity = dim_sj2_eps_series(j) == mult;

        long lhs = dim_sj7(j) - mult;
        long rhs = 0;
        for (int i = 0; i <= j / 2 - 1; ++i)
            rhs += dim_cusp_level1(j + 7 - i) * dim_cusp_level1(7 + i);
        rhs += binom2(dim_cusp_level1(j / 2 + 7));
        line.restriction_identity = lhs == rhs;

        rep.lines.push_back(line);
        rep.all_pass = rep.all_pass && line.series_vs_multiplicity && line.restriction_identity;
    }
    return rep;
}

} // namespace smf
