#pragma once

#include <vector>
#include <string>
#include "smf/qseries.hpp"
#include "smf/qmatrix.hpp"

namespace smf {

// e4, e6, delta, eta12, E2_2, plus the auxiliary eta products used by the
// level-2/4 bases: eta1eta2_8 = (eta(t)eta(2t))^8, eta2_12 = eta(2t)^12.
QSeries1 named_qexp(const std::string& name, long prec);

// Echelonized basis of S_k(Gamma_0(N)), N in {1,2,4}. Dimensions are checked
// against the level-2 isotypic generating series.
std::vector<QSeries1> cusp_basis(int k, int N, long prec);

// a(n) -> a(pn) + p^{k-1} a(n/p), p odd prime not dividing N
QSeries1 hecke_Tp_q(const QSeries1& f, int k, int N, long p);

// matrix M with T_p(b_j) = sum_i M(i,j) b_i on the span of `basis`
QMatrix tp_matrix(const std::vector<QSeries1>& basis, int k, int N, long p);

struct NewformData {
    int k = 0;
    int N = 0;
    bool rational = false;
    QSeries1 qexp;               // Hecke-normalized expansion (rational case)
    std::vector<QSeries1> orbit; // spanning set of the orbit subspace
    QPoly t3_charpoly;           // monic char poly of T3 on the orbit
    int fricke_sign = 0;         // N=2: a2 = -sign * 2^{k/2-1}; 0 = n/a
    Rational a2;                 // U2 eigenvalue (rational on each orbit)
};

std::vector<NewformData> newforms(int k, int N, long prec = 96);

// char poly of T_p on the whole new subspace of S_k(Gamma_0(N))
QPoly newspace_charpoly(int k, int N, long p, long prec = 96);

// dim S_k(Gamma_0(N)) predicted by the isotypic series
long expected_cusp_dim(int k, int N);

} // namespace smf
