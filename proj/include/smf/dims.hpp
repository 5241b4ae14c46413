#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>
#include "smf/tseries.hpp"

namespace smf {

// Isotypic multiplicities of S_k(Gamma_1[2]) under S_3:
//   a_k s[3] + b_k s[2,1] + c_k s[1^3]
// a_k: t^12/(1-t^4)(1-t^6), b_k: t^8/(1-t^2)(1-t^6), c_k: t^6/(1-t^4)(1-t^6).
struct Level2Dims {
    long a, b, c;
};
Level2Dims level2_elliptic_dims(int k);

long dim_cusp_level1(int k);            // = a_k
long dim_new_gamma0_2(int k);           // = b_k - a_k
long dim_new_gamma0_4(int k);           // = c_k

// Fricke eigenspace split of S_k(Gamma_0(2))^new, k even > 2.
struct FrickeSplit {
    long plus, minus;
};
FrickeSplit fricke_split(int k);

// Yoshida-lift multiplicities for weight (j,2), per partition of 6.
// Supported partitions: [1,1,1,1,1,1], [2,1,1,1,1], [2,2,2].
using Partition = std::vector<int>;
long yoshida_multiplicity(int j, const Partition& partition);

struct IsotypicTable {
    int j;
    std::map<std::string, long> entries; // "1^6", "2,1^4", "2^3"
};
IsotypicTable conjecture_table(int j);

// dim S_{j,7}(Gamma_2): t^12/(1-t)(1-t^3)(1-t^4)(1-t^6)
long dim_sj7(int j);
// Theorem-style series for dim S_{j,2}(Gamma_2,eps): t^12/(1-t^6)(1-t^8)(1-t^12)
long dim_sj2_eps_series(int j);

struct ConsistencyReport {
    struct Line {
        int j;
        bool series_vs_multiplicity; // (i)
        bool restriction_identity;   // (ii)
    };
    std::vector<Line> lines;
    bool all_pass = true;
};
ConsistencyReport consistency_checks(int jmax);

} // namespace smf
