#pragma once

#include "bigint.hpp"

namespace tricolor {

// Size bounds for tri-colored sum-free sets, all exact except the floating
// lower-bound formula.
struct BoundReport {
    int n = 0;
    int p = 2;
    int d = 0;             // floor((p-1)n/3)
    Int dim_l;             // monomial count at degree <= d
    Int ub_theorem;        // 3 * dim_l
    Int ub_abstract;       // 6 * C(n, floor(n/3)); meaningful only when p == 2
    double lb_formula = 0; // C(n, floor(n/3)) * 2^(-sqrt(16n/3))
};

// Number of exponent vectors alpha in {0..p-1}^n with sum <= d. d = -1 gives
// 0 and d >= (p-1)n gives p^n.
Int dim_L(int n, int d, int p);

// 3 * dim_L(n, floor((p-1)n/3), p), the matched-sequence target-set bound.
Int ub_pms(int n, int p);

// 6 * C(n, floor(n/3)), the headline constant over F_2.
Int ub_tcsfs_f2(int n);

// C(n, floor(n/3)) * 2^(-sqrt(16n/3)), the expected size the randomized
// construction guarantees.
double lb_formula(int n);

BoundReport bound_report(int n, int p);

} // namespace tricolor
