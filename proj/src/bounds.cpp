#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"

namespace tricolor {

Int dim_L(int n, int d, int p) {
    if (n < 0) fail(Errc::invalid_argument, "dim_L: n must be nonnegative");
    if (d < -1) fail(Errc::invalid_argument, "dim_L: d must be at least -1");
    if (p < 2) fail(Errc::invalid_argument, "dim_L: p must be at least 2");
    if (d < 0) return 0;

    long full = static_cast<long>(p - 1) * n;
    long cap = std::min<long>(d, full);

    // count[s] = number of exponent vectors over the first i coordinates with
    // sum exactly s; each step convolves with (1 + x + ... + x^(p-1)) via a
    // sliding window over prefix sums.
    std::vector<Int> count(static_cast<std::size_t>(cap) + 1);
    count[0] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> prefix(count.size() + 1);
        for (std::size_t s = 0; s < count.size(); ++s) prefix[s + 1] = prefix[s] + count[s];
        for (std::size_t s = count.size(); s-- > 0;) {
            std::size_t lo = s >= static_cast<std::size_t>(p) ? s - p + 1 : 0;
            count[s] = prefix[s + 1] - prefix[lo];
        }
    }
    Int total = 0;
    for (const Int& c : count) total += c;
    return total;
}

Int ub_pms(int n, int p) {
    if (n < 1) fail(Errc::invalid_argument, "ub_pms: n must be positive");
    if (p < 2) fail(Errc::invalid_argument, "ub_pms: p must be at least 2");
    long d = static_cast<long>(p - 1) * n / 3;
    return 3 * dim_L(n, static_cast<int>(d), p);
}

Int ub_tcsfs_f2(int n) {
    if (n < 1) fail(Errc::invalid_argument, "ub_tcsfs_f2: n must be positive");
    return 6 * binomial(n, n / 3);
}

double lb_formula(int n) {
    if (n < 1) fail(Errc::invalid_argument, "lb_formula: n must be positive");
    Int binom = binomial(n, n / 3);
    // log2 of the binomial via mantissa + exponent keeps the formula finite
    // far past the range where the coefficient itself fits a double.
    long exp2_part = 0;
    double mant = mpz_get_d_2exp(&exp2_part, binom.get_mpz_t());
    double log2_binom = std::log2(mant) + static_cast<double>(exp2_part);
    return std::exp2(log2_binom - std::sqrt(16.0 * n / 3.0));
}

BoundReport bound_report(int n, int p) {
    BoundReport r;
    r.n = n;
    r.p = p;
    r.d = static_cast<int>(static_cast<long>(p - 1) * n / 3);
    r.dim_l = dim_L(n, r.d, p);
    r.ub_theorem = 3 * r.dim_l;
    r.ub_abstract = p == 2 ? ub_tcsfs_f2(n) : Int(0);
    r.lb_formula = lb_formula(n);
    return r;
}

} // namespace tricolor
