#include "bigint.hpp"

namespace tricolor {

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_fraction(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

static_assert(sizeof(unsigned long) == 8, "mpz_get_ui below assumes an LP64 platform");

bool fits_u64(const Int& v, std::uint64_t& out) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return false;
    out = mpz_get_ui(v.get_mpz_t());
    return true;
}

} // namespace tricolor
