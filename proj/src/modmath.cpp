#include "modmath.hpp"

#include <bit>

namespace tricolor {

ModContext make_mod_context(std::uint64_t m) {
    if (m == 0) fail(Errc::invalid_argument, "make_mod_context: modulus must be positive");
    if (m % 2 == 0) fail(Errc::invalid_argument, "make_mod_context: modulus must be odd");
    if (m > (std::uint64_t{1} << 63))
        fail(Errc::limit, "make_mod_context: modulus exceeds 2^63");
    ModContext ctx;
    ctx.m = m;
    ctx.inv2 = ((m + 1) / 2) % m;  // M=1 collapses to 0
    return ctx;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t m) {
    if (m == 0) fail(Errc::invalid_argument, "bounded_uniform: empty range");
    if (m == 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(m - 1);
    for (;;) {
        std::uint64_t v = rng() & mask;
        if (v < m) return v;
    }
}

} // namespace tricolor
