#pragma once

#include <cstdint>
#include <random>

#include "error.hpp"

namespace tricolor {

// Arithmetic context for Z/MZ with odd M. inv2 is the inverse of 2, which
// exists exactly because M is odd; it is (M+1)/2.
struct ModContext {
    std::uint64_t m = 1;
    std::uint64_t inv2 = 0;
};

ModContext make_mod_context(std::uint64_t m);

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;  // a, b < m <= 2^63 keeps this from wrapping
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// SplitMix64 finalizer; used to derive independent per-trial generator seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Exactly uniform draw from [0, m) by masked rejection. Consumes a
// deterministic prefix of the generator stream for a given (state, m).
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t m);

} // namespace tricolor
