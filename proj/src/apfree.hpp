#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace tricolor {

// A subset of Z/MZ with no three distinct elements in arithmetic progression.
// Elements are kept strictly increasing.
struct ApFreeSet {
    std::uint64_t m = 1;
    std::vector<std::uint64_t> elements;

    std::size_t size() const noexcept { return elements.size(); }
};

// True iff no distinct x, y, z in s satisfy x + z = 2y (mod m). Works for even
// m as well since the check never divides. Throws on out-of-range elements.
bool is_ap_free_mod(const std::vector<std::uint64_t>& s, std::uint64_t m);

// Same condition over the integers.
bool is_ap_free_int(const std::vector<std::uint64_t>& s);

// Scan 0..n-1 in order and keep v unless it completes a 3-term progression
// with two kept elements. Returns a progression-free subset of [0, n).
std::vector<std::uint64_t> greedy_apfree_int(std::uint64_t n);

// Digit-vector sphere construction over [0, n). Dimensions d = 2.. are
// searched with base 2D-1 and D-1 digit cap so additions never carry; the
// best sphere of constant squared norm wins. Dimension 1 degenerates to
// singleton spheres, so it contributes the greedy set instead. Ties go to the
// smaller dimension, then the smaller radius.
std::vector<std::uint64_t> behrend_int(std::uint64_t n);

// Reinterpret an integer progression-free set in Z/MZ. Requires odd m and
// max(s) <= (m-1)/2 so that wraparound progressions cannot appear; the result
// is re-checked before it is returned.
ApFreeSet embed_mod(const std::vector<std::uint64_t>& s, std::uint64_t m);

// Exhaustive branch-and-bound maximum progression-free subset of Z/MZ,
// m <= 40. Ties resolve to the lexicographically smallest witness.
ApFreeSet max_apfree_mod_exact(std::uint64_t m);

// log2(M)^(1/4) * 2^(-sqrt(8 log2 M)) * M, the classical size guarantee for
// progression-free subsets of Z/MZ. Reported next to achieved sizes.
double elkin_bound(std::uint64_t m);

enum class ApFreeMethod { behrend, greedy, exact };

ApFreeMethod apfree_method_from_name(const std::string& name);

// Builds a progression-free subset of Z/MZ with the given method. The
// integer constructions are embedded via embed_mod with N = (m+1)/2.
ApFreeSet build_apfree(std::uint64_t m, ApFreeMethod method);

} // namespace tricolor
