#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "apfree.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace tricolor;

namespace {

// All subsets of [0, m) as bit masks, for exhaustive cross-checks.
std::vector<std::uint64_t> subset_elements(std::uint64_t mask) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("is_ap_free_mod examples") {
    CHECK(is_ap_free_mod({0, 1}, 7));
    CHECK_FALSE(is_ap_free_mod({1, 3, 5}, 7));  // 1 + 5 = 2*3
    CHECK_FALSE(is_ap_free_mod({0, 7, 8}, 9));  // 7 + 0 = 16 = 2*8 mod 9
    CHECK(is_ap_free_mod({0, 1, 3}, 7));
    CHECK_THROWS_AS(is_ap_free_mod({7}, 7), Error);
    CHECK_THROWS_AS(is_ap_free_mod({1}, 0), Error);
}

TEST_CASE("is_ap_free_mod agrees with the naive triple loop, exhaustive m <= 10") {
    for (std::uint64_t m = 1; m <= 10; ++m)
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
            std::vector<std::uint64_t> s = subset_elements(mask);
            CHECK(is_ap_free_mod(s, m) == testref::naive_is_ap_free_mod(s, m));
        }
}

TEST_CASE("mod check on the lower half agrees with integer AP-freeness, m <= 15") {
    for (std::uint64_t m = 3; m <= 15; m += 2) {
        std::uint64_t half = (m - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << (half + 1)); ++mask) {
            std::vector<std::uint64_t> s = subset_elements(mask);
            CHECK(is_ap_free_mod(s, m) == testref::naive_is_ap_free_int(s));
            CHECK(is_ap_free_int(s) == testref::naive_is_ap_free_int(s));
        }
    }
}

TEST_CASE("greedy construction examples") {
    CHECK(greedy_apfree_int(5) == std::vector<std::uint64_t>{0, 1, 3, 4});
    CHECK(greedy_apfree_int(10) == std::vector<std::uint64_t>{0, 1, 3, 4, 9});
    CHECK(greedy_apfree_int(1) == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(greedy_apfree_int(0), Error);
}

TEST_CASE("behrend construction examples and contract") {
    CHECK(behrend_int(1) == std::vector<std::uint64_t>{0});
    std::vector<std::uint64_t> b10 = behrend_int(10);
    CHECK(is_ap_free_int(b10));
    CHECK(b10.size() >= 4);
    for (std::uint64_t n : {2ull, 7ull, 10ull, 100ull, 1000ull, 4096ull, 100000ull}) {
        std::vector<std::uint64_t> s = behrend_int(n);
        CHECK(!s.empty());
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(s.back() < n);
        CHECK(is_ap_free_int(s));
    }
    CHECK_THROWS_AS(behrend_int(0), Error);
}

TEST_CASE("integer constructions refuse ranges past the scan limit") {
    CHECK_THROWS_AS(greedy_apfree_int(10'000'001), Error);
    CHECK_THROWS_AS(behrend_int(10'000'001), Error);
    try {
        behrend_int(10'000'001);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::limit);
    }
}

TEST_CASE("exact integer maximum dominates both constructions, N <= 25") {
    for (std::uint64_t n = 1; n <= 25; ++n) {
        std::size_t exact = testref::max_apfree_int_exact(n);
        CHECK(exact >= behrend_int(n).size());
        CHECK(exact >= greedy_apfree_int(n).size());
    }
}

TEST_CASE("embed_mod examples") {
    ApFreeSet b = embed_mod({0, 1, 3, 4, 9}, 19);
    CHECK(b.m == 19);
    CHECK(b.elements == std::vector<std::uint64_t>{0, 1, 3, 4, 9});
    CHECK(is_ap_free_mod(b.elements, b.m));
    CHECK_THROWS_AS(embed_mod({0, 1, 3, 4, 9}, 17), Error);  // 9 > (17-1)/2
    CHECK(embed_mod({0}, 3).elements == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(embed_mod({0}, 4), Error);  // even modulus
    // Cardinality never changes.
    for (std::uint64_t n : {5ull, 10ull, 20ull}) {
        std::vector<std::uint64_t> g = greedy_apfree_int(n);
        CHECK(embed_mod(g, 2 * (n - 1) + 1).size() == g.size());
    }
}

TEST_CASE("exact modular maximum examples") {
    CHECK(max_apfree_mod_exact(1).elements == std::vector<std::uint64_t>{0});
    CHECK(max_apfree_mod_exact(3).size() == 2);
    CHECK_THROWS_AS(max_apfree_mod_exact(41), Error);
}

TEST_CASE("exact modular maximum agrees with subset enumeration, m <= 12") {
    for (std::uint64_t m = 1; m <= 12; ++m) {
        std::size_t best = 0;
        std::vector<std::uint64_t> lexmin;
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
            std::vector<std::uint64_t> s = subset_elements(mask);
            if (!testref::naive_is_ap_free_mod(s, m)) continue;
            if (s.size() > best || (s.size() == best && s < lexmin)) {
                best = s.size();
                lexmin = s;
            }
        }
        ApFreeSet got = max_apfree_mod_exact(m);
        CHECK(got.m == m);
        CHECK(got.size() == best);
        CHECK(testref::naive_is_ap_free_mod(got.elements, m));
        // The witness is the lexicographically smallest maximum.
        CHECK(got.elements == lexmin);
    }
}

TEST_CASE("elkin bound values") {
    CHECK(elkin_bound(2) == doctest::Approx(0.2815714326563489).epsilon(1e-9));
    CHECK(elkin_bound(81) == doctest::Approx(0.9229017026329019).epsilon(1e-9));
    CHECK(elkin_bound(1ull << 32) == doctest::Approx(155871.75497763665).epsilon(1e-3));
    CHECK_THROWS_AS(elkin_bound(1), Error);
}

TEST_CASE("build_apfree dispatches methods and embeds at half the modulus") {
    ApFreeSet greedy81 = build_apfree(81, ApFreeMethod::greedy);
    CHECK(greedy81.m == 81);
    CHECK(greedy81.elements == std::vector<std::uint64_t>{0, 1, 3, 4, 9, 10, 12, 13, 27, 28,
                                                          30, 31, 36, 37, 39, 40});
    CHECK(is_ap_free_mod(greedy81.elements, 81));

    ApFreeSet behrend81 = build_apfree(81, ApFreeMethod::behrend);
    CHECK(behrend81.m == 81);
    CHECK(is_ap_free_mod(behrend81.elements, 81));

    ApFreeSet exact7 = build_apfree(7, ApFreeMethod::exact);
    CHECK(exact7.m == 7);
    CHECK(is_ap_free_mod(exact7.elements, 7));
    CHECK(exact7.size() == max_apfree_mod_exact(7).size());

    CHECK(apfree_method_from_name("greedy") == ApFreeMethod::greedy);
    CHECK(apfree_method_from_name("behrend") == ApFreeMethod::behrend);
    CHECK(apfree_method_from_name("exact") == ApFreeMethod::exact);
    CHECK_THROWS_AS(apfree_method_from_name("fancy"), Error);
    CHECK_THROWS_AS(build_apfree(4, ApFreeMethod::greedy), Error);
}

TEST_CASE("every constructed set passes its own freeness check") {
    for (std::uint64_t m : {1ull, 3ull, 9ull, 25ull, 81ull, 281ull, 1009ull}) {
        for (ApFreeMethod method : {ApFreeMethod::greedy, ApFreeMethod::behrend}) {
            ApFreeSet b = build_apfree(m, method);
            CHECK(b.m == m);
            CHECK(std::is_sorted(b.elements.begin(), b.elements.end()));
            CHECK(is_ap_free_mod(b.elements, m));
        }
    }
    for (std::uint64_t m = 1; m <= 30; m += 2) {
        ApFreeSet b = max_apfree_mod_exact(m);
        CHECK(is_ap_free_mod(b.elements, m));
    }
}
