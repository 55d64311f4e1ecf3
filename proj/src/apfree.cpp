#include "apfree.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <unordered_set>

#include "modmath.hpp"

namespace tricolor {

namespace {

std::vector<bool> membership(const std::vector<std::uint64_t>& s, std::uint64_t bound,
                             const char* who) {
    std::vector<bool> in(bound, false);
    for (std::uint64_t v : s) {
        if (v >= bound)
            fail(Errc::invalid_argument,
                 std::string(who) + ": element " + std::to_string(v) + " out of range [0, " +
                     std::to_string(bound) + ")");
        if (in[v]) fail(Errc::invalid_argument, std::string(who) + ": duplicate element");
        in[v] = true;
    }
    return in;
}

} // namespace

bool is_ap_free_mod(const std::vector<std::uint64_t>& s, std::uint64_t m) {
    if (m == 0) fail(Errc::invalid_argument, "is_ap_free_mod: modulus must be positive");
    std::vector<bool> in = membership(s, m, "is_ap_free_mod");
    // For each unordered pair {x, z} solve 2y = x + z. Odd m gives one
    // candidate midpoint, even m gives zero or two.
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::uint64_t sum = add_mod(s[i], s[j], m);
            if (m % 2 == 1) {
                std::uint64_t inv2 = ((m + 1) / 2) % m;
                std::uint64_t y = mul_mod(sum, inv2, m);
                if (in[y] && y != s[i] && y != s[j]) return false;
            } else {
                if (sum % 2 != 0) continue;
                std::uint64_t y0 = sum / 2;
                std::uint64_t y1 = y0 + m / 2;
                if (y1 >= m) y1 -= m;
                if ((in[y0] && y0 != s[i] && y0 != s[j]) || (in[y1] && y1 != s[i] && y1 != s[j]))
                    return false;
            }
        }
    }
    return true;
}

bool is_ap_free_int(const std::vector<std::uint64_t>& s) {
    if (s.size() < 3) return true;
    std::uint64_t top = *std::max_element(s.begin(), s.end());
    std::vector<bool> in = membership(s, top + 1, "is_ap_free_int");
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::uint64_t sum = s[i] + s[j];
            if (sum % 2 != 0) continue;
            std::uint64_t y = sum / 2;
            if (in[y] && y != s[i] && y != s[j]) return false;
        }
    }
    return true;
}

namespace {

// Both integer constructions scan all of [0, n), so very large ranges are
// rejected up front instead of thrashing; see the README for the limits.
constexpr std::uint64_t kMaxIntRange = 10'000'000;

} // namespace

std::vector<std::uint64_t> greedy_apfree_int(std::uint64_t n) {
    if (n == 0) fail(Errc::invalid_argument, "greedy_apfree_int: n must be positive");
    if (n > kMaxIntRange)
        fail(Errc::limit, "greedy_apfree_int: N exceeds the scan limit of 10^7");
    // blocked[v] marks v = 2y - x for kept x < y, the only way a later v can
    // close a progression.
    std::vector<bool> blocked(n, false);
    std::vector<std::uint64_t> kept;
    for (std::uint64_t v = 0; v < n; ++v) {
        if (blocked[v]) continue;
        for (std::uint64_t x : kept) {
            std::uint64_t next = 2 * v - x;
            if (next < n) blocked[next] = true;
        }
        kept.push_back(v);
    }
    return kept;
}

namespace {

struct SphereSearch {
    std::uint64_t base = 0;       // 2D-1
    std::uint64_t digit_cap = 0;  // D
    int dims = 0;

    // Walks all digit vectors in {0..D-1}^d, reporting (value, squared norm).
    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(dims), 0);
        std::uint64_t value = 0;
        std::uint64_t norm = 0;
        for (;;) {
            fn(value, norm);
            int i = 0;
            std::uint64_t place = 1;
            for (; i < dims; ++i) {
                std::uint64_t d = digits[static_cast<std::size_t>(i)];
                if (d + 1 < digit_cap) {
                    digits[static_cast<std::size_t>(i)] = d + 1;
                    value += place;
                    norm += 2 * d + 1;
                    break;
                }
                digits[static_cast<std::size_t>(i)] = 0;
                value -= d * place;
                norm -= d * d;
                place *= base;
            }
            if (i == dims) return;
        }
    }
};

} // namespace

std::vector<std::uint64_t> behrend_int(std::uint64_t n) {
    if (n == 0) fail(Errc::invalid_argument, "behrend_int: n must be positive");
    if (n > kMaxIntRange)
        fail(Errc::limit, "behrend_int: N exceeds the scan limit of 10^7");
    // Dimension 1 candidate: the greedy set.
    std::vector<std::uint64_t> best = greedy_apfree_int(n);

    int d_max = static_cast<int>(std::ceil(std::sqrt(std::log2(static_cast<double>(n))))) + 2;
    for (int d = 2; d <= d_max; ++d) {
        // Largest D with (2D-1)^d <= n, found by doubling then bisecting.
        auto fits = [&](std::uint64_t dd) {
            unsigned __int128 pow = 1;
            std::uint64_t base = 2 * dd - 1;
            for (int i = 0; i < d; ++i) {
                pow *= base;
                if (pow > n) return false;
            }
            return true;
        };
        std::uint64_t lo = 1, hi = 2;
        while (fits(hi)) {
            lo = hi;
            hi *= 2;
        }
        while (lo + 1 < hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            if (fits(mid)) lo = mid; else hi = mid;
        }
        std::uint64_t cap = fits(1) ? lo : 0;
        if (cap < 2) continue;  // only the zero vector, nothing to gain

        SphereSearch search{2 * cap - 1, cap, d};
        std::uint64_t max_norm = static_cast<std::uint64_t>(d) * (cap - 1) * (cap - 1);
        std::vector<std::uint64_t> count(max_norm + 1, 0);
        search.for_each([&](std::uint64_t, std::uint64_t norm) { ++count[norm]; });

        std::uint64_t best_r = 0;
        for (std::uint64_t r = 1; r <= max_norm; ++r)
            if (count[r] > count[best_r]) best_r = r;

        if (count[best_r] > best.size()) {
            std::vector<std::uint64_t> sphere;
            sphere.reserve(count[best_r]);
            search.for_each([&](std::uint64_t value, std::uint64_t norm) {
                if (norm == best_r) sphere.push_back(value);
            });
            std::sort(sphere.begin(), sphere.end());
            best = std::move(sphere);
        }
    }
    return best;
}

ApFreeSet embed_mod(const std::vector<std::uint64_t>& s, std::uint64_t m) {
    if (m == 0 || m % 2 == 0) fail(Errc::invalid_argument, "embed_mod: modulus must be odd");
    std::uint64_t limit = (m - 1) / 2;
    for (std::uint64_t v : s)
        if (v > limit)
            fail(Errc::invalid_argument, "embed_mod: element " + std::to_string(v) +
                                             " exceeds (M-1)/2 = " + std::to_string(limit));
    ApFreeSet out;
    out.m = m;
    out.elements = s;
    std::sort(out.elements.begin(), out.elements.end());
    if (!is_ap_free_mod(out.elements, m))
        fail(Errc::verify_failed, "embed_mod: embedded set is not progression-free mod M");
    return out;
}

namespace {

// Depth-first maximum search over residues 0..m-1 in increasing order,
// include branch first, so the first maximum reached is the
// lexicographically smallest witness. blocked[w] counts how many chosen
// pairs forbid w, maintained incrementally on push/pop.
struct ExactSearch {
    std::uint64_t m;
    std::vector<std::uint64_t> chosen;
    std::vector<std::uint64_t> best;
    std::vector<std::uint32_t> blocked;

    explicit ExactSearch(std::uint64_t modulus) : m(modulus), blocked(modulus, 0) {}

    // Residues w that would form a progression with v and x, in any slot:
    // midpoint (v + x = 2w), or endpoint (w = 2v - x or w = 2x - v).
    template <typename Fn>
    void conflicts(std::uint64_t v, std::uint64_t x, Fn&& mark) const {
        std::uint64_t sum = add_mod(v, x, m);
        if (m % 2 == 1) {
            mark(mul_mod(sum, (m + 1) / 2, m));
        } else if (sum % 2 == 0) {
            mark(sum / 2);
            mark(sum / 2 + m / 2 >= m ? sum / 2 + m / 2 - m : sum / 2 + m / 2);
        }
        mark(sub_mod(mul_mod(2 % m, v, m), x, m));
        mark(sub_mod(mul_mod(2 % m, x, m), v, m));
    }

    void push(std::uint64_t v) {
        for (std::uint64_t x : chosen)
            conflicts(v, x, [&](std::uint64_t w) {
                if (w != v && w != x) ++blocked[w];
            });
        chosen.push_back(v);
    }

    void pop() {
        std::uint64_t v = chosen.back();
        chosen.pop_back();
        for (std::uint64_t x : chosen)
            conflicts(v, x, [&](std::uint64_t w) {
                if (w != v && w != x) --blocked[w];
            });
    }

    void run(std::uint64_t v) {
        if (chosen.size() + (m - v) <= best.size()) return;  // cannot beat best
        if (v == m) {
            if (chosen.size() > best.size()) best = chosen;
            return;
        }
        if (blocked[v] == 0) {
            push(v);
            run(v + 1);
            pop();
        }
        run(v + 1);
    }
};

} // namespace

ApFreeSet max_apfree_mod_exact(std::uint64_t m) {
    if (m == 0) fail(Errc::invalid_argument, "max_apfree_mod_exact: modulus must be positive");
    if (m > 40) fail(Errc::limit, "max_apfree_mod_exact: exhaustive search is limited to M <= 40");
    ExactSearch search(m);
    search.run(0);
    ApFreeSet out;
    out.m = m;
    out.elements = search.best;
    return out;
}

double elkin_bound(std::uint64_t m) {
    if (m < 2) fail(Errc::invalid_argument, "elkin_bound: M must be at least 2");
    double lg = std::log2(static_cast<double>(m));
    return std::pow(lg, 0.25) * std::exp2(-std::sqrt(8.0 * lg)) * static_cast<double>(m);
}

ApFreeMethod apfree_method_from_name(const std::string& name) {
    if (name == "behrend") return ApFreeMethod::behrend;
    if (name == "greedy") return ApFreeMethod::greedy;
    if (name == "exact") return ApFreeMethod::exact;
    fail(Errc::invalid_argument, "unknown AP-free method '" + name + "'");
}

ApFreeSet build_apfree(std::uint64_t m, ApFreeMethod method) {
    if (m == 0 || m % 2 == 0) fail(Errc::invalid_argument, "build_apfree: modulus must be odd");
    switch (method) {
    case ApFreeMethod::behrend:
        return embed_mod(behrend_int((m + 1) / 2), m);
    case ApFreeMethod::greedy:
        return embed_mod(greedy_apfree_int((m + 1) / 2), m);
    case ApFreeMethod::exact:
        return max_apfree_mod_exact(m);
    }
    fail(Errc::invalid_argument, "build_apfree: bad method");
}

} // namespace tricolor
