#include "oracle.hpp"

#include <algorithm>
#include <array>

#include "bounds.hpp"
#include "error.hpp"

namespace tricolor {

std::vector<Triple> all_candidate_triples(int n) {
    if (n < 0 || n > 8) fail(Errc::invalid_argument, "all_candidate_triples: n must be in [0, 8]");
    std::uint64_t side = std::uint64_t{1} << n;
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(side * side));
    for (std::uint64_t a = 0; a < side; ++a)
        for (std::uint64_t b = 0; b < side; ++b)
            out.push_back(Triple{BitVec::from_mask(n, a), BitVec::from_mask(n, b),
                                 BitVec::from_mask(n, a ^ b)});
    return out;
}

namespace {

struct Candidate {
    std::uint32_t a, b, c;
};

// DFS state over value space [0, 2^n): membership bitmasks for the chosen
// coordinates plus a multiset of off-diagonal cross sums a_i + b_j.
struct Search {
    std::vector<Candidate> cands;
    std::vector<std::size_t> chosen, best;
    std::uint64_t used_a = 0, used_b = 0, used_c = 0;
    std::array<std::uint32_t, 256> cross_count{};
    std::uint64_t nodes = 0, budget = 0;
    std::size_t ub = 0;
    bool stopped = false;

    bool feasible(const Candidate& t) const {
        if ((used_a >> t.a & 1) || (used_b >> t.b & 1) || (used_c >> t.c & 1)) return false;
        if (cross_count[t.c] != 0) return false;
        for (std::size_t i : chosen) {
            std::uint32_t x = t.a ^ cands[i].b;
            if ((used_c >> x & 1) || x == t.c) return false;
            std::uint32_t y = cands[i].a ^ t.b;
            if ((used_c >> y & 1) || y == t.c) return false;
        }
        return true;
    }

    void push(std::size_t idx) {
        const Candidate& t = cands[idx];
        for (std::size_t i : chosen) {
            ++cross_count[t.a ^ cands[i].b];
            ++cross_count[cands[i].a ^ t.b];
        }
        used_a |= std::uint64_t{1} << t.a;
        used_b |= std::uint64_t{1} << t.b;
        used_c |= std::uint64_t{1} << t.c;
        chosen.push_back(idx);
    }

    void pop() {
        std::size_t idx = chosen.back();
        chosen.pop_back();
        const Candidate& t = cands[idx];
        used_a &= ~(std::uint64_t{1} << t.a);
        used_b &= ~(std::uint64_t{1} << t.b);
        used_c &= ~(std::uint64_t{1} << t.c);
        for (std::size_t i : chosen) {
            --cross_count[t.a ^ cands[i].b];
            --cross_count[cands[i].a ^ t.b];
        }
    }

    void run(std::size_t pos) {
        if (stopped) return;
        if (budget != 0 && nodes >= budget) {
            stopped = true;
            return;
        }
        ++nodes;
        if (chosen.size() > best.size()) best = chosen;
        if (best.size() >= ub) return; // the bound is an absolute cap
        if (pos == cands.size()) return;
        if (chosen.size() + (cands.size() - pos) <= best.size()) return;
        if (feasible(cands[pos])) {
            push(pos);
            run(pos + 1);
            pop();
            if (stopped) return;
        }
        run(pos + 1);
    }
};

} // namespace

OracleResult max_tcsfs_exact(int n, std::uint64_t node_budget) {
    if (n < 0 || n > 3) fail(Errc::limit, "max_tcsfs_exact: n must be in [0, 3]");

    Search search;
    std::uint32_t side = std::uint32_t{1} << n;
    search.cands.reserve(static_cast<std::size_t>(side) * side);
    for (std::uint32_t a = 0; a < side; ++a)
        for (std::uint32_t b = 0; b < side; ++b) search.cands.push_back({a, b, a ^ b});
    search.budget = node_budget;
    std::uint64_t cap = 0;
    fits_u64(ub_pms(std::max(n, 1), 2), cap);
    search.ub = static_cast<std::size_t>(cap);
    search.run(0);

    OracleResult out;
    out.n = n;
    out.max_size = search.best.size();
    out.nodes_explored = search.nodes;
    out.proven = !search.stopped;
    out.witness.n = n;
    for (std::size_t idx : search.best) {
        const Candidate& t = search.cands[idx];
        out.witness.add(Triple{BitVec::from_mask(n, t.a), BitVec::from_mask(n, t.b),
                               BitVec::from_mask(n, t.c)});
    }
    return out;
}

} // namespace tricolor
