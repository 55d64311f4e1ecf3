#pragma once

#include <cstdint>
#include <vector>

#include "bitvec.hpp"

namespace tricolor {

struct OracleResult {
    int n = 0;
    std::size_t max_size = 0;
    TripleSet witness;
    std::uint64_t nodes_explored = 0;
    bool proven = true; // false when the node budget stopped the search
};

// All 4^n triples (a, b, a+b), ascending by (a, b). The diagonal condition
// forces c = a+b, so these are the only triples a valid set can contain.
// n <= 8.
std::vector<Triple> all_candidate_triples(int n);

// Maximum-cardinality valid set among the candidates, by depth-first search
// in candidate order with incremental cross-sum tables. n <= 3. budget = 0
// runs to completion; otherwise the search stops after that many nodes and
// reports the best set found with proven = false.
OracleResult max_tcsfs_exact(int n, std::uint64_t node_budget = 0);

} // namespace tricolor
