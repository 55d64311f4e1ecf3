#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bitvec.hpp"

namespace tricolor {

enum class ViolationKind {
    diagonal_nonzero, // a_i + b_i + c_i != 0
    cross_zero,       // a_i + b_j + c_k = 0 off the diagonal
    pms_collision,    // a_j + b_k = t_i with j != k
};

const char* violation_kind_name(ViolationKind kind);

// Indices are 1-based, matching the i, j, k of the definitions. The reported
// tuple is the lexicographically smallest witness.
struct Violation {
    ViolationKind kind;
    std::size_t i = 0, j = 0, k = 0;
};

// Definition check for tri-colored sum-free sets: a_i + b_j + c_k = 0 exactly
// when i = j = k. Returns the first violation or nothing when valid. The
// empty set is valid.
std::optional<Violation> verify_tcsfs(const TripleSet& s);

// A candidate perfectly matched sequence: pairs sharing one dimension.
struct PairSeq {
    int n = 0;
    std::vector<std::pair<BitVec, BitVec>> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
};

// Definition check for perfectly matched sequences: a_j + b_k lands in the
// target set {a_i + b_i} only when j = k.
std::optional<Violation> verify_pms(const PairSeq& p);

struct PmsReduction {
    PairSeq pairs;
    std::vector<BitVec> targets; // distinct diagonal sums, ascending
};

// Drops the c column of a verified set. Over F_2 the diagonal sums a_i + b_i
// are exactly the c_i, so the target set has full size |S|.
PmsReduction tcsfs_to_pms(const TripleSet& s);

} // namespace tricolor
