#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "apfree.hpp"
#include "bigint.hpp"
#include "bitvec.hpp"
#include "modmath.hpp"

namespace tricolor {

// Random hash weights: w0 plus one residue per coordinate. w[s-1] is the
// weight of coordinate s.
struct HashWeights {
    ModContext ctx;
    std::uint64_t w0 = 0;
    std::vector<std::uint64_t> w;
};

struct ConstructionParams {
    int n = 0;                       // requested dimension
    std::uint64_t m = 0;             // modulus; 0 selects the default for n'
    std::optional<ApFreeSet> b;      // filter set; unset builds one via b_method
    std::string b_method = "greedy"; // behrend | greedy | exact; echoed into outputs
    std::uint64_t seed = 0;
    int trials = 100;
    int threads = 1;
    bool verify_trials = false; // re-check every trial's pruned set
};

struct TrialStats {
    int trial = 0; // 1-based
    std::uint64_t y = 0, y0 = 0, y1 = 0, y2 = 0, z = 0;
};

struct ConstructionResult {
    int n = 0;
    int n_prime = 0;
    std::uint64_t m = 1;
    std::string b_method;
    std::size_t b_size = 0;
    std::uint64_t seed = 0;
    std::vector<TrialStats> trials;
    int best_trial = 0; // 1-based; smallest index among the largest pruned sets
    TripleSet best;     // padded to dimension n
    Rat predicted_ey;   // |X| * |B| / M^2
};

// Largest multiple of 3 at most n; vectors are built here and zero-padded up.
int working_dimension(int n);

// Default modulus 4*C(2n'/3, n'/3) + 1 for n' >= 3 (n' = 0 uses modulus 1).
std::uint64_t choose_modulus(int n_prime);

// All triples (a, b, a+b) with wt(a) = wt(b) = n'/3 and disjoint supports,
// ascending by (a, b). Enumeration helper; sizes grow as C(n',n'/3)*C(2n'/3,n'/3),
// so n' is capped at 15 here. The trial engine never materializes this list.
std::vector<Triple> enumerate_X(int n_prime);

// n' + 1 exactly uniform residues; w0 is drawn first, then w[0..n'-1].
HashWeights sample_w(const ModContext& ctx, int n_prime, std::mt19937_64& rng);

// The three hashes. h0 is the negated dot product, which makes h1 - h0 and
// h2 - h1 agree identically on every admissible triple.
std::uint64_t hash_h0(const BitVec& a, const HashWeights& hw);
std::uint64_t hash_h1(const BitVec& b, const HashWeights& hw);
std::uint64_t hash_h2(const BitVec& c, const HashWeights& hw);

// The triples of X whose three hashes all land in b. Buckets weight-n'/3
// vectors by h0 and by h1 and pairs disjoint supports per element of b; the
// progression-freeness of b forces h0 = h1 = h2 on every survivor.
std::vector<Triple> build_Y(const HashWeights& hw, const ApFreeSet& b, int n_prime);

struct PruneResult {
    std::vector<Triple> z;
    std::uint64_t y0 = 0, y1 = 0, y2 = 0; // triples sharing an a / b / c value
};

// Removes every triple whose a, b, or c coordinate repeats within y.
PruneResult prune_to_Z(const std::vector<Triple>& y);

// Appends zero coordinates until dimension n.
TripleSet pad_to_n(const TripleSet& z, int n);

// Expected survivor count |X| * b_size / M^2, exact.
Rat expected_Y(int n_prime, std::uint64_t m, std::size_t b_size);

// Upper bound on the expected collision count: expected_y * (C(2n'/3,n'/3)-1)/M.
// Below expected_y / 4 whenever m exceeds 4*C(2n'/3,n'/3).
Rat expected_Y0_bound(int n_prime, std::uint64_t m, const Rat& expected_y);

// Runs seeded independent trials, keeping per-trial sizes and the largest
// pruned set. Identical output for any thread count.
ConstructionResult run_trials(const ConstructionParams& params);

} // namespace tricolor
