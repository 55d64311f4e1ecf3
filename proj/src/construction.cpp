#include "construction.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "error.hpp"
#include "verify.hpp"

namespace tricolor {

namespace {

// The trial engine walks C(n', n'/3) masks per trial, so wider instances are
// rejected rather than left to run for hours; see the README for limits.
constexpr int kMaxWorkingDim = 33;
constexpr int kMaxEnumerateDim = 15;
constexpr int kMaxPadDim = 1 << 20;
constexpr int kMaxTrials = 1'000'000;
// Residue-to-bucket lookup is a flat table when the modulus is small enough,
// binary search over the sorted elements otherwise.
constexpr std::uint64_t kTableCap = std::uint64_t{1} << 22;
constexpr std::uint64_t kStreamSalt = 0x9e3779b97f4a7c15ull;

void check_weight_dims(const BitVec& v, const HashWeights& hw, const char* op) {
    if (v.dim() != static_cast<int>(hw.w.size()))
        fail(Errc::invalid_argument, std::string(op) + ": vector dimension does not match weight count");
}

// Visits all masks of popcount k over n bits in increasing order.
template <typename Fn>
void for_each_weight_k_mask(int n, int k, Fn&& fn) {
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
        fn(mask);
        std::uint64_t low = mask & -mask;
        std::uint64_t ripple = mask + low;
        mask = (((mask ^ ripple) >> 2) / low) | ripple;
    }
}

struct MaskTriple {
    std::uint64_t a, b, c;
};

struct Engine {
    int n_prime = 0;
    int k = 0;
    ModContext ctx;
    const std::vector<std::uint64_t>* b_elems = nullptr;
    std::vector<std::int32_t> table;
    bool use_table = false;

    void init(int np, const ModContext& c, const std::vector<std::uint64_t>& elems) {
        n_prime = np;
        k = np / 3;
        ctx = c;
        b_elems = &elems;
        use_table = ctx.m <= kTableCap;
        if (use_table) {
            table.assign(static_cast<std::size_t>(ctx.m), -1);
            for (std::size_t i = 0; i < elems.size(); ++i)
                table[static_cast<std::size_t>(elems[i])] = static_cast<std::int32_t>(i);
        }
    }

    int index_of(std::uint64_t r) const {
        if (use_table) return table[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(b_elems->begin(), b_elems->end(), r);
        return it != b_elems->end() && *it == r ? static_cast<int>(it - b_elems->begin()) : -1;
    }
};

struct TrialScratch {
    std::vector<std::vector<std::uint64_t>> bucket_a, bucket_b;

    explicit TrialScratch(std::size_t b_size) : bucket_a(b_size), bucket_b(b_size) {}

    void reset() {
        for (auto& v : bucket_a) v.clear();
        for (auto& v : bucket_b) v.clear();
    }
};

std::vector<MaskTriple> survivors(const Engine& eng, const HashWeights& hw, TrialScratch& scratch) {
    scratch.reset();
    std::uint64_t m = eng.ctx.m;
    for_each_weight_k_mask(eng.n_prime, eng.k, [&](std::uint64_t mask) {
        std::uint64_t dot = 0;
        for (std::uint64_t rem = mask; rem != 0; rem &= rem - 1)
            dot = add_mod(dot, hw.w[static_cast<std::size_t>(std::countr_zero(rem))], m);
        int ia = eng.index_of(neg_mod(dot, m));
        if (ia >= 0) scratch.bucket_a[static_cast<std::size_t>(ia)].push_back(mask);
        int ib = eng.index_of(mul_mod(eng.ctx.inv2, add_mod(hw.w0, dot, m), m));
        if (ib >= 0) scratch.bucket_b[static_cast<std::size_t>(ib)].push_back(mask);
    });

    // Members of a shared bucket have h0 = h1; the progression property then
    // pins h2 to the same residue, so no third hash check is needed.
    std::vector<MaskTriple> y;
    for (std::size_t bi = 0; bi < scratch.bucket_a.size(); ++bi)
        for (std::uint64_t a : scratch.bucket_a[bi])
            for (std::uint64_t b : scratch.bucket_b[bi])
                if ((a & b) == 0) y.push_back({a, b, a | b});
    return y;
}

struct MaskPrune {
    std::vector<MaskTriple> z;
    std::uint64_t y0 = 0, y1 = 0, y2 = 0;
};

MaskPrune prune_masks(const std::vector<MaskTriple>& y) {
    std::unordered_map<std::uint64_t, std::uint32_t> ca, cb, cc;
    for (const MaskTriple& t : y) {
        ++ca[t.a];
        ++cb[t.b];
        ++cc[t.c];
    }
    MaskPrune out;
    for (const MaskTriple& t : y) {
        bool ra = ca[t.a] > 1, rb = cb[t.b] > 1, rc = cc[t.c] > 1;
        out.y0 += ra;
        out.y1 += rb;
        out.y2 += rc;
        if (!ra && !rb && !rc) out.z.push_back(t);
    }
    return out;
}

TripleSet masks_to_set(const std::vector<MaskTriple>& masks, int n_prime) {
    TripleSet s;
    s.n = n_prime;
    s.triples.reserve(masks.size());
    for (const MaskTriple& t : masks)
        s.add(Triple{BitVec::from_mask(n_prime, t.a), BitVec::from_mask(n_prime, t.b),
                     BitVec::from_mask(n_prime, t.c)});
    return s;
}

BitVec pad_vec(const BitVec& v, int n) {
    BitVec out(n);
    for (int i = 0; i < v.dim(); ++i)
        if (v.bit(i)) out.set_bit(i, true);
    return out;
}

void validate_b(const ApFreeSet& b, std::uint64_t m) {
    if (b.m != m) fail(Errc::invalid_argument, "run_trials: filter set modulus does not match M");
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        if (b.elements[i] >= m) fail(Errc::invalid_argument, "run_trials: filter set element out of range");
        if (i > 0 && b.elements[i] <= b.elements[i - 1])
            fail(Errc::invalid_argument, "run_trials: filter set elements must be strictly increasing");
    }
    // The bucket pairing relies on progression-freeness; a bad set would make
    // it silently undercount, so reject instead.
    if (!is_ap_free_mod(b.elements, m))
        fail(Errc::invalid_argument, "run_trials: filter set contains a 3-term progression");
}

} // namespace

int working_dimension(int n) {
    if (n < 0) fail(Errc::invalid_argument, "working_dimension: n must be nonnegative");
    return 3 * (n / 3);
}

std::uint64_t choose_modulus(int n_prime) {
    if (n_prime < 0 || n_prime % 3 != 0)
        fail(Errc::invalid_argument, "choose_modulus: n' must be a nonnegative multiple of 3");
    if (n_prime == 0) return 1;
    int k = n_prime / 3;
    Int m = 4 * binomial(2 * k, k) + 1;
    std::uint64_t out = 0;
    if (!fits_u64(m, out) || out > (std::uint64_t{1} << 63))
        fail(Errc::limit, "choose_modulus: modulus exceeds 64 bits");
    return out;
}

std::vector<Triple> enumerate_X(int n_prime) {
    if (n_prime < 0 || n_prime % 3 != 0)
        fail(Errc::invalid_argument, "enumerate_X: n' must be a nonnegative multiple of 3");
    if (n_prime > kMaxEnumerateDim)
        fail(Errc::limit, "enumerate_X: n' exceeds the enumeration limit of 15");
    int k = n_prime / 3;

    std::vector<Triple> out;
    for_each_weight_k_mask(n_prime, k, [&](std::uint64_t a) {
        // b ranges over weight-k masks of the complement support; expanding
        // through the free-position list preserves ascending order.
        std::vector<int> free_pos;
        for (int i = 0; i < n_prime; ++i)
            if ((a >> i & 1) == 0) free_pos.push_back(i);
        for_each_weight_k_mask(static_cast<int>(free_pos.size()), k, [&](std::uint64_t packed) {
            std::uint64_t b = 0;
            for (std::uint64_t rem = packed; rem != 0; rem &= rem - 1)
                b |= std::uint64_t{1} << free_pos[static_cast<std::size_t>(std::countr_zero(rem))];
            out.push_back(Triple{BitVec::from_mask(n_prime, a), BitVec::from_mask(n_prime, b),
                                 BitVec::from_mask(n_prime, a | b)});
        });
    });
    return out;
}

HashWeights sample_w(const ModContext& ctx, int n_prime, std::mt19937_64& rng) {
    if (n_prime < 0) fail(Errc::invalid_argument, "sample_w: n' must be nonnegative");
    HashWeights hw;
    hw.ctx = ctx;
    hw.w0 = bounded_uniform(rng, ctx.m);
    hw.w.resize(static_cast<std::size_t>(n_prime));
    for (auto& wi : hw.w) wi = bounded_uniform(rng, ctx.m);
    return hw;
}

std::uint64_t hash_h0(const BitVec& a, const HashWeights& hw) {
    check_weight_dims(a, hw, "hash_h0");
    std::uint64_t dot = 0;
    for (int i = 0; i < a.dim(); ++i)
        if (a.bit(i)) dot = add_mod(dot, hw.w[static_cast<std::size_t>(i)], hw.ctx.m);
    return neg_mod(dot, hw.ctx.m);
}

std::uint64_t hash_h1(const BitVec& b, const HashWeights& hw) {
    check_weight_dims(b, hw, "hash_h1");
    std::uint64_t dot = hw.w0;
    for (int i = 0; i < b.dim(); ++i)
        if (b.bit(i)) dot = add_mod(dot, hw.w[static_cast<std::size_t>(i)], hw.ctx.m);
    return mul_mod(hw.ctx.inv2, dot, hw.ctx.m);
}

std::uint64_t hash_h2(const BitVec& c, const HashWeights& hw) {
    check_weight_dims(c, hw, "hash_h2");
    std::uint64_t dot = hw.w0;
    for (int i = 0; i < c.dim(); ++i)
        if (c.bit(i)) dot = add_mod(dot, hw.w[static_cast<std::size_t>(i)], hw.ctx.m);
    return dot;
}

std::vector<Triple> build_Y(const HashWeights& hw, const ApFreeSet& b, int n_prime) {
    if (n_prime < 0 || n_prime % 3 != 0)
        fail(Errc::invalid_argument, "build_Y: n' must be a nonnegative multiple of 3");
    if (n_prime > kMaxWorkingDim) fail(Errc::limit, "build_Y: n' exceeds the engine limit of 33");
    if (static_cast<int>(hw.w.size()) != n_prime)
        fail(Errc::invalid_argument, "build_Y: weight count does not match n'");
    validate_b(b, hw.ctx.m);

    Engine eng;
    eng.init(n_prime, hw.ctx, b.elements);
    TrialScratch scratch(b.size());
    std::vector<Triple> out;
    for (const MaskTriple& t : survivors(eng, hw, scratch))
        out.push_back(Triple{BitVec::from_mask(n_prime, t.a), BitVec::from_mask(n_prime, t.b),
                             BitVec::from_mask(n_prime, t.c)});
    return out;
}

PruneResult prune_to_Z(const std::vector<Triple>& y) {
    std::unordered_map<BitVec, std::uint32_t, BitVecHash> ca, cb, cc;
    for (const Triple& t : y) {
        ++ca[t.a];
        ++cb[t.b];
        ++cc[t.c];
    }
    PruneResult out;
    for (const Triple& t : y) {
        bool ra = ca[t.a] > 1, rb = cb[t.b] > 1, rc = cc[t.c] > 1;
        out.y0 += ra;
        out.y1 += rb;
        out.y2 += rc;
        if (!ra && !rb && !rc) out.z.push_back(t);
    }
    return out;
}

TripleSet pad_to_n(const TripleSet& z, int n) {
    if (n < z.n) fail(Errc::invalid_argument, "pad_to_n: target dimension below current");
    if (n > kMaxPadDim) fail(Errc::limit, "pad_to_n: target dimension exceeds 2^20");
    TripleSet out;
    out.n = n;
    out.triples.reserve(z.size());
    for (const Triple& t : z.triples)
        out.add(Triple{pad_vec(t.a, n), pad_vec(t.b, n), pad_vec(t.c, n)});
    return out;
}

Rat expected_Y(int n_prime, std::uint64_t m, std::size_t b_size) {
    if (n_prime < 0 || n_prime % 3 != 0)
        fail(Errc::invalid_argument, "expected_Y: n' must be a nonnegative multiple of 3");
    if (m == 0) fail(Errc::invalid_argument, "expected_Y: modulus must be positive");
    int k = n_prime / 3;
    Int x = binomial(n_prime, k) * binomial(2 * k, k);
    Int mm(static_cast<unsigned long>(m));
    Rat out(x * Int(static_cast<unsigned long>(b_size)), mm * mm);
    out.canonicalize();
    return out;
}

Rat expected_Y0_bound(int n_prime, std::uint64_t m, const Rat& expected_y) {
    if (n_prime < 0 || n_prime % 3 != 0)
        fail(Errc::invalid_argument, "expected_Y0_bound: n' must be a nonnegative multiple of 3");
    if (m == 0) fail(Errc::invalid_argument, "expected_Y0_bound: modulus must be positive");
    int k = n_prime / 3;
    Rat factor(binomial(2 * k, k) - 1, Int(static_cast<unsigned long>(m)));
    factor.canonicalize();
    Rat out = expected_y * factor;
    out.canonicalize();
    return out;
}

ConstructionResult run_trials(const ConstructionParams& params) {
    if (params.n < 1) fail(Errc::invalid_argument, "run_trials: n must be positive");
    if (params.n > kMaxPadDim) fail(Errc::limit, "run_trials: n exceeds 2^20");
    if (params.trials < 1) fail(Errc::invalid_argument, "run_trials: trials must be positive");
    if (params.trials > kMaxTrials) fail(Errc::limit, "run_trials: trials exceeds 10^6");
    if (params.threads < 1) fail(Errc::invalid_argument, "run_trials: threads must be positive");

    int n_prime = working_dimension(params.n);
    if (n_prime > kMaxWorkingDim) fail(Errc::limit, "run_trials: n' exceeds the engine limit of 33");
    int k = n_prime / 3;

    std::uint64_t m = params.m;
    ApFreeSet b;
    if (params.b) {
        b = *params.b;
        if (m == 0) m = b.m;
    } else {
        if (m == 0) m = choose_modulus(n_prime);
        b = build_apfree(m, apfree_method_from_name(params.b_method));
    }

    ModContext ctx = make_mod_context(m);
    if (n_prime >= 3 && !(Int(static_cast<unsigned long>(m)) > 4 * binomial(2 * k, k)))
        fail(Errc::invalid_argument, "run_trials: modulus must exceed 4*C(2n'/3, n'/3)");
    validate_b(b, m);

    ConstructionResult result;
    result.n = params.n;
    result.n_prime = n_prime;
    result.m = m;
    result.b_method = params.b_method;
    result.b_size = b.size();
    result.seed = params.seed;
    result.predicted_ey = expected_Y(n_prime, m, b.size());

    int total = params.trials;
    result.trials.resize(static_cast<std::size_t>(total));

    Engine eng;
    eng.init(n_prime, ctx, b.elements);

    struct Best {
        std::uint64_t z = 0;
        int trial = 0; // 0 = none yet
        std::vector<MaskTriple> masks;
    };

    int workers = std::min(params.threads, total);
    std::vector<Best> bests(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::atomic<int> next{0};

    auto work = [&](int wi) {
        try {
            TrialScratch scratch(b.size());
            Best& best = bests[static_cast<std::size_t>(wi)];
            for (;;) {
                int t = next.fetch_add(1) + 1;
                if (t > total) break;
                std::mt19937_64 rng(
                    splitmix64(params.seed ^ (kStreamSalt * static_cast<std::uint64_t>(t))));
                HashWeights hw = sample_w(ctx, n_prime, rng);
                std::vector<MaskTriple> y = survivors(eng, hw, scratch);
                MaskPrune pruned = prune_masks(y);
                if (params.verify_trials) {
                    if (auto v = verify_tcsfs(masks_to_set(pruned.z, n_prime)))
                        fail(Errc::verify_failed,
                             "run_trials: trial " + std::to_string(t) + " produced an invalid set (" +
                                 violation_kind_name(v->kind) + " at " + std::to_string(v->i) + "," +
                                 std::to_string(v->j) + "," + std::to_string(v->k) + ")");
                }
                result.trials[static_cast<std::size_t>(t - 1)] =
                    TrialStats{t, y.size(), pruned.y0, pruned.y1, pruned.y2, pruned.z.size()};
                std::uint64_t z = pruned.z.size();
                if (best.trial == 0 || z > best.z || (z == best.z && t < best.trial)) {
                    best.z = z;
                    best.trial = t;
                    best.masks = std::move(pruned.z);
                }
            }
        } catch (...) {
            errors[static_cast<std::size_t>(wi)] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(work, wi);
        for (auto& th : pool) th.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    const Best* best = nullptr;
    for (const Best& cand : bests) {
        if (cand.trial == 0) continue;
        if (!best || cand.z > best->z || (cand.z == best->z && cand.trial < best->trial)) best = &cand;
    }
    result.best_trial = best->trial;
    result.best = pad_to_n(masks_to_set(best->masks, n_prime), params.n);
    return result;
}

} // namespace tricolor
