#include "verify.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "error.hpp"

namespace tricolor {

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::diagonal_nonzero: return "diagonal-nonzero";
    case ViolationKind::cross_zero: return "cross-zero";
    case ViolationKind::pms_collision: return "pms-collision";
    }
    fail(Errc::invalid_argument, "violation_kind_name: bad kind");
}

namespace {

void check_dims(const TripleSet& s) {
    for (const Triple& t : s.triples)
        if (t.a.dim() != s.n || t.b.dim() != s.n || t.c.dim() != s.n)
            fail(Errc::invalid_argument, "verify: triple dimension does not match set dimension");
}

} // namespace

std::optional<Violation> verify_tcsfs(const TripleSet& s) {
    check_dims(s);
    std::size_t m = s.size();

    std::unordered_map<BitVec, std::vector<std::size_t>, BitVecHash> by_c;
    for (std::size_t k = 0; k < m; ++k) by_c[s.triples[k].c].push_back(k);

    // Scanning (i, j) in order and taking the smallest offending k per cell
    // yields the lexicographically smallest violating tuple overall.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            BitVec sum = xor_add(s.triples[i].a, s.triples[j].b);
            auto hit = by_c.find(sum);
            if (i != j) {
                if (hit != by_c.end())
                    return Violation{ViolationKind::cross_zero, i + 1, j + 1, hit->second.front() + 1};
                continue;
            }
            bool diagonal_bad = s.triples[i].c != sum;
            std::size_t cross_k = m;
            if (hit != by_c.end())
                for (std::size_t k : hit->second)
                    if (k != i) {
                        cross_k = k;
                        break;
                    }
            // Both candidate kinds may exist at once; the smaller k wins.
            if (diagonal_bad && (cross_k == m || i < cross_k))
                return Violation{ViolationKind::diagonal_nonzero, i + 1, i + 1, i + 1};
            if (cross_k != m)
                return Violation{ViolationKind::cross_zero, i + 1, i + 1, cross_k + 1};
        }
    }
    return std::nullopt;
}

std::optional<Violation> verify_pms(const PairSeq& p) {
    for (const auto& [a, b] : p.pairs)
        if (a.dim() != p.n || b.dim() != p.n)
            fail(Errc::invalid_argument, "verify: pair dimension does not match sequence dimension");
    std::size_t m = p.size();

    std::unordered_map<BitVec, std::size_t, BitVecHash> first_target;
    for (std::size_t i = 0; i < m; ++i) {
        BitVec t = xor_add(p.pairs[i].first, p.pairs[i].second);
        first_target.emplace(std::move(t), i); // keeps the smallest i per value
    }

    std::optional<Violation> best;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            if (j == k) continue;
            auto hit = first_target.find(xor_add(p.pairs[j].first, p.pairs[k].second));
            if (hit == first_target.end()) continue;
            Violation v{ViolationKind::pms_collision, hit->second + 1, j + 1, k + 1};
            if (!best || std::tie(v.i, v.j, v.k) < std::tie(best->i, best->j, best->k)) best = v;
        }
    }
    return best;
}

PmsReduction tcsfs_to_pms(const TripleSet& s) {
    if (auto v = verify_tcsfs(s))
        fail(Errc::invalid_argument,
             std::string("tcsfs_to_pms: input is not a valid set (") + violation_kind_name(v->kind) +
                 " at " + std::to_string(v->i) + "," + std::to_string(v->j) + "," + std::to_string(v->k) + ")");

    PmsReduction out;
    out.pairs.n = s.n;
    out.pairs.pairs.reserve(s.size());
    out.targets.reserve(s.size());
    for (const Triple& t : s.triples) {
        out.pairs.pairs.emplace_back(t.a, t.b);
        out.targets.push_back(t.c); // equals a+b on the diagonal of a valid set
    }
    std::sort(out.targets.begin(), out.targets.end());
    out.targets.erase(std::unique(out.targets.begin(), out.targets.end()), out.targets.end());
    return out;
}

} // namespace tricolor
