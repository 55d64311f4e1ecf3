#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace tricolor {

// An element of F_2^n stored as packed 64-bit words. Coordinate s of the
// usual 1-based indexing lives at bit index s-1, which is also character
// index s-1 of the text form.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n);

    // Low 'n' bits of 'mask' (n <= 64).
    static BitVec from_mask(int n, std::uint64_t mask);
    // String of '0'/'1' characters; its length determines n.
    static BitVec from_string(std::string_view text);

    int dim() const noexcept { return n_; }
    bool bit(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set_bit(int i, bool value);

    std::string to_string() const;
    std::uint64_t word(std::size_t i) const { return words_[i]; }
    std::size_t word_count() const noexcept { return words_.size(); }

    friend bool operator==(const BitVec& u, const BitVec& v) noexcept {
        return u.n_ == v.n_ && u.words_ == v.words_;
    }
    friend bool operator!=(const BitVec& u, const BitVec& v) noexcept { return !(u == v); }
    // Ordering groups by dimension first so mixed-n containers stay coherent.
    friend bool operator<(const BitVec& u, const BitVec& v) noexcept;
    friend BitVec xor_add(const BitVec& u, const BitVec& v);

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept;
};

// Coordinatewise sum in F_2^n. Throws on dimension mismatch.
BitVec xor_add(const BitVec& u, const BitVec& v);
int hamming_weight(const BitVec& u);
// True iff no coordinate is set in both vectors. Throws on dimension mismatch.
bool disjoint_supports(const BitVec& u, const BitVec& v);

// An ordered triple (a, b, c) over a common dimension.
struct Triple {
    BitVec a, b, c;
};

inline bool operator==(const Triple& s, const Triple& t) noexcept {
    return s.a == t.a && s.b == t.b && s.c == t.c;
}

// A candidate tri-colored sum-free set: triples sharing one dimension.
struct TripleSet {
    int n = 0;
    std::vector<Triple> triples;

    // Appends after checking all three dimensions against n.
    void add(Triple t);
    std::size_t size() const noexcept { return triples.size(); }
};

} // namespace tricolor
