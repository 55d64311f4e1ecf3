#include "bitvec.hpp"

#include <bit>

namespace tricolor {

namespace {

void check_same_dim(const BitVec& u, const BitVec& v, const char* op) {
    if (u.dim() != v.dim())
        fail(Errc::invalid_argument, std::string(op) + ": dimension mismatch (" +
                                         std::to_string(u.dim()) + " vs " + std::to_string(v.dim()) + ")");
}

} // namespace

BitVec::BitVec(int n) {
    if (n < 0) fail(Errc::invalid_argument, "BitVec: negative dimension");
    n_ = n;
    words_.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
}

BitVec BitVec::from_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > 64) fail(Errc::invalid_argument, "BitVec::from_mask: n must be in [0, 64]");
    if (n < 64 && (mask >> n) != 0)
        fail(Errc::invalid_argument, "BitVec::from_mask: mask has bits past position n");
    BitVec v(n);
    if (n > 0) v.words_[0] = mask;
    return v;
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '1')
            v.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else if (c != '0')
            fail(Errc::parse, "BitVec: text form must contain only '0' and '1'");
    }
    return v;
}

void BitVec::set_bit(int i, bool value) {
    if (i < 0 || i >= n_) fail(Errc::invalid_argument, "BitVec::set_bit: index out of range");
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (value)
        words_[static_cast<std::size_t>(i) >> 6] |= m;
    else
        words_[static_cast<std::size_t>(i) >> 6] &= ~m;
}

std::string BitVec::to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

bool operator<(const BitVec& u, const BitVec& v) noexcept {
    if (u.n_ != v.n_) return u.n_ < v.n_;
    // Word 0 holds the lowest coordinates; compare from the top word down so
    // the order matches the integer value sum b_s 2^(s-1).
    for (std::size_t i = u.words_.size(); i-- > 0;)
        if (u.words_[i] != v.words_[i]) return u.words_[i] < v.words_[i];
    return false;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(v.dim());
    for (std::size_t i = 0; i < v.word_count(); ++i) {
        h ^= v.word(i);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
}

BitVec xor_add(const BitVec& u, const BitVec& v) {
    check_same_dim(u, v, "xor_add");
    BitVec out = u;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= v.words_[i];
    return out;
}

int hamming_weight(const BitVec& u) {
    int total = 0;
    for (std::size_t i = 0; i < u.word_count(); ++i) total += std::popcount(u.word(i));
    return total;
}

bool disjoint_supports(const BitVec& u, const BitVec& v) {
    check_same_dim(u, v, "disjoint_supports");
    for (std::size_t i = 0; i < u.word_count(); ++i)
        if ((u.word(i) & v.word(i)) != 0) return false;
    return true;
}

void TripleSet::add(Triple t) {
    if (t.a.dim() != n || t.b.dim() != n || t.c.dim() != n)
        fail(Errc::invalid_argument, "TripleSet::add: triple dimension does not match set dimension");
    triples.push_back(std::move(t));
}

} // namespace tricolor
