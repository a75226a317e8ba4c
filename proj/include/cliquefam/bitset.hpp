#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cliquefam {

/// Dynamic bitset over 64-bit words. Every combinatorial object in this
/// library (adjacency row, hypergraph edge, candidate set, vertex set) is one
/// of these; the clique engine lives on word-parallel AND/popcount.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bitset of(int nbits, std::initializer_list<int> bits) {
        Bitset b(nbits);
        for (int i : bits) b.set(i);
        return b;
    }
    /// All bits in [0, nbits) set.
    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (std::size_t i = 0; i < b.w_.size(); ++i) b.w_[i] = ~0ULL;
        b.trim();
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0ULL); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    /// Complement within [0, capacity).
    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }
    /// First set bit strictly after `prev`, or -1.
    int find_next(int prev) const {
        int i = (prev + 1) >> 6;
        if (i >= int(w_.size())) return -1;
        std::uint64_t x = w_[i] & (~0ULL << ((prev + 1) & 63));
        while (true) {
            if (x) return i * 64 + __builtin_ctzll(x);
            if (++i >= int(w_.size())) return -1;
            x = w_[i];
        }
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Order of the ascending-vertex tuples: the set holding the smallest
    /// element outside the common part comes first. {0,5} < {1,2}.
    bool lex_less(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) return w_[i] & (d & -d);
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = find_first(); i >= 0; i = find_next(i)) v.push_back(i);
        return v;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(nbits_);
        for (std::uint64_t x : w_) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (1ULL << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// Visit all k-subsets of {0..n-1} in lexicographic order of the sorted
/// tuple; `fn` receives the subset as a sorted index vector it must not keep.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace cliquefam
