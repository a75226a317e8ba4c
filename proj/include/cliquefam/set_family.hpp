#pragma once

#include "cliquefam/bitset.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquefam {

/// Uniform hypergraph: a set of distinct r-subsets of [0, ground_n), each a
/// bit row. Edges are kept sorted in lex order of the ascending vertex tuple.
struct SetFamily {
    int ground_n = 0;
    int r = 0;
    std::vector<Bitset> edges;

    SetFamily() = default;
    SetFamily(int ground_n_, int r_) : ground_n(ground_n_), r(r_) {}

    std::size_t size() const { return edges.size(); }

    /// Insert preserving lex order; duplicates ignored. The bitset must have
    /// ground_n capacity and r set bits.
    void add(const Bitset& e);

    /// Sort + dedupe after bulk pushes into `edges`.
    void normalize();

    bool contains(const Bitset& e) const;

    /// Edges per vertex.
    std::vector<long long> degrees() const;
};

/// "n r m" header then m lines of sorted vertex indices.
std::string encode_family(const SetFamily& f);
SetFamily decode_family(std::istream& in);
SetFamily decode_family(const std::string& text);

enum class FranklVariant { I, II };

/// The two extremal non-trivial t-intersecting families on [0,n):
/// variant I uses S1 = {0..t-1}, S2 = {t..r}; variant II uses S = {0..t+1}
/// and keeps the r-sets meeting S in at least t+1 points.
SetFamily frankl_family(int n, int r, int t, FranklVariant variant);

} // namespace cliquefam
