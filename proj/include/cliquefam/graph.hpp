#pragma once

#include "cliquefam/bitset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cliquefam {

/// Simple undirected graph, dense bitset adjacency. Symmetric, irreflexive.
/// Construction helpers return fresh graphs; nothing here mutates a graph a
/// caller already holds.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int n() const { return n_; }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }

    void add_edge(int u, int v) {
        if (u == v) return;
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(int u, int v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    long long edge_count() const {
        long long deg = 0;
        for (const auto& row : adj_) deg += row.count();
        return deg / 2;
    }

    int degree(int v) const { return adj_[v].count(); }

    /// Induced subgraph on S, vertices relabelled by ascending original index.
    Graph induced(const Bitset& S) const {
        std::vector<int> verts = S.to_vector();
        Graph h(int(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) h.add_edge(int(i), int(j));
        return h;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

// --- constructions ---------------------------------------------------------

Graph complete(int k);
Graph empty_graph(int k);

/// Disjoint union plus all cross edges; G's vertices first.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union, G's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);

/// b vertex-disjoint copies of G.
Graph disjoint_copies(int b, const Graph& g);

/// Balanced complete t-partite graph on n vertices. Parts laid out
/// contiguously, the (n mod t) larger parts last, matching the blow-up below.
Graph turan(int n, int t);

/// Blow-up of T(m,s) replacing each vertex by K_d: s-s1 sides of floor(m/s)
/// disjoint K_d's then s1 sides of ceil(m/s), s1 = m mod s; all cross-side
/// pairs adjacent. Vertex order (side, copy, position).
Graph blown_turan(int m, int s, int d);

struct ConstructionParams {
    int n = 0, r = 0;
    std::vector<int> L;
    int s = 0;      // |L|
    int d = 0;      // common difference of L ∪ {r}
    int m = 0;      // n - l1 = m*d + lambda
    int lambda = 0; // 0 <= lambda < d
    int s1 = 0;     // s1 = m mod s
};

/// Derive (s,d,m,lambda,s1) for the AP construction; throws std::invalid_argument
/// when L ∪ {r} is not an arithmetic progression or n < l1 + s*d.
ConstructionParams ap_params(int n, int r, const std::vector<int>& L);

/// K_{l1} + blown_turan(m,s,d), padded with lambda isolated vertices so the
/// result has exactly n vertices. Requires L ∪ {r} an AP with d >= 1.
Graph extremal_ap(int n, int r, const std::vector<int>& L);

/// K_{t+2} + T(n-t-2, r-t-1).
Graph hm_extremal(int n, int r, int t);

// --- graph6 ----------------------------------------------------------------

/// Standard graph6 line (no trailing newline, no banner).
std::string encode_graph6(const Graph& g);

/// Accepts an optional '>>graph6<<' banner and trailing whitespace.
/// Throws std::invalid_argument on malformed input.
Graph decode_graph6(std::string_view s);

} // namespace cliquefam
