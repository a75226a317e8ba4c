#pragma once

#include "cliquefam/graph.hpp"
#include "cliquefam/intersect.hpp"
#include "cliquefam/set_family.hpp"

#include <chrono>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace cliquefam {

/// Canonical label: equal strings iff isomorphic. Individualization +
/// iterated degree refinement, minimizing the packed adjacency string over
/// the discrete orderings reached. Intended for n <= 16.
std::string canonical_form(const Graph& g);

/// Same, minimizing only over color-preserving relabellings. `colors[v]`
/// gives the initial class of v; class values need not be contiguous.
std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors);

struct SearchConfig {
    long long node_budget = -1; // negative: unlimited
    int threads = 1;
    int memo_max_edges = 12; // canonical memo applies while <= this many slots are decided
    int psi_n_cap = 10;
    long long phi_cap = 5000; // max admissible binom(n, r)
};

struct SearchResult {
    mpz_class value;
    std::optional<Graph> witness_graph;
    std::optional<SetFamily> witness_family;
    bool exhaustive = true;
    unsigned long long nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Max N(K_r, G) over n-vertex graphs whose r-cliques are L-intersecting.
/// Edge-augmentation DFS over the colex slot order; a branch dies as soon as
/// two r-cliques violate L (cliques persist under edge addition). Isomorphic
/// prefixes are deduplicated by depth-keyed colored canonical forms. The
/// returned witness is re-verified before returning.
SearchResult exact_psi(int n, int r, const std::vector<int>& L, const SearchConfig& cfg = {});

/// Max size of an n-vertex L-intersecting r-graph: maximum clique in the
/// compatibility graph on all r-subsets, branch and bound with a greedy
/// coloring bound.
SearchResult exact_phi(int n, int r, const std::vector<int>& L, const SearchConfig& cfg = {});

/// Max N(K_r, G) with H_G^r t-cover-free; same engine as exact_psi (cover
/// violations also persist under edge addition).
SearchResult exact_cover_free(int n, int r, int t, const SearchConfig& cfg = {});

} // namespace cliquefam
