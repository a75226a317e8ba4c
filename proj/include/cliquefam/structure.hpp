#pragma once

#include "cliquefam/graph.hpp"
#include "cliquefam/intersect.hpp"
#include "cliquefam/set_family.hpp"

#include <gmpxx.h>
#include <map>
#include <optional>
#include <vector>

namespace cliquefam {

/// Disjoint nonempty cells over [0, ground_n); the union need not cover.
struct Partition {
    int ground_n = 0;
    std::vector<Bitset> cells;

    Partition() = default;
    explicit Partition(int n) : ground_n(n) {}

    /// Throws unless cells are nonempty, pairwise disjoint and in range.
    void validate() const;
    Bitset covered() const;
};

struct SunflowerResult {
    Bitset core;
    std::vector<Bitset> petals; // edges, pairwise intersecting exactly in core
    int petal_count() const { return int(petals.size()); }
};

/// Maximum-cardinality sunflower in F with the given core: exact maximum set
/// packing over {A \ core : core ⊆ A ∈ F}, branch and bound.
SunflowerResult max_sunflower_with_core(const SetFamily& f, const Bitset& core);

/// Vertices lying in at least `threshold` edges, ascending.
std::vector<int> high_degree_vertices(const SetFamily& f, long long threshold);

/// All ell-subsets C of edges whose maximum sunflower has >= threshold petals,
/// lex order. Only subsets of edges can core a nonempty sunflower.
std::vector<Bitset> core_collection(const SetFamily& f, int ell, long long threshold);

struct PruneResult {
    Graph graph;                   // survivors, relabelled ascending
    std::vector<int> kept;         // new index -> original vertex
    std::vector<int> deleted_order; // original vertices in removal order
};

/// Repeatedly delete the lowest-index vertex lying in fewer than `threshold`
/// r-cliques until none qualifies (possibly emptying the graph).
PruneResult prune_low_degree(const Graph& g, int r, long long threshold);

/// One vertex per cell; cells adjacent iff their union sits inside some
/// r-clique of G. Covers both the sunflower-core quotient and the atom graph.
Graph quotient_graph(const Graph& g, int r, const Partition& cells);

struct QuotientReport {
    bool cliques_are_cell_unions = false; // forces ell | r
    bool counts_equal = false;            // |H_G^r| = |H_{G'}^{r/ell}|
    bool quotient_is_01_intersecting = false;
    mpz_class clique_count;  // |H_G^r|
    mpz_class quotient_count; // |H_{G'}^{r/ell}| (0 if ell does not divide r)
    std::optional<Bitset> bad_clique;        // violates (a)
    std::optional<PairWitness> bad_pair;      // violates (c)
    bool ell_divides_r = false;
};

/// Claims behind the core-collection reduction, checked on explicit cells of
/// equal size ell. Throws on unequal cell sizes.
QuotientReport verify_quotient_claims(const Graph& g, int r, int ell, const Partition& cells);

struct AtomsResult {
    Partition atoms; // maximal sets every edge contains or avoids, size >= d
    Bitset leftover; // X0: ground vertices in no atom
    Bitset covered;  // X1: union of atoms
};

/// Partition refinement: split by every edge to a fixed point; the classes
/// are exactly the inclusion-maximal contain-or-avoid sets, and those of size
/// >= d are the atoms.
AtomsResult atoms(const SetFamily& f, int d);

struct FurediReport {
    // (i) all I(F) pairwise isomorphic under a vertex bijection of the edges
    bool traces_isomorphic = false;
    // (ii) every core in I(F) spans an (r+1)-sunflower: strict counts A = F,
    // proper does not (see the (iv) convention below)
    bool sunflower_cores_strict = false;
    bool sunflower_cores_proper = false;
    // (iii) each I(F) closed under intersection
    bool closed_under_intersection = false;
    // (iv) member sizes lie in L: the strict reading includes F itself
    // (|F| = r is never in L), the proper reading excludes it
    bool sizes_in_L_strict = false;
    bool sizes_in_L_proper = false;
    // (v) pairwise intersection sizes across the union of all I(F) lie in L
    bool pairwise_sizes_in_L = false;
    std::string detail; // first failure per property, human-readable
};

FurediReport check_furedi_properties(const SetFamily& fstar, const IntersectSpec& spec);

struct CoverFamilies {
    std::map<int, std::vector<Bitset>> t_j;     // j -> T_j, j in [t, r]
    std::map<int, std::vector<Bitset>> t_j_min; // j -> T_j' (inclusion minimal), j in [t+1, r]
    std::vector<Bitset> t_heavy;                // T''_{t+1}: in > threshold edges
    long long threshold = 0;
};

/// T_j = j-sets inside some edge meeting every edge in >= t vertices; T_j' the
/// inclusion-minimal ones; T''_{t+1} those contained in more than `threshold`
/// edges. Default threshold r * n^(r-t-2) degenerates at desk scale, so tests
/// pass explicit values.
CoverFamilies cover_families(const Graph& g, int r, int t,
                             std::optional<long long> threshold = std::nullopt);

struct HmDecomposition {
    mpz_class total;               // N(K_r, G)
    mpz_class within_d_total;      // cliques meeting D in >= t+1 vertices
    mpz_class n0_term;             // N(K_{r-t-2}, G[N^0])
    std::vector<mpz_class> ni_terms; // N(K_{r-t-1}, G[N^i]) per (t+1)-subset
    bool equality = false;         // total == within_d_total
    std::optional<Bitset> violating_clique; // some A with |A ∩ D| <= t
    std::vector<bool> ni_krt_free; // G[N^i] is K_{r-t}-free
};

/// The final counting identity of the stability proof: the decomposition
/// terms count exactly the r-cliques meeting D in >= t+1 vertices, so
/// total >= n0_term + sum(ni_terms), with equality iff no clique avoids that.
/// Throws unless D induces K_{t+2}.
HmDecomposition hm_decomposition(const Graph& g, int r, int t, const Bitset& D);

} // namespace cliquefam
