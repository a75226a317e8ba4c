#pragma once

#include "cliquefam/set_family.hpp"

#include <optional>
#include <set>
#include <vector>

namespace cliquefam {

/// Uniformity r plus the admissible intersection sizes l1 < ... < ls, all in
/// [0, r-1]. Validated on construction.
struct IntersectSpec {
    int r = 0;
    std::vector<int> L;

    IntersectSpec() = default;
    IntersectSpec(int r_, std::vector<int> L_);

    int s() const { return int(L.size()); }
    bool allows(int size) const;

    /// L = [t, r-1], the t-intersecting spec.
    static IntersectSpec t_intersecting(int r, int t);
};

struct PairWitness {
    std::size_t i = 0, j = 0; // edge indices, i < j, lowest lex pair
    Bitset a, b;
    int size = 0; // |a ∩ b|
};

struct PredicateResult {
    bool holds = false;
    bool vacuous = false; // |F| <= 1, nothing to compare
    std::optional<PairWitness> witness;
};

/// { |A ∩ B| : A != B in F }. Empty when |F| <= 1.
std::set<int> intersection_spectrum(const SetFamily& f);

/// Short-circuits on the first (lowest-index) violating pair; the spectrum
/// above is the exhaustive cross-check. Throws on uniformity mismatch.
PredicateResult is_L_intersecting(const SetFamily& f, const IntersectSpec& spec);

PredicateResult is_t_intersecting(const SetFamily& f, int t);

/// Intersection of all edges; the full ground set when F is empty.
Bitset common_intersection(const SetFamily& f);

/// t-intersecting with common intersection of size < t.
bool is_nontrivial_t_intersecting(const SetFamily& f, int t);

struct CoverWitness {
    std::size_t covered_index = 0;
    Bitset covered;
    std::vector<Bitset> covers;
};

struct CoverFreeResult {
    bool holds = false;
    std::optional<CoverWitness> witness;
};

/// No edge lies in the union of at most t other edges. The "at most" reading
/// keeps the property monotone in t for families with fewer than t+1 edges;
/// it coincides with unions of exactly t others whenever |F| > t.
CoverFreeResult is_t_cover_free(const SetFamily& f, int t);

/// Indices of at most t edges (all != idx) whose union contains edges[idx],
/// if such a cover exists. Shared by is_t_cover_free and the search engines.
std::optional<std::vector<std::size_t>> find_cover_of(const std::vector<Bitset>& edges,
                                                      std::size_t idx, int t);

} // namespace cliquefam
