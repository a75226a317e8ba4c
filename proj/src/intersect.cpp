#include "cliquefam/intersect.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliquefam {

IntersectSpec::IntersectSpec(int r_, std::vector<int> L_) : r(r_), L(std::move(L_)) {
    if (L.empty()) throw std::invalid_argument("IntersectSpec: L empty");
    for (std::size_t i = 0; i + 1 < L.size(); ++i)
        if (L[i] >= L[i + 1]) throw std::invalid_argument("IntersectSpec: L not strictly increasing");
    if (L.front() < 0 || L.back() >= r) throw std::invalid_argument("IntersectSpec: L not within [0, r-1]");
}

bool IntersectSpec::allows(int size) const {
    return std::binary_search(L.begin(), L.end(), size);
}

IntersectSpec IntersectSpec::t_intersecting(int r, int t) {
    std::vector<int> L;
    for (int i = t; i < r; ++i) L.push_back(i);
    return IntersectSpec(r, std::move(L));
}

std::set<int> intersection_spectrum(const SetFamily& f) {
    std::set<int> spec;
    for (std::size_t i = 0; i < f.edges.size(); ++i)
        for (std::size_t j = i + 1; j < f.edges.size(); ++j)
            spec.insert(f.edges[i].intersection_count(f.edges[j]));
    return spec;
}

PredicateResult is_L_intersecting(const SetFamily& f, const IntersectSpec& spec) {
    if (f.r != spec.r) throw std::invalid_argument("is_L_intersecting: uniformity mismatch");
    PredicateResult res;
    res.vacuous = f.edges.size() <= 1;
    for (std::size_t i = 0; i < f.edges.size(); ++i)
        for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
            int c = f.edges[i].intersection_count(f.edges[j]);
            if (!spec.allows(c)) {
                res.holds = false;
                res.witness = PairWitness{i, j, f.edges[i], f.edges[j], c};
                return res;
            }
        }
    res.holds = true;
    return res;
}

PredicateResult is_t_intersecting(const SetFamily& f, int t) {
    if (t < 0 || t > f.r) throw std::invalid_argument("is_t_intersecting: need 0 <= t <= r");
    PredicateResult res;
    res.vacuous = f.edges.size() <= 1;
    for (std::size_t i = 0; i < f.edges.size(); ++i)
        for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
            int c = f.edges[i].intersection_count(f.edges[j]);
            if (c < t) {
                res.holds = false;
                res.witness = PairWitness{i, j, f.edges[i], f.edges[j], c};
                return res;
            }
        }
    res.holds = true;
    return res;
}

Bitset common_intersection(const SetFamily& f) {
    Bitset common = Bitset::full(f.ground_n);
    for (const auto& e : f.edges) common &= e;
    return common;
}

bool is_nontrivial_t_intersecting(const SetFamily& f, int t) {
    return is_t_intersecting(f, t).holds && common_intersection(f).count() < t;
}

namespace {

// DFS keeping the running union; covers of size <= `left` suffice.
bool cover_rec(const std::vector<Bitset>& edges, const Bitset& target,
               const std::vector<std::size_t>& cands, std::size_t from, Bitset uni, int left,
               std::vector<std::size_t>& chosen) {
    if (target.is_subset_of(uni)) return true;
    if (left == 0) return false;
    for (std::size_t k = from; k < cands.size(); ++k) {
        chosen.push_back(cands[k]);
        if (cover_rec(edges, target, cands, k + 1, uni | edges[cands[k]], left - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<std::size_t>> find_cover_of(const std::vector<Bitset>& edges,
                                                      std::size_t idx, int t) {
    const Bitset& a = edges[idx];
    // only edges intersecting the target can contribute
    std::vector<std::size_t> cands;
    Bitset reach(a.capacity());
    for (std::size_t j = 0; j < edges.size(); ++j)
        if (j != idx && edges[j].intersects(a)) {
            cands.push_back(j);
            reach |= edges[j];
        }
    if (!a.is_subset_of(reach)) return std::nullopt;
    std::vector<std::size_t> chosen;
    if (cover_rec(edges, a, cands, 0, Bitset(a.capacity()), t, chosen)) return chosen;
    return std::nullopt;
}

CoverFreeResult is_t_cover_free(const SetFamily& f, int t) {
    if (t < 1) throw std::invalid_argument("is_t_cover_free: t < 1");
    CoverFreeResult res;
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        if (auto cover = find_cover_of(f.edges, i, t)) {
            CoverWitness w;
            w.covered_index = i;
            w.covered = f.edges[i];
            for (std::size_t e : *cover) w.covers.push_back(f.edges[e]);
            res.holds = false;
            res.witness = std::move(w);
            return res;
        }
    }
    res.holds = true;
    return res;
}

} // namespace cliquefam
