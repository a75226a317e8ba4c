#include "cliquefam/structure.hpp"

#include "cliquefam/clique.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cliquefam {

void Partition::validate() const {
    Bitset seen(ground_n);
    for (const auto& c : cells) {
        if (c.capacity() != ground_n) throw std::invalid_argument("Partition: cell capacity mismatch");
        if (c.none()) throw std::invalid_argument("Partition: empty cell");
        if (c.intersects(seen)) throw std::invalid_argument("Partition: cells overlap");
        seen |= c;
    }
}

Bitset Partition::covered() const {
    Bitset u(ground_n);
    for (const auto& c : cells) u |= c;
    return u;
}

// --- sunflowers --------------------------------------------------------------

namespace {

struct PackingSearch {
    const std::vector<Bitset>& resid;
    std::vector<std::size_t> best;
    std::vector<std::size_t> cur;

    void rec(std::size_t pos, const Bitset& used) {
        if (cur.size() + (resid.size() - pos) <= best.size()) return;
        if (pos == resid.size()) {
            best = cur;
            return;
        }
        if (!used.intersects(resid[pos])) {
            cur.push_back(pos);
            rec(pos + 1, used | resid[pos]);
            cur.pop_back();
        }
        rec(pos + 1, used);
    }
};

} // namespace

SunflowerResult max_sunflower_with_core(const SetFamily& f, const Bitset& core) {
    SunflowerResult res;
    res.core = core;
    std::vector<Bitset> resid;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < f.edges.size(); ++i)
        if (core.is_subset_of(f.edges[i])) {
            Bitset r = f.edges[i];
            r.subtract(core);
            resid.push_back(std::move(r));
            owner.push_back(i);
        }
    if (resid.empty()) return res;

    PackingSearch search{resid, {}, {}};
    // greedy seed keeps the bound tight from the start
    {
        Bitset used(f.ground_n);
        for (std::size_t i = 0; i < resid.size(); ++i)
            if (!used.intersects(resid[i])) {
                search.best.push_back(i);
                used |= resid[i];
            }
    }
    std::vector<std::size_t> greedy = search.best;
    search.best.pop_back(); // force the search to re-prove or beat the greedy size
    search.rec(0, Bitset(f.ground_n));
    if (search.best.size() < greedy.size()) search.best = greedy;

    for (std::size_t i : search.best) res.petals.push_back(f.edges[owner[i]]);
    return res;
}

std::vector<int> high_degree_vertices(const SetFamily& f, long long threshold) {
    if (threshold < 0) throw std::invalid_argument("high_degree_vertices: threshold < 0");
    std::vector<int> out;
    auto deg = f.degrees();
    for (int v = 0; v < f.ground_n; ++v)
        if (deg[std::size_t(v)] >= threshold) out.push_back(v);
    return out;
}

std::vector<Bitset> core_collection(const SetFamily& f, int ell, long long threshold) {
    if (ell < 1) throw std::invalid_argument("core_collection: ell < 1");
    std::vector<Bitset> cands;
    for (const auto& e : f.edges) {
        std::vector<int> verts = e.to_vector();
        for_each_subset(int(verts.size()), ell, [&](const std::vector<int>& idx) {
            Bitset c(f.ground_n);
            for (int i : idx) c.set(verts[std::size_t(i)]);
            cands.push_back(std::move(c));
        });
    }
    std::sort(cands.begin(), cands.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<Bitset> out;
    for (const auto& c : cands)
        if (max_sunflower_with_core(f, c).petal_count() >= threshold) out.push_back(c);
    return out;
}

PruneResult prune_low_degree(const Graph& g, int r, long long threshold) {
    if (threshold < 0) throw std::invalid_argument("prune_low_degree: threshold < 0");
    Bitset alive = Bitset::full(g.n());
    std::vector<int> deleted;
    while (alive.any()) {
        std::vector<long long> deg(g.n(), 0);
        enumerate_cliques(g, r, alive, [&](const Bitset& c) {
            for (int v = c.find_first(); v >= 0; v = c.find_next(v)) ++deg[std::size_t(v)];
        });
        int victim = -1;
        for (int v = alive.find_first(); v >= 0; v = alive.find_next(v))
            if (deg[std::size_t(v)] < threshold) {
                victim = v;
                break;
            }
        if (victim < 0) break;
        alive.reset(victim);
        deleted.push_back(victim);
    }
    PruneResult res;
    res.kept = alive.to_vector();
    res.graph = g.induced(alive);
    res.deleted_order = std::move(deleted);
    return res;
}

Graph quotient_graph(const Graph& g, int r, const Partition& cells) {
    cells.validate();
    Graph q(int(cells.cells.size()));
    enumerate_cliques(g, r, Bitset::full(g.n()), [&](const Bitset& a) {
        std::vector<int> inside;
        for (std::size_t c = 0; c < cells.cells.size(); ++c)
            if (cells.cells[c].is_subset_of(a)) inside.push_back(int(c));
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j) q.add_edge(inside[i], inside[j]);
    });
    return q;
}

QuotientReport verify_quotient_claims(const Graph& g, int r, int ell, const Partition& cells) {
    cells.validate();
    for (const auto& c : cells.cells)
        if (c.count() != ell) throw std::invalid_argument("verify_quotient_claims: cells of unequal size");

    QuotientReport rep;
    rep.ell_divides_r = (ell > 0 && r % ell == 0);

    SetFamily h = associated_r_graph(g, r);
    rep.clique_count = mpz_class((long)h.edges.size());

    rep.cliques_are_cell_unions = true;
    for (const auto& a : h.edges) {
        Bitset uni(g.n());
        for (const auto& c : cells.cells)
            if (c.is_subset_of(a)) uni |= c;
        if (uni != a) {
            rep.cliques_are_cell_unions = false;
            rep.bad_clique = a;
            break;
        }
    }

    Graph q = quotient_graph(g, r, cells);
    if (rep.ell_divides_r) {
        int rq = r / ell;
        rep.quotient_count = count_cliques(q, rq);
        rep.counts_equal = rep.quotient_count == rep.clique_count;

        SetFamily hq = associated_r_graph(q, std::max(rq, 1));
        rep.quotient_is_01_intersecting = true;
        for (std::size_t i = 0; i < hq.edges.size() && rep.quotient_is_01_intersecting; ++i)
            for (std::size_t j = i + 1; j < hq.edges.size(); ++j) {
                int c = hq.edges[i].intersection_count(hq.edges[j]);
                if (c > 1) {
                    rep.quotient_is_01_intersecting = false;
                    rep.bad_pair = PairWitness{i, j, hq.edges[i], hq.edges[j], c};
                    break;
                }
            }
    }
    return rep;
}

AtomsResult atoms(const SetFamily& f, int d) {
    if (d < 1) throw std::invalid_argument("atoms: d < 1");
    // Refining the one-cell partition by every edge reaches its fixed point in
    // a single pass: the classes are exactly the equal-membership-pattern
    // classes, and a set is contain-or-avoid for every edge iff it stays
    // inside one class. Maximal such sets are therefore the classes.
    int m = int(f.edges.size());
    std::unordered_map<Bitset, Bitset, BitsetHash> classes; // pattern -> vertices
    for (int v = 0; v < f.ground_n; ++v) {
        Bitset pat(m);
        for (int e = 0; e < m; ++e)
            if (f.edges[std::size_t(e)].test(v)) pat.set(e);
        auto [it, fresh] = classes.try_emplace(std::move(pat), Bitset(f.ground_n));
        it->second.set(v);
    }
    std::vector<Bitset> cells;
    cells.reserve(classes.size());
    for (auto& [pat, verts] : classes) cells.push_back(verts);
    std::sort(cells.begin(), cells.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });

    AtomsResult res;
    res.atoms.ground_n = f.ground_n;
    res.leftover = Bitset(f.ground_n);
    res.covered = Bitset(f.ground_n);
    for (auto& c : cells) {
        if (c.count() >= d) {
            res.covered |= c;
            res.atoms.cells.push_back(std::move(c));
        } else {
            res.leftover |= c;
        }
    }
    return res;
}

// --- Furedi properties -------------------------------------------------------

namespace {

// lex-sorted distinct intersections of F with every member of the family
std::vector<Bitset> trace_of(const SetFamily& fstar, const Bitset& F) {
    std::vector<Bitset> out;
    for (const auto& e : fstar.edges) out.push_back(e & F);
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Is there a bijection of the edge's vertices carrying one trace onto the other?
bool traces_isomorphic(const Bitset& F1, const std::vector<Bitset>& I1, const Bitset& F2,
                       const std::vector<Bitset>& I2) {
    if (I1.size() != I2.size()) return false;
    std::vector<int> v1 = F1.to_vector(), v2 = F2.to_vector();
    if (v1.size() != v2.size()) return false;
    int k = int(v1.size());

    // profile pruning: multiset of member sizes through each vertex
    auto profile = [&](const std::vector<Bitset>& I, int v) {
        std::vector<int> p;
        for (const auto& a : I)
            if (a.test(v)) p.push_back(a.count());
        std::sort(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<int>> p1(v1.size()), p2(v2.size());
    for (int i = 0; i < k; ++i) p1[std::size_t(i)] = profile(I1, v1[std::size_t(i)]);
    for (int i = 0; i < k; ++i) p2[std::size_t(i)] = profile(I2, v2[std::size_t(i)]);

    std::vector<int> map_to(v1.size(), -1);
    std::vector<bool> used(v2.size(), false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == k) {
            for (const auto& a : I1) {
                Bitset img(F2.capacity());
                for (int j = 0; j < k; ++j)
                    if (a.test(v1[std::size_t(j)])) img.set(v2[std::size_t(map_to[std::size_t(j)])]);
                if (std::find(I2.begin(), I2.end(), img) == I2.end()) return false;
            }
            return true; // onto follows from equal cardinalities
        }
        for (int j = 0; j < k; ++j) {
            if (used[std::size_t(j)] || p1[std::size_t(i)] != p2[std::size_t(j)]) continue;
            used[std::size_t(j)] = true;
            map_to[std::size_t(i)] = j;
            if (rec(i + 1)) return true;
            used[std::size_t(j)] = false;
        }
        return false;
    };
    return rec(0);
}

} // namespace

FurediReport check_furedi_properties(const SetFamily& fstar, const IntersectSpec& spec) {
    FurediReport rep;
    std::ostringstream detail;
    std::size_t m = fstar.edges.size();
    std::vector<std::vector<Bitset>> traces(m);
    for (std::size_t i = 0; i < m; ++i) traces[i] = trace_of(fstar, fstar.edges[i]);

    // (i)
    rep.traces_isomorphic = true;
    for (std::size_t i = 1; i < m; ++i)
        if (!traces_isomorphic(fstar.edges[0], traces[0], fstar.edges[i], traces[i])) {
            rep.traces_isomorphic = false;
            detail << "(i) traces of edges 0 and " << i << " are not isomorphic; ";
            break;
        }

    // (ii), both readings; sunflower sizes cached per distinct core
    rep.sunflower_cores_strict = true;
    rep.sunflower_cores_proper = true;
    std::map<std::vector<int>, int> petal_cache;
    auto petals = [&](const Bitset& core) {
        auto key = core.to_vector();
        auto it = petal_cache.find(key);
        if (it != petal_cache.end()) return it->second;
        int p = max_sunflower_with_core(fstar, core).petal_count();
        petal_cache.emplace(std::move(key), p);
        return p;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& a : traces[i]) {
            bool is_self = a == fstar.edges[i];
            if (petals(a) < fstar.r + 1) {
                if (rep.sunflower_cores_strict) {
                    rep.sunflower_cores_strict = false;
                    detail << "(ii) core of size " << a.count() << " in trace of edge " << i
                           << " has no (r+1)-sunflower; ";
                }
                if (!is_self) rep.sunflower_cores_proper = false;
            }
        }

    // (iii)
    rep.closed_under_intersection = true;
    for (std::size_t i = 0; i < m && rep.closed_under_intersection; ++i)
        for (std::size_t a = 0; a < traces[i].size() && rep.closed_under_intersection; ++a)
            for (std::size_t b = a + 1; b < traces[i].size(); ++b) {
                Bitset inter = traces[i][a] & traces[i][b];
                if (std::find(traces[i].begin(), traces[i].end(), inter) == traces[i].end()) {
                    rep.closed_under_intersection = false;
                    detail << "(iii) trace of edge " << i << " not closed under intersection; ";
                    break;
                }
            }

    // (iv), both readings
    rep.sizes_in_L_strict = true;
    rep.sizes_in_L_proper = true;
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& a : traces[i]) {
            if (spec.allows(a.count())) continue;
            rep.sizes_in_L_strict = false;
            if (a != fstar.edges[i]) {
                if (rep.sizes_in_L_proper)
                    detail << "(iv) proper trace member of size " << a.count() << " not in L; ";
                rep.sizes_in_L_proper = false;
            }
        }

    // (v)
    std::vector<Bitset> uni;
    for (const auto& tr : traces) uni.insert(uni.end(), tr.begin(), tr.end());
    std::sort(uni.begin(), uni.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    rep.pairwise_sizes_in_L = true;
    for (std::size_t a = 0; a < uni.size() && rep.pairwise_sizes_in_L; ++a)
        for (std::size_t b = a + 1; b < uni.size(); ++b) {
            int c = uni[a].intersection_count(uni[b]);
            if (!spec.allows(c)) {
                rep.pairwise_sizes_in_L = false;
                detail << "(v) two trace members meet in " << c << " not in L; ";
                break;
            }
        }

    rep.detail = detail.str();
    return rep;
}

// --- covering families -------------------------------------------------------

CoverFamilies cover_families(const Graph& g, int r, int t, std::optional<long long> threshold) {
    if (!(r > t && t >= 1)) throw std::invalid_argument("cover_families: need r > t >= 1");
    CoverFamilies fam;
    if (threshold) {
        fam.threshold = *threshold;
    } else {
        mpz_class def = r;
        for (int i = 0; i < r - t - 2; ++i) def *= g.n();
        fam.threshold = def.fits_slong_p() ? def.get_si() : LLONG_MAX;
    }

    SetFamily h = associated_r_graph(g, r);
    for (int j = t; j <= r; ++j) {
        // candidate j-sets inside edges, deduplicated
        std::vector<Bitset> cands;
        for (const auto& e : h.edges) {
            std::vector<int> verts = e.to_vector();
            for_each_subset(int(verts.size()), j, [&](const std::vector<int>& idx) {
                Bitset c(g.n());
                for (int i : idx) c.set(verts[std::size_t(i)]);
                cands.push_back(std::move(c));
            });
        }
        std::sort(cands.begin(), cands.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

        std::vector<Bitset> tj;
        for (const auto& c : cands) {
            bool ok = true;
            for (const auto& e : h.edges)
                if (c.intersection_count(e) < t) {
                    ok = false;
                    break;
                }
            if (ok) tj.push_back(c);
        }
        fam.t_j[j] = std::move(tj);
    }

    for (int j = t + 1; j <= r; ++j) {
        std::vector<Bitset> minimal;
        for (const auto& c : fam.t_j[j]) {
            bool has_smaller = false;
            for (int k = t; k < j && !has_smaller; ++k)
                for (const auto& s : fam.t_j[k])
                    if (s.is_subset_of(c)) {
                        has_smaller = true;
                        break;
                    }
            if (!has_smaller) minimal.push_back(c);
        }
        fam.t_j_min[j] = std::move(minimal);
    }

    for (const auto& c : fam.t_j_min[t + 1]) {
        long long cnt = 0;
        for (const auto& e : h.edges)
            if (c.is_subset_of(e)) ++cnt;
        if (cnt > fam.threshold) fam.t_heavy.push_back(c);
    }
    return fam;
}

HmDecomposition hm_decomposition(const Graph& g, int r, int t, const Bitset& D) {
    if (!(t >= 1 && r >= t + 2)) throw std::invalid_argument("hm_decomposition: need t >= 1 and r >= t+2");
    if (D.count() != t + 2) throw std::invalid_argument("hm_decomposition: |D| != t+2");
    std::vector<int> dv = D.to_vector();
    for (std::size_t i = 0; i < dv.size(); ++i)
        for (std::size_t j = i + 1; j < dv.size(); ++j)
            if (!g.adjacent(dv[i], dv[j])) throw std::invalid_argument("hm_decomposition: D is not a clique");

    HmDecomposition rep;
    rep.total = count_cliques(g, r);

    Bitset n0 = Bitset::full(g.n());
    for (int v : dv) n0 &= g.neighbors(v);
    n0.subtract(D);
    rep.n0_term = count_cliques_within(g, r - t - 2, n0);

    rep.within_d_total = rep.n0_term;
    for_each_subset(t + 2, t + 1, [&](const std::vector<int>& idx) {
        Bitset ni = Bitset::full(g.n());
        for (int i : idx) ni &= g.neighbors(dv[std::size_t(i)]);
        ni.subtract(D);
        mpz_class term = count_cliques_within(g, r - t - 1, ni);
        rep.within_d_total += term;
        rep.ni_terms.push_back(std::move(term));
        rep.ni_krt_free.push_back(count_cliques_within(g, r - t, ni) == 0);
    });

    rep.equality = rep.total == rep.within_d_total;
    if (!rep.equality) {
        enumerate_cliques(g, r, Bitset::full(g.n()), [&](const Bitset& a) {
            if (!rep.violating_clique && a.intersection_count(D) <= t) rep.violating_clique = a;
        });
    }
    return rep;
}

} // namespace cliquefam
