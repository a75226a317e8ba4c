#include "cliquefam/acceptance.hpp"

#include "cliquefam/bounds.hpp"
#include "cliquefam/clique.hpp"
#include "cliquefam/graph.hpp"
#include "cliquefam/intersect.hpp"
#include "cliquefam/search.hpp"
#include "cliquefam/structure.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cliquefam::accept {

namespace {

using Clock = std::chrono::steady_clock;

// All AP-with-r sets for a given r: one per (s,d) with s*d <= r, l1 = r - s*d.
std::vector<std::vector<int>> ap_sets(int r) {
    std::vector<std::vector<int>> out;
    for (int d = 1; d <= r; ++d)
        for (int s = 1; s * d <= r; ++s) {
            int l1 = r - s * d;
            std::vector<int> L;
            for (int i = 0; i < s; ++i) L.push_back(l1 + i * d);
            out.push_back(std::move(L));
        }
    return out;
}

// Independent oracle: test all binom(n,r) subsets for pairwise adjacency.
long long naive_clique_count(const Graph& g, int r) {
    if (r == 0) return 1;
    long long cnt = 0;
    for_each_subset(g.n(), r, [&](const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (!g.adjacent(idx[i], idx[j])) return;
        ++cnt;
    });
    return cnt;
}

struct Check {
    std::ostringstream log;
    long long checked = 0;
    bool ok = true;

    template <class A, class B>
    void eq(const A& a, const B& b, const std::string& what) {
        ++checked;
        if (!(a == b)) {
            ok = false;
            log << what << ": " << a << " != " << b << "; ";
        }
    }
    void require(bool cond, const std::string& what) {
        ++checked;
        if (!cond) {
            ok = false;
            log << what << "; ";
        }
    }
};

Row finish(const std::string& name, Check& c, Clock::time_point t0) {
    Row row;
    row.name = name;
    row.pass = c.ok;
    std::ostringstream d;
    d << c.checked << " checks";
    std::string extra = c.log.str();
    if (!extra.empty()) d << "; " << extra;
    row.detail = d.str();
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return row;
}

Row c1_construction_formula(int threads) {
    auto t0 = Clock::now();
    Check c;
    for (int r = 2; r <= 6; ++r)
        for (const auto& L : ap_sets(r)) {
            int s = int(L.size()), d = r - L.back(), l1 = L.front();
            for (int n = l1 + s * d; n <= 14; ++n) {
                mpz_class built = count_cliques(extremal_ap(n, r, L), r, threads);
                mpq_class formula = ap_exact_value(n, r, L).value;
                mpz_class direct = turan_clique_count((n - l1) / d, s, s);
                std::ostringstream tag;
                tag << "n=" << n << " r=" << r << " s=" << s << " d=" << d;
                c.eq(mpq_class(built), formula, "construction vs formula at " + tag.str());
                c.eq(built, direct, "formula vs turan count at " + tag.str());
            }
        }
    c.eq(count_cliques(extremal_ap(8, 4, {0, 2}), 4), mpz_class(4), "spot value N(K4)");
    c.eq(count_cliques(extremal_ap(9, 5, {1, 3}), 5), mpz_class(4), "spot value N(K5)");
    return finish("1-construction-formula-identities", c, t0);
}

Row c2_hm_identity(int threads) {
    auto t0 = Clock::now();
    Check c;
    for (int r = 3; r <= 6; ++r)
        for (int t = 1; t <= r - 2; ++t)
            for (int n = t + 2; n <= 14; ++n) {
                mpz_class built = count_cliques(hm_extremal(n, r, t), r, threads);
                std::ostringstream tag;
                tag << "n=" << n << " r=" << r << " t=" << t;
                c.eq(mpq_class(built), hm_value(n, r, t).value, "hm identity at " + tag.str());
            }
    c.eq(count_cliques(hm_extremal(9, 3, 1), 3), mpz_class(19), "spot value n=9 r=3 t=1");
    c.eq(count_cliques(hm_extremal(9, 4, 1), 4), mpz_class(33), "spot value n=9 r=4 t=1");
    return finish("2-hm-identity", c, t0);
}

Row c3_construction_properties(int) {
    auto t0 = Clock::now();
    Check c;
    for (int r = 2; r <= 6; ++r)
        for (const auto& L : ap_sets(r)) {
            int s = int(L.size()), d = r - L.back(), l1 = L.front();
            for (int n = l1 + s * d; n <= 14; ++n) {
                SetFamily h = associated_r_graph(extremal_ap(n, r, L), r);
                c.require(is_L_intersecting(h, IntersectSpec(r, L)).holds,
                          "extremal_ap not L-intersecting at n=" + std::to_string(n) +
                              " r=" + std::to_string(r));
            }
        }
    for (int r = 3; r <= 6; ++r)
        for (int t = 1; t <= r - 2; ++t)
            for (int n = r + 1; n <= 14; ++n) {
                SetFamily h = associated_r_graph(hm_extremal(n, r, t), r);
                c.require(is_nontrivial_t_intersecting(h, t),
                          "hm_extremal not non-trivial t-intersecting at n=" + std::to_string(n) +
                              " r=" + std::to_string(r) + " t=" + std::to_string(t));
            }
    for (int r = 2; r <= 6; ++r)
        for (int t = 1; t <= r - 1; ++t)
            for (int n = r; n <= 14; ++n) {
                Graph g = join(complete(t), turan(n - t, r - t));
                SetFamily h = associated_r_graph(g, r);
                c.require(is_t_intersecting(h, t).holds && common_intersection(h).count() >= t,
                          "EKR graph not trivially t-intersecting at n=" + std::to_string(n) +
                              " r=" + std::to_string(r) + " t=" + std::to_string(t));
            }
    return finish("3-construction-properties", c, t0);
}

Row c4_oracle_equivalence(int threads, unsigned seed) {
    (void)threads;
    auto t0 = Clock::now();
    Check c;
    std::mt19937 rng(seed);
    for (int i = 0; i < 500; ++i) {
        int n = 1 + int(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        for (int r = 0; r <= 5; ++r)
            c.eq(count_cliques(g, r), mpz_class((long)naive_clique_count(g, r)),
                 "count mismatch, graph " + std::to_string(i) + " r=" + std::to_string(r));
    }
    return finish("4-clique-count-oracle", c, t0);
}

Row c5_ekr_phi(int) {
    auto t0 = Clock::now();
    Check c;
    const long long expected[] = {10, 15, 21, 28};
    for (int n = 6; n <= 9; ++n) {
        SearchResult res = exact_phi(n, 3, {1, 2});
        c.eq(res.value, mpz_class((long)expected[n - 6]), "phi(n,3,{1,2}) at n=" + std::to_string(n));
        c.require(res.exhaustive, "phi not exhaustive at n=" + std::to_string(n));
    }
    return finish("5-ekr-phi-values", c, t0);
}

Row c6_psi_sandwich(int threads) {
    auto t0 = Clock::now();
    Check c;
    SearchConfig cfg;
    cfg.threads = threads;

    SearchResult base = exact_psi(5, 3, {1, 2}, cfg);
    c.eq(base.value, mpz_class(10), "psi(5,3,{1,2})");

    SearchResult mid = exact_psi(8, 4, {0, 2}, cfg);
    c.require(mid.exhaustive, "psi(8,4,{0,2}) not exhaustive");
    c.require(mid.value >= 4, "psi(8,4,{0,2}) below construction value");
    mpq_class ap = ap_exact_value(8, 4, {0, 2}).value;
    c.log << "psi(8,4,{0,2})=" << mid.value << ", ap formula=" << ap
          << ", gap=" << mpq_class(mid.value) - ap << "; ";

    for (int r = 2; r <= 6; ++r)
        for (const auto& L : ap_sets(r)) {
            int s = int(L.size()), d = r - L.back(), l1 = L.front();
            for (int n = l1 + s * d; n <= 8; ++n) {
                mpz_class lower = count_cliques(extremal_ap(n, r, L), r);
                SearchResult res = exact_psi(n, r, L, cfg);
                std::ostringstream tag;
                tag << "n=" << n << " r=" << r << " L={";
                for (int l : L) tag << l << ",";
                tag << "}";
                c.require(res.exhaustive, "psi not exhaustive at " + tag.str());
                c.require(res.value >= lower, "psi below construction at " + tag.str());
            }
        }
    return finish("6-psi-sandwich", c, t0);
}

Row c7_quotient_atoms(int) {
    auto t0 = Clock::now();
    Check c;
    Graph g = extremal_ap(8, 4, {0, 2});
    SetFamily h4 = associated_r_graph(g, 4);
    AtomsResult at = atoms(h4, 2);
    c.eq(at.atoms.cells.size(), std::size_t(4), "atom count");
    c.require(at.leftover.none(), "X0 not empty");
    for (const auto& cell : at.atoms.cells) c.eq(cell.count(), 2, "atom size");

    // brute-force oracle: maximal contain-or-avoid subsets over all 2^n sets
    {
        std::vector<Bitset> good;
        for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
            Bitset s(g.n());
            for (int v = 0; v < g.n(); ++v)
                if (mask & (1u << v)) s.set(v);
            bool ok = true;
            for (const auto& e : h4.edges)
                if (e.intersects(s) && !s.is_subset_of(e)) {
                    ok = false;
                    break;
                }
            if (ok) good.push_back(std::move(s));
        }
        std::vector<Bitset> maximal;
        for (const auto& s : good) {
            bool strictly_inside = false;
            for (const auto& u : good)
                if (u != s && s.is_subset_of(u)) {
                    strictly_inside = true;
                    break;
                }
            if (!strictly_inside && s.count() >= 2) maximal.push_back(s);
        }
        std::sort(maximal.begin(), maximal.end(),
                  [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
        c.eq(maximal.size(), at.atoms.cells.size(), "refinement vs brute force atom count");
        for (std::size_t i = 0; i < maximal.size() && i < at.atoms.cells.size(); ++i)
            c.require(maximal[i] == at.atoms.cells[i], "atom " + std::to_string(i) + " differs");
    }

    QuotientReport rep = verify_quotient_claims(g, 4, 2, at.atoms);
    c.require(rep.cliques_are_cell_unions, "claim (a) cliques are cell unions");
    c.require(rep.counts_equal, "claim (b) clique counts equal");
    c.require(rep.quotient_is_01_intersecting, "claim (c) quotient {0,1}-intersecting");
    c.eq(rep.clique_count, mpz_class(4), "|H^4|");
    c.eq(count_cliques(quotient_graph(g, 4, at.atoms), 2), mpz_class(4), "N(K2, quotient)");
    return finish("7-quotient-reduction", c, t0);
}

Row c8_cover_families_hm(int) {
    auto t0 = Clock::now();
    Check c;
    Graph g = hm_extremal(9, 3, 1);
    CoverFamilies fam = cover_families(g, 3, 1, 3);
    c.eq(fam.t_heavy.size(), std::size_t(3), "|T''_2|");
    Bitset d3 = Bitset::of(g.n(), {0, 1, 2});
    for (const auto& p : fam.t_heavy) {
        c.eq(p.count(), 2, "T''_2 member size");
        c.require(p.is_subset_of(d3), "T''_2 member outside the apex triple");
    }

    HmDecomposition dec = hm_decomposition(g, 3, 1, d3);
    c.eq(dec.total, mpz_class(19), "N(K3)");
    c.eq(dec.n0_term, mpz_class(1), "N0 term");
    c.eq(dec.ni_terms.size(), std::size_t(3), "number of N^i sides");
    for (const auto& term : dec.ni_terms) c.eq(term, mpz_class(6), "N^i term");
    c.require(dec.equality, "decomposition equality");
    for (bool f : dec.ni_krt_free) c.require(f, "G[N^i] should be K2-free");
    return finish("8-hm-machinery", c, t0);
}

Row c9_mod_q(int threads, unsigned seed) {
    (void)threads;
    auto t0 = Clock::now();
    Check c;
    std::mt19937 rng(seed + 777);
    int done = 0;
    while (done < 1000) {
        long long l2 = 1 + (long long)(rng() % 60);
        long long l3 = l2 + 1 + (long long)(rng() % 60);
        if (l3 == 2 * l2) continue;
        ++done;
        auto q = find_prime_power(l2, l3);
        c.require(q.has_value(), "no q for l2=" + std::to_string(l2) + " l3=" + std::to_string(l3));
        if (q) {
            c.require(is_prime_power(*q), "q not a prime power");
            c.require(l3 % *q == 0, "q does not divide l3");
            c.require((2 * l2) % *q != 0, "q divides 2*l2");
        }
    }

    // Lemma shapes with r - l3 = l3 - l2 != l2: mod-q machinery applies, so
    // every exhaustively found family obeys |F| <= binom(n,2); the maximum
    // one from exact_phi bounds them all.
    struct Shape {
        int l2, l3, r;
    };
    for (Shape sh : {Shape{2, 3, 4}, Shape{1, 3, 5}, Shape{3, 4, 5}}) {
        auto q = find_prime_power(sh.l2, sh.l3);
        c.require(q.has_value(), "lemma shape has no q");
        if (!q) continue;
        std::vector<int> lmod{0, int(sh.l2 % *q)};
        std::sort(lmod.begin(), lmod.end());
        lmod.erase(std::unique(lmod.begin(), lmod.end()), lmod.end());
        c.require(mod_q_applicable(*q, sh.r, lmod), "r not excluded mod q");
        for (int n = sh.r; n <= 9; ++n) {
            SearchResult res = exact_phi(n, sh.r, {0, sh.l2, sh.l3});
            c.require(res.exhaustive, "phi not exhaustive in lemma shape");
            c.require(res.value <= binomial(n, 2),
                      "phi exceeds binom(n,2) at n=" + std::to_string(n) + " r=" + std::to_string(sh.r));
            c.require(family_mod_q_ok(*res.witness_family, *q, lmod), "witness violates mod-q pattern");
        }
    }
    return finish("9-mod-q-lemma", c, t0);
}

Row c10_canonical_classes(int) {
    auto t0 = Clock::now();
    Check c;
    auto classes = [&](int n) {
        int slots = n * (n - 1) / 2;
        std::unordered_set<std::string> forms;
        for (unsigned mask = 0; mask < (1u << slots); ++mask) {
            Graph g(n);
            int k = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++k)
                    if (mask & (1u << k)) g.add_edge(u, v);
            forms.insert(canonical_form(g));
        }
        return forms.size();
    };
    c.eq(classes(4), std::size_t(11), "4-vertex graph classes");
    c.eq(classes(5), std::size_t(34), "5-vertex graph classes");
    return finish("10-canonical-form-classes", c, t0);
}

} // namespace

std::vector<Row> run_acceptance(const std::string& filter, int threads, unsigned seed) {
    std::vector<std::pair<std::string, std::function<Row(int)>>> all = {
        {"1-construction-formula-identities", c1_construction_formula},
        {"2-hm-identity", c2_hm_identity},
        {"3-construction-properties", c3_construction_properties},
        {"4-clique-count-oracle", [seed](int th) { return c4_oracle_equivalence(th, seed); }},
        {"5-ekr-phi-values", c5_ekr_phi},
        {"6-psi-sandwich", c6_psi_sandwich},
        {"7-quotient-reduction", c7_quotient_atoms},
        {"8-hm-machinery", c8_cover_families_hm},
        {"9-mod-q-lemma", [seed](int th) { return c9_mod_q(th, seed); }},
        {"10-canonical-form-classes", c10_canonical_classes},
    };
    std::vector<Row> rows;
    for (auto& [name, fn] : all) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        try {
            rows.push_back(fn(threads));
        } catch (const std::exception& e) {
            Row row;
            row.name = name;
            row.pass = false;
            row.detail = std::string("exception: ") + e.what();
            rows.push_back(row);
        }
    }
    return rows;
}

bool print_rows(const std::vector<Row>& rows) {
    bool all = true;
    for (const auto& row : rows) {
        std::printf("%s  %-36s %8lld ms  %s\n", row.pass ? "PASS" : "FAIL", row.name.c_str(), row.ms,
                    row.detail.c_str());
        all = all && row.pass;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all ? "OK" : "FAILURES",
                std::size_t(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.pass; })),
                rows.size());
    return all;
}

} // namespace cliquefam::accept
