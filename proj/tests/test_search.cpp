#include <doctest.h>

#include "cliquefam/bounds.hpp"
#include "cliquefam/clique.hpp"
#include "cliquefam/graph.hpp"
#include "cliquefam/search.hpp"

#include <random>
#include <unordered_set>

using namespace cliquefam;

namespace {

// exhaustive reference: run over every labeled graph on n vertices
mpz_class brute_psi(int n, int r, const std::vector<int>& L) {
    IntersectSpec spec(r, L);
    int slots = n * (n - 1) / 2;
    REQUIRE(slots <= 20);
    mpz_class best = 0;
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
        Graph g(n);
        int k = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++k)
                if (mask & (1u << k)) g.add_edge(u, v);
        SetFamily h = associated_r_graph(g, r);
        if (!is_L_intersecting(h, spec).holds) continue;
        best = std::max(best, mpz_class((long)h.edges.size()));
    }
    return best;
}

mpz_class brute_cover_free(int n, int r, int t) {
    int slots = n * (n - 1) / 2;
    REQUIRE(slots <= 20);
    mpz_class best = 0;
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
        Graph g(n);
        int k = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++k)
                if (mask & (1u << k)) g.add_edge(u, v);
        SetFamily h = associated_r_graph(g, r);
        if (!is_t_cover_free(h, t).holds) continue;
        best = std::max(best, mpz_class((long)h.edges.size()));
    }
    return best;
}

} // namespace

TEST_CASE("canonical form equates exactly the isomorphic graphs") {
    Graph path1(3), path2(3);
    path1.add_edge(0, 1);
    path1.add_edge(1, 2);
    path2.add_edge(2, 1);
    path2.add_edge(1, 0);
    CHECK(canonical_form(path1) == canonical_form(path2));

    Graph k3k1 = disjoint_union(complete(3), complete(1));
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(canonical_form(k3k1) != canonical_form(p4));

    // all 2^6 labeled graphs on 4 vertices fall into 11 classes
    std::unordered_set<std::string> forms;
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int k = 0;
        for (int v = 1; v < 4; ++v)
            for (int u = 0; u < v; ++u, ++k)
                if (mask & (1u << k)) g.add_edge(u, v);
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == 11);
}

TEST_CASE("colored canonical form respects classes") {
    // star with the center marked: isomorphic iff the marks line up
    Graph a(3), b(3);
    a.add_edge(1, 0);
    a.add_edge(1, 2); // center 1
    b.add_edge(0, 1);
    b.add_edge(0, 2); // center 0
    CHECK(canonical_form_colored(a, {0, 7, 0}) == canonical_form_colored(b, {7, 0, 0}));
    CHECK(canonical_form_colored(a, {7, 0, 0}) != canonical_form_colored(b, {7, 0, 0}));
}

TEST_CASE("exact psi: frozen and brute-forced values") {
    SearchConfig cfg;
    CHECK(exact_psi(5, 3, {1, 2}, cfg).value == 10); // pigeonhole regime, K_5

    CHECK(exact_psi(4, 2, {1}, cfg).value == 3); // triangle or star
    CHECK(exact_psi(6, 2, {0}, cfg).value == 3); // perfect matching

    for (auto [n, r] : {std::pair{5, 3}, std::pair{6, 3}}) {
        CHECK(exact_psi(n, r, {0, 1}, cfg).value == brute_psi(n, r, {0, 1}));
        CHECK(exact_psi(n, r, {0, 2}, cfg).value == brute_psi(n, r, {0, 2}));
        CHECK(exact_psi(n, r, {1, 2}, cfg).value == brute_psi(n, r, {1, 2}));
    }
    CHECK(exact_psi(6, 4, {0, 2}, cfg).value == brute_psi(6, 4, {0, 2}));

    CHECK_THROWS_AS(exact_psi(11, 3, {0, 1}, cfg), std::invalid_argument); // over the cap
}

TEST_CASE("exact psi invariants") {
    SUBCASE("witness attains the value and passes the predicate") {
        SearchResult res = exact_psi(7, 3, {0, 2});
        REQUIRE(res.witness_graph.has_value());
        SetFamily h = associated_r_graph(*res.witness_graph, 3);
        CHECK(mpz_class((long)h.edges.size()) == res.value);
        CHECK(is_L_intersecting(h, IntersectSpec(3, {0, 2})).holds);
    }
    SUBCASE("memo on and off agree") {
        for (auto [n, r, L] : {std::tuple<int, int, std::vector<int>>{6, 3, {0, 2}},
                               {6, 3, {1, 2}},
                               {6, 4, {0, 2}},
                               {5, 2, {0}}}) {
            SearchConfig with, without;
            without.memo_max_edges = 0;
            CHECK(exact_psi(n, r, L, with).value == exact_psi(n, r, L, without).value);
        }
    }
    SUBCASE("value independent of thread count") {
        SearchConfig one, two;
        one.threads = 1;
        two.threads = 2;
        CHECK(exact_psi(6, 3, {1, 2}, one).value == exact_psi(6, 3, {1, 2}, two).value);
        CHECK(exact_psi(7, 3, {0, 2}, one).value == exact_psi(7, 3, {0, 2}, two).value);
    }
    SUBCASE("construction gives a lower bound") {
        for (int n = 4; n <= 8; ++n) {
            mpz_class lower = count_cliques(extremal_ap(n, 4, {0, 2}), 4);
            CHECK(exact_psi(n, 4, {0, 2}).value >= lower);
        }
    }
    SUBCASE("budget exhaustion reports best-so-far") {
        SearchConfig tiny;
        tiny.node_budget = 50;
        SearchResult res = exact_psi(6, 3, {1, 2}, tiny);
        CHECK_FALSE(res.exhaustive);
        CHECK(res.value >= 0);
        CHECK(res.value <= exact_psi(6, 3, {1, 2}).value);
    }
}

TEST_CASE("exact phi") {
    CHECK(exact_phi(5, 3, {1, 2}).value == 10);
    CHECK(exact_phi(7, 3, {1, 2}).value == 15);
    CHECK(exact_phi(6, 3, {0, 1, 2}).value == binomial(6, 3));

    SearchResult res = exact_phi(7, 3, {1, 2});
    REQUIRE(res.witness_family.has_value());
    CHECK(res.witness_family->edges.size() == 15);
    CHECK(is_L_intersecting(*res.witness_family, IntersectSpec(3, {1, 2})).holds);

    SUBCASE("EKR regime: t = 1, 2r <= n <= 9, r <= 4") {
        for (int r = 2; r <= 4; ++r)
            for (int n = 2 * r; n <= 9; ++n) {
                std::vector<int> L;
                for (int i = 1; i < r; ++i) L.push_back(i);
                CHECK(exact_phi(n, r, L).value == binomial(n - 1, r - 1));
            }
    }
    SUBCASE("budget exhaustion") {
        SearchConfig tiny;
        tiny.node_budget = 2;
        SearchResult b = exact_phi(7, 3, {1, 2}, tiny);
        CHECK_FALSE(b.exhaustive);
        CHECK(b.value <= 15);
    }
    CHECK_THROWS_AS(exact_phi(30, 10, {0, 1}), std::invalid_argument); // cap
}

TEST_CASE("exact cover-free search") {
    SUBCASE("1-cover-free is vacuous for uniform families") {
        SearchResult res = exact_cover_free(5, 3, 1);
        CHECK(res.value == binomial(5, 3));
    }
    SUBCASE("disjoint cliques are always feasible") {
        for (int n = 4; n <= 6; ++n)
            CHECK(exact_cover_free(n, 3, 2).value >= n / 3);
    }
    SUBCASE("engine matches the labeled brute force") {
        CHECK(exact_cover_free(5, 3, 2).value == brute_cover_free(5, 3, 2));
        CHECK(exact_cover_free(6, 3, 2).value == brute_cover_free(6, 3, 2));
        CHECK(exact_cover_free(5, 2, 2).value == brute_cover_free(5, 2, 2));
    }
    SUBCASE("witness verifies") {
        SearchResult res = exact_cover_free(6, 3, 2);
        REQUIRE(res.witness_graph.has_value());
        SetFamily h = associated_r_graph(*res.witness_graph, 3);
        CHECK(is_t_cover_free(h, 2).holds);
        CHECK(mpz_class((long)h.edges.size()) == res.value);
    }
}
