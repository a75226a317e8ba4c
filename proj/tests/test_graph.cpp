#include <doctest.h>

#include "cliquefam/clique.hpp"
#include "cliquefam/graph.hpp"
#include "cliquefam/search.hpp"
#include "cliquefam/set_family.hpp"

#include <random>

using namespace cliquefam;

namespace {

void check_simple(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (int v = 0; v < g.n(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("complete graphs") {
    CHECK(complete(0).n() == 0);
    CHECK(complete(1).n() == 1);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete(4).edge_count() == 6);
    check_simple(complete(5));
}

TEST_CASE("join and disjoint union") {
    CHECK(join(complete(1), complete(1)) == complete(2));
    Graph g = join(complete(2), empty_graph(3));
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 7);
    check_simple(g);

    CHECK(disjoint_copies(0, complete(3)).n() == 0);
    Graph h = disjoint_copies(3, complete(2));
    CHECK(h.n() == 6);
    CHECK(h.edge_count() == 3);
}

TEST_CASE("join is associative up to isomorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = random_graph(rng, 1 + int(rng() % 4));
        Graph b = random_graph(rng, 1 + int(rng() % 4));
        Graph c = random_graph(rng, 1 + int(rng() % 4));
        if (a.n() + b.n() + c.n() > 12) continue;
        CHECK(canonical_form(join(join(a, b), c)) == canonical_form(join(a, join(b, c))));
    }
}

TEST_CASE("turan graphs") {
    CHECK(turan(6, 3).edge_count() == 12);
    CHECK(turan(7, 3).edge_count() == 16);
    CHECK(turan(9, 1).edge_count() == 0);
    CHECK(turan(9, 1).n() == 9);
    // K_{t+1}-free, contains K_t when every part is nonempty
    for (int n = 1; n <= 10; ++n)
        for (int t = 1; t <= 5; ++t) {
            Graph g = turan(n, t);
            CHECK(count_cliques(g, t + 1) == 0);
            if (n >= t) CHECK(count_cliques(g, t) > 0);
        }
}

TEST_CASE("blow-up of the turan graph") {
    CHECK(blown_turan(4, 2, 1) == turan(4, 2));
    for (int m = 0; m <= 8; ++m)
        for (int s = 1; s <= 4; ++s) CHECK(blown_turan(m, s, 1) == turan(m, s));

    Graph bt = blown_turan(4, 2, 2);
    CHECK(bt.n() == 8);
    CHECK(bt.edge_count() == 20);
    CHECK(count_cliques(bt, 5) == 0);
    CHECK(count_cliques(bt, 4) == 4);

    // K_{sd+1}-freeness across the grid
    for (int m = 0; m <= 6; ++m)
        for (int s = 1; s <= 4; ++s)
            for (int d = 1; d <= 2; ++d) {
                if (s * d > 8) continue;
                CHECK(count_cliques(blown_turan(m, s, d), s * d + 1) == 0);
            }
}

TEST_CASE("extremal AP construction") {
    Graph g = extremal_ap(9, 5, {1, 3});
    CHECK(g.n() == 9);
    CHECK(count_cliques(g, 5) == 4);

    CHECK(extremal_ap(8, 4, {0, 2}).n() == 8);
    CHECK(count_cliques(extremal_ap(8, 4, {0, 2}), 4) == 4);

    // d = 1 collapses to the EKR extremal graph, label for label
    CHECK(extremal_ap(9, 4, {1, 2, 3}) == join(complete(1), turan(8, 3)));
    CHECK(extremal_ap(11, 3, {1, 2}) == join(complete(1), turan(10, 2)));

    SUBCASE("lambda padding keeps n vertices and the clique count") {
        Graph padded = extremal_ap(9, 4, {0, 2}); // 9 - 0 = 4*2 + 1
        CHECK(padded.n() == 9);
        CHECK(padded.degree(8) == 0);
        CHECK(count_cliques(padded, 4) == 4);
    }

    CHECK_THROWS_AS(extremal_ap(8, 3, {0, 1}), std::invalid_argument); // 0,1,3 is no AP
    CHECK_THROWS_AS(extremal_ap(3, 4, {0, 2}), std::invalid_argument); // n below l1 + s*d
}

TEST_CASE("HM extremal construction") {
    CHECK(count_cliques(hm_extremal(9, 3, 1), 3) == 19);
    CHECK(count_cliques(hm_extremal(9, 4, 1), 4) == 33);
    CHECK(hm_extremal(9, 3, 1) == join(complete(3), turan(6, 1)));
    // degenerate: n = t+2 leaves K_{t+2} alone
    CHECK(count_cliques(hm_extremal(3, 3, 1), 3) == 1);
    CHECK(count_cliques(hm_extremal(4, 4, 2), 4) == 1);
    CHECK(count_cliques(hm_extremal(3, 5, 1), 5) == 0);
    CHECK_THROWS_AS(hm_extremal(9, 3, 2), std::invalid_argument); // r-t-1 = 0
}

TEST_CASE("frankl families") {
    SetFamily f2 = frankl_family(6, 3, 1, FranklVariant::II);
    CHECK(f2.edges.size() == 10);

    SetFamily f1 = frankl_family(7, 3, 1, FranklVariant::I);
    CHECK(f1.edges.size() == 13); // binom(6,2) - binom(3,2) + 1

    for (const auto& e : f2.edges) CHECK(e.count() == 3);
}

TEST_CASE("graph6 round trip") {
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(decode_graph6("Bw") == complete(3));
    CHECK(decode_graph6(">>graph6<<Bw\n") == complete(3));

    std::mt19937 rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = int(rng() % 63);
        Graph g = random_graph(rng, n);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    // multi-byte size prefix
    Graph big = turan(100, 7);
    CHECK(decode_graph6(encode_graph6(big)) == big);

    CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6("B"), std::invalid_argument); // truncated body
    CHECK(decode_graph6("Bw \n") == complete(3));               // trailing whitespace tolerated
}

TEST_CASE("family text format") {
    SetFamily f = associated_r_graph(turan(6, 3), 3);
    CHECK(f.edges.size() == 8);
    SetFamily back = decode_family(encode_family(f));
    CHECK(back.ground_n == f.ground_n);
    CHECK(back.r == f.r);
    CHECK(back.edges == f.edges);

    CHECK_THROWS_AS(decode_family("3 2 1\n0 5\n"), std::invalid_argument);      // vertex out of range
    CHECK_THROWS_AS(decode_family("4 2 2\n0 1\n0 1\n"), std::invalid_argument); // duplicate edge
    CHECK_THROWS_AS(decode_family("4 2 1\n1 1\n"), std::invalid_argument);      // repeated vertex
}
