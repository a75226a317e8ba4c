#include <doctest.h>

#include "cliquefam/bounds.hpp"
#include "cliquefam/clique.hpp"
#include "cliquefam/graph.hpp"
#include "cliquefam/search.hpp"

#include <random>

using namespace cliquefam;

TEST_CASE("AP classification") {
    CHECK(classify_ap(4, {0, 2}).kind == APKind::AP);
    CHECK(classify_ap(4, {0, 2}).d == 2);
    CHECK(classify_ap(3, {0, 1}).kind == APKind::NotApLastGapDiffers);
    CHECK(classify_ap(4, {0, 2, 3}).kind == APKind::NotApLastGapEqual);

    for (int r = 2; r <= 10; ++r)
        for (int t = 1; t < r; ++t) {
            std::vector<int> L;
            for (int i = t; i < r; ++i) L.push_back(i);
            APClass cls = classify_ap(r, L);
            CHECK(cls.kind == APKind::AP);
            CHECK(cls.d == 1);
        }
    CHECK(classify_ap(4, {1}).size_flagged);
    CHECK(classify_ap(4, {0, 1, 2, 3}).size_flagged);
    CHECK_FALSE(classify_ap(4, {0, 2}).size_flagged);
}

TEST_CASE("DEF bound") {
    CHECK(def_bound(10, 3, {1, 2}).value == 36);
    CHECK(def_bound(10, 4, {}).value == 1);
    CHECK(def_bound(10, 4, {0, 2}).value == 10);
    // the t-intersecting specialization collapses to a binomial coefficient
    for (int r = 2; r <= 8; ++r)
        for (int t = 1; t < r; ++t)
            for (long long n = r; n <= 40; ++n) {
                std::vector<int> L;
                for (int i = t; i < r; ++i) L.push_back(i);
                CHECK(def_bound(n, r, L).value == mpq_class(binomial(n - t, r - t)));
            }
}

TEST_CASE("Helliar-Liu improvement") {
    CHECK(helliar_liu_bound(10, 3, {1, 2}).value == 32);
    CHECK_THROWS_AS(helliar_liu_bound(10, 3, {1}), std::invalid_argument);
    CHECK_THROWS_AS(helliar_liu_bound(10, 3, {0, 1, 2}), std::invalid_argument);

    // exact rational at the validity threshold n = (2r)^(r+1), r = 3
    CHECK(helliar_liu_bound(1296, 3, {0, 1}).value == 248640);

    std::mt19937 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        int r = 3 + int(rng() % 4);
        int a = int(rng() % (r - 1)), b = a + 1 + int(rng() % (r - 1 - a));
        long long n = r + int(rng() % 50);
        std::vector<int> L{a, b};
        mpq_class d = def_bound(n, r, L).value;
        if (d > 0) CHECK(helliar_liu_bound(n, r, L).value < d);
    }
}

TEST_CASE("AP exact value") {
    CHECK(ap_exact_value(8, 4, {0, 2}).value == 4);
    CHECK(ap_exact_value(9, 5, {1, 3}).value == 4);
    CHECK_THROWS_AS(ap_exact_value(9, 4, {0, 1}), std::invalid_argument);

    // d = 1 specialization: N(K_{r-t}, T(n-t, r-t))
    for (int r = 3; r <= 6; ++r)
        for (int t = 1; t < r; ++t)
            for (long long n = r; n <= 14; ++n) {
                std::vector<int> L;
                for (int i = t; i < r; ++i) L.push_back(i);
                CHECK(ap_exact_value(n, r, L).value == mpq_class(turan_clique_count(n - t, r - t, r - t)));
            }

    // the construction achieves the formula on the whole desk-scale grid
    for (int r = 2; r <= 6; ++r)
        for (int d = 1; d <= r; ++d)
            for (int s = 1; s * d <= r; ++s) {
                int l1 = r - s * d;
                std::vector<int> L;
                for (int i = 0; i < s; ++i) L.push_back(l1 + i * d);
                for (int n = l1 + s * d; n <= 12; ++n)
                    CHECK(ap_exact_value(n, r, L).value ==
                          mpq_class(count_cliques(extremal_ap(n, r, L), r)));
            }
}

TEST_CASE("HM value") {
    CHECK(hm_value(9, 3, 1).value == 19);
    CHECK(hm_value(9, 4, 1).value == 33);
    // r = t+2 exercises the N(K_0, .) = 1 convention
    CHECK(hm_value(10, 3, 1).value == 1 + 3 * 7);
    CHECK(hm_value(10, 3, 1).value == mpq_class(count_cliques(hm_extremal(10, 3, 1), 3)));

    for (int r = 3; r <= 6; ++r)
        for (int t = 1; t <= r - 2; ++t)
            for (long long n = t + 2; n <= 14; ++n)
                CHECK(hm_value(n, r, t).value == mpq_class(count_cliques(hm_extremal(int(n), r, t), r)));
}

TEST_CASE("recursive bound combinator") {
    // exact oracles at small n compose into the lemma's shape
    PhiOracle phi = [](long long n, int r, const std::vector<int>& L) {
        if (r == 0) return mpz_class(1); // empty uniformity: only the empty set
        return exact_phi(int(n), r, L).value;
    };
    PsiOracle psi = [](long long n, int r, const std::vector<int>& L) {
        return exact_psi(int(n), r, L).value;
    };

    // L = {0,2}, r = 4, i = 2: c^-1 max{Phi_4(8,{0}), Phi_2(8,{0}) Psi_2(6,{0})}
    mpz_class first = phi(8, 4, {0});
    mpz_class second = phi(8, 2, {0}) * psi(6, 2, {0});
    CHECK(first == 2);  // pairwise-disjoint 4-sets in [8]
    CHECK(second == 4 * 3); // perfect matching times max matching on 6
    BoundReport rep = recursive_bound(8, 4, {0, 2}, 2, 1, phi, psi);
    CHECK(rep.value == 12);

    BoundReport half = recursive_bound(8, 4, {0, 2}, 2, mpq_class(1, 2), phi, psi);
    CHECK(half.value == 24);

    // degenerate index: l_1 = 0 is flagged in the note
    BoundReport degen = recursive_bound(8, 4, {0, 2}, 1, 1, phi, psi);
    CHECK(degen.applicability.find("degenerate") != std::string::npos);

    PhiOracle zero = [](long long, int, const std::vector<int>&) { return mpz_class(0); };
    PsiOracle zero2 = [](long long, int, const std::vector<int>&) { return mpz_class(0); };
    CHECK(recursive_bound(8, 4, {0, 2}, 2, 1, zero, zero2).value == 0);
}

TEST_CASE("prime powers for the mod-q lemma") {
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(27));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(12));

    CHECK(find_prime_power(2, 3) == 3);
    CHECK(find_prime_power(1, 4) == 4);
    CHECK(find_prime_power(3, 4) == 4);

    std::mt19937 rng(2718);
    for (int trial = 0; trial < 1000; ++trial) {
        long long l2 = 1 + (long long)(rng() % 80);
        long long l3 = l2 + 1 + (long long)(rng() % 80);
        if (l3 == 2 * l2) continue;
        auto q = find_prime_power(l2, l3);
        REQUIRE(q.has_value());
        CHECK(is_prime_power(*q));
        CHECK(l3 % *q == 0);
        CHECK((2 * l2) % *q != 0);
    }
}

TEST_CASE("mod-q applicability") {
    CHECK(mod_q_applicable(3, 4, {0, 2}));
    CHECK_FALSE(mod_q_applicable(2, 4, {0, 1}));
    CHECK_THROWS_AS(mod_q_applicable(6, 4, {0, 1}), std::invalid_argument);

    SetFamily disj(9, 3);
    disj.add(Bitset::of(9, {0, 1, 2}));
    disj.add(Bitset::of(9, {3, 4, 5}));
    disj.add(Bitset::of(9, {6, 7, 8}));
    CHECK(family_mod_q_ok(disj, 3, {0, 2}));
}
