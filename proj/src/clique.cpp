#include "cliquefam/clique.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cliquefam {

mpz_class binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

namespace {

// Ordered extension: candidates always lie strictly above the last picked
// vertex, so each clique is produced exactly once, as its sorted tuple.
struct Enumerator {
    const Graph& g;
    std::vector<Bitset> scratch; // per-depth candidate sets
    std::vector<int> picked;
    Bitset cur;
    const std::function<void(const Bitset&)>& visit;

    Enumerator(const Graph& g_, int r, const std::function<void(const Bitset&)>& v)
        : g(g_), scratch(std::size_t(r) + 1, Bitset(g_.n())), cur(g_.n()), visit(v) {}

    void run(const Bitset& cand, int k) {
        if (k == 0) {
            visit(cur);
            return;
        }
        if (cand.count() < k) return;
        Bitset& rest = scratch[std::size_t(k)];
        rest = cand;
        for (int v = rest.find_first(); v >= 0; v = rest.find_next(v)) {
            rest.reset(v);
            cur.set(v);
            if (k == 1) visit(cur);
            else run(rest & g.neighbors(v), k - 1);
            cur.reset(v);
        }
    }
};

// Counting twin of Enumerator; subtree totals below the top level fit in 64
// bits at the sizes this library targets (n <= a few hundred).
unsigned long long count_rec(const Graph& g, Bitset cand, int k) {
    if (k == 1) return (unsigned long long)cand.count();
    if (cand.count() < k) return 0;
    unsigned long long total = 0;
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
        cand.reset(v);
        total += count_rec(g, cand & g.neighbors(v), k - 1);
    }
    return total;
}

} // namespace

void enumerate_cliques(const Graph& g, int r, const Bitset& allowed,
                       const std::function<void(const Bitset&)>& visit) {
    if (r < 0) throw std::invalid_argument("enumerate_cliques: r < 0");
    Enumerator e(g, r, visit);
    e.run(allowed, r);
}

SetFamily associated_r_graph(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("associated_r_graph: r < 1");
    SetFamily f(g.n(), r);
    enumerate_cliques(g, r, Bitset::full(g.n()), [&](const Bitset& c) { f.edges.push_back(c); });
    return f; // lex order already
}

mpz_class count_cliques_within(const Graph& g, int r, const Bitset& allowed, int threads) {
    if (r < 0) throw std::invalid_argument("count_cliques: r < 0");
    if (r == 0) return 1;
    if (r == 1) return allowed.count();
    std::vector<int> starts = allowed.to_vector();
    if (threads <= 1 || starts.size() < 2) {
        mpz_class total = 0;
        Bitset cand = allowed;
        for (int v : starts) {
            cand.reset(v);
            total += mpz_class((unsigned long)count_rec(g, cand & g.neighbors(v), r - 1));
        }
        return total;
    }
    std::atomic<std::size_t> next{0};
    std::vector<mpz_class> partial(starts.size());
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < starts.size(); i = next.fetch_add(1)) {
            Bitset cand = allowed;
            for (std::size_t j = 0; j <= i; ++j) cand.reset(starts[j]);
            partial[i] = mpz_class((unsigned long)count_rec(g, cand & g.neighbors(starts[i]), r - 1));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    mpz_class total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

mpz_class count_cliques(const Graph& g, int r, int threads) {
    return count_cliques_within(g, r, Bitset::full(g.n()), threads);
}

mpz_class turan_clique_count(long long n, int t, int r) {
    if (n < 0 || t < 1 || r < 0) throw std::invalid_argument("turan_clique_count: bad arguments");
    long long q = n / t, a = n % t;
    mpz_class total = 0;
    for (long long i = 0; i <= r; ++i) {
        if (i > a || r - i > t - a) continue;
        mpz_class big, small;
        mpz_ui_pow_ui(big.get_mpz_t(), (unsigned long)(q + 1), (unsigned long)i);
        mpz_ui_pow_ui(small.get_mpz_t(), (unsigned long)q, (unsigned long)(r - i));
        total += binomial(a, i) * binomial(t - a, r - i) * big * small;
    }
    return total;
}

SetFamily cliques_containing(const Graph& g, int r, const Bitset& T) {
    int k = T.count();
    if (k > r) return SetFamily(g.n(), r);
    SetFamily f(g.n(), r);
    Bitset common = Bitset::full(g.n());
    for (int u = T.find_first(); u >= 0; u = T.find_next(u)) {
        for (int v = T.find_next(u); v >= 0; v = T.find_next(v))
            if (!g.adjacent(u, v)) return f; // no clique contains a non-edge
        common &= g.neighbors(u);
    }
    enumerate_cliques(g, r - k, common, [&](const Bitset& c) { f.edges.push_back(c | T); });
    f.normalize();
    return f;
}

} // namespace cliquefam
