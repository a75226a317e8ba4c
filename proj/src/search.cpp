#include "cliquefam/search.hpp"

#include "cliquefam/clique.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace cliquefam {

namespace {

using Clock = std::chrono::steady_clock;

// Edge slots in colex order: (0,1),(0,2),(1,2),(0,3),... After k decisions
// the decided region is the complete slot set on {0..m-1} plus p slots into
// vertex m, with k = C(m,2) + p.
struct SlotPlan {
    std::vector<std::pair<int, int>> slots;
    std::vector<std::pair<int, int>> depth_mp; // depth -> (m, p)

    explicit SlotPlan(int n) {
        for (int m = 1; m < n; ++m)
            for (int i = 0; i < m; ++i) slots.push_back({i, m});
        int m = 0;
        for (int k = 0; k <= int(slots.size()); ++k) {
            while ((m + 1) * m / 2 <= k) ++m;
            // now C(m,2) <= k < C(m+1,2) with the smallest such m
            depth_mp.push_back({m, k - m * (m - 1) / 2});
        }
    }
};

// Feasibility callback: cliques[old_count..] are the ones added by the last
// edge; return false to kill the branch.
using Checker = std::function<bool(const std::vector<Bitset>&, std::size_t)>;

struct AugmentEngine {
    int n, r;
    SlotPlan plan;
    Checker feasible;
    SearchConfig cfg;
    int split_depth = -1; // task boundary when threaded

    std::atomic<unsigned long long> nodes{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<long long> best_val{0};
    std::mutex best_mx;
    Graph best_graph;
    std::unordered_set<std::string> memo;
    std::mutex memo_mx;

    struct Ctx {
        Graph g;
        std::vector<Bitset> cliques;
    };

    AugmentEngine(int n_, int r_, Checker f, const SearchConfig& cfg_)
        : n(n_), r(r_), plan(n_), feasible(std::move(f)), cfg(cfg_), best_graph(n_) {}

    std::string memo_key(const Graph& g, int k) {
        auto [m, p] = plan.depth_mp[std::size_t(k)];
        int mm = p > 0 ? m + 1 : m;
        Graph prefix(mm);
        for (int u = 0; u < mm; ++u)
            for (int v = u + 1; v < mm; ++v)
                if (g.adjacent(u, v)) prefix.add_edge(u, v);
        std::vector<int> colors(std::size_t(mm), 1);
        for (int i = 0; i < p; ++i) colors[std::size_t(i)] = 0;
        if (p > 0) colors[std::size_t(m)] = 2;
        return std::to_string(k) + '|' + canonical_form_colored(prefix, colors);
    }

    void note_best(const Ctx& ctx) {
        long long c = (long long)ctx.cliques.size();
        if (c <= best_val.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lk(best_mx);
        if (c > best_val.load(std::memory_order_relaxed)) {
            best_val.store(c, std::memory_order_relaxed);
            best_graph = ctx.g;
        }
    }

    // skip_entry: the memo/task bookkeeping for this depth already ran
    void decide(Ctx& ctx, int k, bool skip_entry, std::vector<Ctx>* collect) {
        unsigned long long seen = nodes.fetch_add(1) + 1;
        if (cfg.node_budget >= 0 && (long long)seen > cfg.node_budget) {
            budget_hit.store(true);
            return;
        }
        if (k == int(plan.slots.size())) return;
        if (!skip_entry) {
            if (k >= 2 && k <= cfg.memo_max_edges) {
                std::string key = memo_key(ctx.g, k);
                std::lock_guard<std::mutex> lk(memo_mx);
                if (!memo.insert(std::move(key)).second) return;
            }
            if (collect && k == split_depth) {
                collect->push_back(ctx);
                return;
            }
        }

        auto [u, v] = plan.slots[std::size_t(k)];
        ctx.g.add_edge(u, v);
        std::size_t old_count = ctx.cliques.size();
        Bitset common = ctx.g.neighbors(u) & ctx.g.neighbors(v);
        enumerate_cliques(ctx.g, r - 2, common, [&](const Bitset& c) {
            Bitset cl = c;
            cl.set(u);
            cl.set(v);
            ctx.cliques.push_back(std::move(cl));
        });
        if (feasible(ctx.cliques, old_count)) {
            note_best(ctx);
            decide(ctx, k + 1, false, collect);
        }
        ctx.cliques.resize(old_count);
        ctx.g.remove_edge(u, v);

        decide(ctx, k + 1, false, collect);
    }

    SearchResult run() {
        auto t0 = Clock::now();
        Ctx root{Graph(n), {}};
        best_graph = root.g;

        int M = int(plan.slots.size());
        int threads = std::max(1, cfg.threads);
        if (threads == 1 || M <= 10) {
            decide(root, 0, false, nullptr);
        } else {
            split_depth = std::min(M - 1, 8);
            std::vector<Ctx> tasks;
            decide(root, 0, false, &tasks);
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                    Ctx local = tasks[i];
                    decide(local, split_depth, true, nullptr);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        SearchResult res;
        res.value = mpz_class((long)best_val.load());
        res.witness_graph = best_graph;
        res.exhaustive = !budget_hit.load();
        res.nodes = nodes.load();
        res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
        return res;
    }
};

} // namespace

SearchResult exact_psi(int n, int r, const std::vector<int>& L, const SearchConfig& cfg) {
    if (n < 0 || n > cfg.psi_n_cap)
        throw std::invalid_argument("exact_psi: n exceeds the configured cap");
    if (r < 2) throw std::invalid_argument("exact_psi: r must be at least 2");
    IntersectSpec spec(r, L);

    if (r > n) { // no r-clique fits; every graph qualifies with count 0
        SearchResult res;
        res.value = 0;
        res.witness_graph = empty_graph(n);
        return res;
    }
    // Pigeonhole: two distinct r-subsets of [0,n) intersect in max(0, 2r-n)
    // to r-1 points. When L admits that whole range, K_n is feasible and no
    // graph can beat its binom(n,r) cliques.
    {
        bool all_allowed = true;
        for (int x = std::max(0, 2 * r - n); x <= r - 1 && all_allowed; ++x)
            all_allowed = spec.allows(x);
        if (all_allowed) {
            SearchResult res;
            res.value = binomial(n, r);
            res.witness_graph = complete(n);
            return res;
        }
    }

    AugmentEngine eng(
        n, r,
        [&spec](const std::vector<Bitset>& cliques, std::size_t old_count) {
            for (std::size_t i = old_count; i < cliques.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (!spec.allows(cliques[i].intersection_count(cliques[j]))) return false;
            return true;
        },
        cfg);
    SearchResult res = eng.run();

    SetFamily h = associated_r_graph(*res.witness_graph, r);
    if (mpz_class((long)h.edges.size()) != res.value || !is_L_intersecting(h, spec).holds)
        throw std::logic_error("exact_psi: witness failed re-verification");
    return res;
}

SearchResult exact_cover_free(int n, int r, int t, const SearchConfig& cfg) {
    if (n < 0 || n > cfg.psi_n_cap)
        throw std::invalid_argument("exact_cover_free: n exceeds the configured cap");
    if (r < 2) throw std::invalid_argument("exact_cover_free: r must be at least 2");
    if (t < 1) throw std::invalid_argument("exact_cover_free: t < 1");
    if (r > n) {
        SearchResult res;
        res.value = 0;
        res.witness_graph = empty_graph(n);
        return res;
    }

    AugmentEngine eng(
        n, r,
        [t](const std::vector<Bitset>& cliques, std::size_t old_count) {
            // a fresh violation must involve a new clique, as covered set or
            // as a cover member
            for (std::size_t i = old_count; i < cliques.size(); ++i)
                if (find_cover_of(cliques, i, t)) return false;
            for (std::size_t b = 0; b < old_count; ++b) {
                bool touches_new = false;
                for (std::size_t i = old_count; i < cliques.size() && !touches_new; ++i)
                    touches_new = cliques[b].intersects(cliques[i]);
                if (touches_new && find_cover_of(cliques, b, t)) return false;
            }
            return true;
        },
        cfg);
    SearchResult res = eng.run();

    SetFamily h = associated_r_graph(*res.witness_graph, r);
    if (mpz_class((long)h.edges.size()) != res.value || !is_t_cover_free(h, t).holds)
        throw std::logic_error("exact_cover_free: witness failed re-verification");
    return res;
}

// --- maximum clique on the compatibility graph -------------------------------

namespace {

struct MaxCliqueSearch {
    const std::vector<Bitset>& adj;
    long long budget;
    unsigned long long nodes = 0;
    bool budget_hit = false;
    std::vector<int> best, cur;

    void expand(Bitset P) {
        if (budget >= 0 && (long long)++nodes > budget) {
            budget_hit = true;
            return;
        }
        // greedy coloring: class index bounds any clique inside the prefix
        std::vector<std::pair<int, int>> order;
        Bitset rem = P;
        int color = 0;
        while (rem.any()) {
            ++color;
            Bitset avail = rem;
            while (avail.any()) {
                int v = avail.find_first();
                order.push_back({v, color});
                rem.reset(v);
                avail.reset(v);
                avail.subtract(adj[std::size_t(v)]);
            }
        }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            auto [v, c] = order[std::size_t(i)];
            if (int(cur.size()) + c <= int(best.size())) return;
            cur.push_back(v);
            Bitset pv = P & adj[std::size_t(v)];
            if (pv.none()) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(pv);
            }
            cur.pop_back();
            P.reset(v);
            if (budget_hit) return;
        }
    }
};

} // namespace

SearchResult exact_phi(int n, int r, const std::vector<int>& L, const SearchConfig& cfg) {
    if (n < 0 || r < 1) throw std::invalid_argument("exact_phi: need n >= 0, r >= 1");
    IntersectSpec spec(r, L);
    mpz_class total = binomial(n, r);
    if (total > mpz_class((long)cfg.phi_cap)) throw std::invalid_argument("exact_phi: binom(n,r) exceeds the configured cap");
    auto t0 = Clock::now();

    std::vector<Bitset> subsets;
    for_each_subset(n, r, [&](const std::vector<int>& idx) {
        Bitset b(n);
        for (int v : idx) b.set(v);
        subsets.push_back(std::move(b));
    });
    int N = int(subsets.size());
    std::vector<Bitset> adj(static_cast<std::size_t>(N), Bitset(N));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (spec.allows(subsets[std::size_t(i)].intersection_count(subsets[std::size_t(j)]))) {
                adj[std::size_t(i)].set(j);
                adj[std::size_t(j)].set(i);
            }

    MaxCliqueSearch mc{adj, cfg.node_budget, 0, false, {}, {}};
    if (N > 0) mc.expand(Bitset::full(N));

    SearchResult res;
    res.value = (long)mc.best.size();
    SetFamily fam(n, r);
    for (int i : mc.best) fam.edges.push_back(subsets[std::size_t(i)]);
    fam.normalize();
    res.witness_family = std::move(fam);
    res.exhaustive = !mc.budget_hit;
    res.nodes = mc.nodes;
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);

    if (!is_L_intersecting(*res.witness_family, spec).holds ||
        mpz_class((long)res.witness_family->edges.size()) != res.value)
        throw std::logic_error("exact_phi: witness failed re-verification");
    return res;
}

} // namespace cliquefam
