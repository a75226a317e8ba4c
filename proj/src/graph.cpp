#include "cliquefam/graph.hpp"

#include <stdexcept>

namespace cliquefam {

Graph complete(int k) {
    if (k < 0) throw std::invalid_argument("complete: k < 0");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int k) {
    if (k < 0) throw std::invalid_argument("empty_graph: k < 0");
    return Graph(k);
}

static Graph glue(const Graph& g, const Graph& h, bool cross) {
    Graph r(g.n() + h.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).find_next(u); v >= 0; v = g.neighbors(u).find_next(v))
            r.add_edge(u, v);
    for (int u = 0; u < h.n(); ++u)
        for (int v = h.neighbors(u).find_next(u); v >= 0; v = h.neighbors(u).find_next(v))
            r.add_edge(g.n() + u, g.n() + v);
    if (cross)
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < h.n(); ++v) r.add_edge(u, g.n() + v);
    return r;
}

Graph join(const Graph& g, const Graph& h) { return glue(g, h, true); }
Graph disjoint_union(const Graph& g, const Graph& h) { return glue(g, h, false); }

Graph disjoint_copies(int b, const Graph& g) {
    if (b < 0) throw std::invalid_argument("disjoint_copies: b < 0");
    Graph r(b * g.n());
    for (int c = 0; c < b; ++c) {
        int base = c * g.n();
        for (int u = 0; u < g.n(); ++u)
            for (int v = g.neighbors(u).find_next(u); v >= 0; v = g.neighbors(u).find_next(v))
                r.add_edge(base + u, base + v);
    }
    return r;
}

Graph turan(int n, int t) {
    if (n < 0 || t < 1) throw std::invalid_argument("turan: need n >= 0, t >= 1");
    // Small parts first, the (n mod t) parts of size ceil(n/t) last, so that
    // blown_turan(m,s,1) is turan(m,s) vertex for vertex.
    int q = n / t, a = n % t;
    Graph g(n);
    std::vector<int> part(n);
    int v = 0;
    for (int p = 0; p < t; ++p) {
        int size = p < t - a ? q : q + 1;
        for (int i = 0; i < size; ++i) part[v++] = p;
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part[u] != part[w]) g.add_edge(u, w);
    return g;
}

Graph blown_turan(int m, int s, int d) {
    if (m < 0 || s < 1 || d < 1) throw std::invalid_argument("blown_turan: need m >= 0, s >= 1, d >= 1");
    int q = m / s, s1 = m % s;
    Graph g(m * d);
    std::vector<int> side(m * d);
    int v = 0;
    for (int p = 0; p < s; ++p) {
        int copies = p < s - s1 ? q : q + 1;
        for (int c = 0; c < copies; ++c)
            for (int i = 0; i < d; ++i) side[v++] = p;
    }
    // v advanced copy-block by copy-block: within a side only positions in the
    // same K_d copy are adjacent, detected by block index.
    for (int u = 0; u < m * d; ++u)
        for (int w = u + 1; w < m * d; ++w) {
            if (side[u] != side[w]) g.add_edge(u, w);
            else if (u / d == w / d) g.add_edge(u, w);
        }
    return g;
}

ConstructionParams ap_params(int n, int r, const std::vector<int>& L) {
    if (L.empty()) throw std::invalid_argument("ap_params: L empty");
    for (std::size_t i = 0; i + 1 < L.size(); ++i)
        if (L[i] >= L[i + 1]) throw std::invalid_argument("ap_params: L not strictly increasing");
    if (L.front() < 0 || L.back() >= r) throw std::invalid_argument("ap_params: L not within [0, r-1]");
    ConstructionParams p;
    p.n = n;
    p.r = r;
    p.L = L;
    p.s = int(L.size());
    p.d = r - L.back();
    for (std::size_t i = 0; i + 1 < L.size(); ++i)
        if (L[i + 1] - L[i] != p.d)
            throw std::invalid_argument("ap_params: L together with r is not an arithmetic progression");
    if (n < L.front() + p.s * p.d)
        throw std::invalid_argument("ap_params: n < l1 + s*d");
    p.m = (n - L.front()) / p.d;
    p.lambda = (n - L.front()) - p.m * p.d;
    p.s1 = p.m % p.s;
    return p;
}

Graph extremal_ap(int n, int r, const std::vector<int>& L) {
    ConstructionParams p = ap_params(n, r, L);
    Graph core = join(complete(L.front()), blown_turan(p.m, p.s, p.d));
    // lambda isolated vertices pad the order up to n; they touch no r-clique.
    return disjoint_union(core, empty_graph(p.lambda));
}

Graph hm_extremal(int n, int r, int t) {
    if (!(n >= t + 2 && r > t && t >= 1 && r - t - 1 >= 1))
        throw std::invalid_argument("hm_extremal: need n >= t+2, r > t >= 1, r-t-1 >= 1");
    return join(complete(t + 2), turan(n - t - 2, r - t - 1));
}

// --- graph6 ----------------------------------------------------------------

static void append_size(std::string& out, long long n) {
    auto six = [&](long long x, int groups) {
        for (int i = groups - 1; i >= 0; --i) out.push_back(char(((x >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        six(n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        six(n, 6);
    }
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    append_size(out, g.n());
    int acc = 0, nb = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back(char((acc << (6 - nb)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    const std::string_view banner = ">>graph6<<";
    if (s.substr(0, banner.size()) == banner) s.remove_prefix(banner.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (s.size() - pos < k) throw std::invalid_argument("graph6: truncated input");
    };
    auto byte = [&]() {
        char c = s[pos++];
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return int(c - 63);
    };

    long long n;
    need(1);
    if (s[pos] != 126) {
        n = byte();
    } else {
        ++pos;
        need(1);
        int groups = 3;
        if (s[pos] == 126) {
            ++pos;
            groups = 6;
        }
        need(std::size_t(groups));
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | byte();
    }
    if (n > 100000) throw std::invalid_argument("graph6: vertex count beyond supported size");

    long long bits = n * (n - 1) / 2;
    need(std::size_t((bits + 5) / 6));
    Graph g{int(n)};
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (nb == 0) {
                acc = byte();
                nb = 6;
            }
            if ((acc >> (nb - 1)) & 1) g.add_edge(u, v);
            --nb;
        }
    if (nb && (acc & ((1 << nb) - 1))) throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

} // namespace cliquefam
