#include "cliquefam/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cliquefam {

namespace {

// Iterated refinement: recolor by (color, sorted neighbor colors) until the
// class count stabilizes. Ranks are assigned by sorting signatures, so equal
// colorings of isomorphic graphs refine identically.
void refine(const Graph& g, std::vector<int>& colors) {
    int n = g.n();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(colors[std::size_t(v)]);
            for (int u = g.neighbors(v).find_first(); u >= 0; u = g.neighbors(v).find_next(u))
                s.push_back(colors[std::size_t(u)]);
            std::sort(s.begin() + 1, s.end());
            sig[std::size_t(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        int before = 0;
        {
            std::vector<int> distinct = colors;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            before = int(distinct.size());
        }
        for (int v = 0; v < n; ++v) colors[std::size_t(v)] = rank[sig[std::size_t(v)].first];
        if (next == before) return; // no class split
        if (next == n) return;      // discrete
    }
}

struct Canonizer {
    const Graph& g;
    std::string best;
    bool have_best = false;

    void leaf(const std::vector<int>& colors) {
        int n = g.n();
        std::vector<int> pos(static_cast<std::size_t>(n)); // canonical position -> vertex
        for (int v = 0; v < n; ++v) pos[std::size_t(colors[std::size_t(v)])] = v;
        Graph h(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.adjacent(pos[std::size_t(i)], pos[std::size_t(j)])) h.add_edge(i, j);
        std::string s = encode_graph6(h);
        if (!have_best || s < best) {
            best = std::move(s);
            have_best = true;
        }
    }

    void descend(std::vector<int> colors) {
        refine(g, colors);
        int n = g.n();
        // first (lowest color) class with more than one member
        int target = -1;
        std::vector<int> members;
        for (int c = 0; c < n && target < 0; ++c) {
            members.clear();
            for (int v = 0; v < n; ++v)
                if (colors[std::size_t(v)] == c) members.push_back(v);
            if (members.size() > 1) target = c;
        }
        if (target < 0) {
            leaf(colors);
            return;
        }
        for (int v : members) {
            // individualize: v sorts below its classmates, everything else keeps order
            std::vector<int> next = colors;
            for (int u = 0; u < n; ++u) next[std::size_t(u)] = 2 * next[std::size_t(u)] + 1;
            next[std::size_t(v)] -= 1;
            descend(std::move(next));
        }
    }
};

std::string canon_impl(const Graph& g, std::vector<int> colors) {
    // normalize arbitrary color values to ranks
    std::vector<int> vals = colors;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (auto& c : colors)
        c = int(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    Canonizer cz{g, {}, false};
    cz.descend(std::move(colors));
    return cz.best;
}

} // namespace

std::string canonical_form(const Graph& g) {
    return canon_impl(g, std::vector<int>(std::size_t(g.n()), 0));
}

std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
    if (int(colors.size()) != g.n())
        throw std::invalid_argument("canonical_form_colored: color vector size mismatch");
    return canon_impl(g, colors);
}

} // namespace cliquefam
