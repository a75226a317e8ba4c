#include "cliquefam/set_family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cliquefam {

void SetFamily::add(const Bitset& e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e,
                               [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    if (it != edges.end() && *it == e) return;
    edges.insert(it, e);
}

void SetFamily::normalize() {
    std::sort(edges.begin(), edges.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool SetFamily::contains(const Bitset& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e,
                               [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    return it != edges.end() && *it == e;
}

std::vector<long long> SetFamily::degrees() const {
    std::vector<long long> deg(ground_n, 0);
    for (const auto& e : edges)
        for (int v = e.find_first(); v >= 0; v = e.find_next(v)) ++deg[v];
    return deg;
}

std::string encode_family(const SetFamily& f) {
    std::ostringstream out;
    out << f.ground_n << ' ' << f.r << ' ' << f.edges.size() << '\n';
    for (const auto& e : f.edges) {
        bool first = true;
        for (int v = e.find_first(); v >= 0; v = e.find_next(v)) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

SetFamily decode_family(std::istream& in) {
    int n, r;
    long long m;
    if (!(in >> n >> r >> m) || n < 0 || r < 0 || m < 0)
        throw std::invalid_argument("family: malformed header, expected 'n r m'");
    SetFamily f(n, r);
    f.edges.reserve(std::size_t(m));
    for (long long i = 0; i < m; ++i) {
        Bitset e(n);
        for (int j = 0; j < r; ++j) {
            int v;
            if (!(in >> v)) throw std::invalid_argument("family: truncated edge list");
            if (v < 0 || v >= n) throw std::invalid_argument("family: vertex out of range");
            if (e.test(v)) throw std::invalid_argument("family: repeated vertex in edge");
            e.set(v);
        }
        f.edges.push_back(std::move(e));
    }
    std::size_t before = f.edges.size();
    f.normalize();
    if (f.edges.size() != before) throw std::invalid_argument("family: duplicate edges");
    return f;
}

SetFamily decode_family(const std::string& text) {
    std::istringstream in(text);
    return decode_family(in);
}

SetFamily frankl_family(int n, int r, int t, FranklVariant variant) {
    if (t < 1 || r <= t) throw std::invalid_argument("frankl_family: need 1 <= t < r");
    if (variant == FranklVariant::I && n < r + 1)
        throw std::invalid_argument("frankl_family: variant I needs n >= r+1");
    if (variant == FranklVariant::II && n < t + 2)
        throw std::invalid_argument("frankl_family: variant II needs n >= t+2");

    Bitset s1(n), s2(n), s(n);
    for (int i = 0; i < t; ++i) s1.set(i);
    for (int i = t; i <= r && i < n; ++i) s2.set(i);
    for (int i = 0; i < t + 2; ++i) s.set(i);

    SetFamily f(n, r);
    for_each_subset(n, r, [&](const std::vector<int>& idx) {
        Bitset a(n);
        for (int v : idx) a.set(v);
        bool keep = false;
        if (variant == FranklVariant::I)
            keep = (s1.is_subset_of(a) && a.intersects(s2)) ||
                   (s2.is_subset_of(a) && a.intersection_count(s1) >= t - 1);
        else
            keep = a.intersection_count(s) >= t + 1;
        if (keep) f.edges.push_back(std::move(a));
    });
    // for_each_subset already emits in lex order
    return f;
}

} // namespace cliquefam
