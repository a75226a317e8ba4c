#include "cliquefam/bounds.hpp"

#include "cliquefam/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliquefam {

APClass classify_ap(int r, const std::vector<int>& L) {
    if (L.empty()) throw std::invalid_argument("classify_ap: L empty");
    for (std::size_t i = 0; i + 1 < L.size(); ++i)
        if (L[i] >= L[i + 1]) throw std::invalid_argument("classify_ap: L not strictly increasing");
    if (L.front() < 0 || L.back() >= r) throw std::invalid_argument("classify_ap: L not within [0, r-1]");

    APClass cls;
    cls.size_flagged = L.size() == 1 || int(L.size()) == r;
    int s = int(L.size());
    int d = r - L.back();
    bool ap = true;
    for (int i = 0; i + 1 < s; ++i)
        if (L[i + 1] - L[i] != d) ap = false;
    if (ap) {
        cls.kind = APKind::AP;
        cls.d = d;
    } else if (s >= 2 && r - L.back() == L.back() - L[s - 2]) {
        cls.kind = APKind::NotApLastGapEqual;
    } else {
        cls.kind = APKind::NotApLastGapDiffers;
    }
    return cls;
}

BoundReport def_bound(long long n, int r, const std::vector<int>& L) {
    for (int l : L)
        if (l < 0 || l >= r) throw std::invalid_argument("def_bound: L not within [0, r-1]");
    mpq_class v = 1;
    for (int l : L) v *= mpq_class(mpz_class((long)n - l), mpz_class(r - l));
    v.canonicalize();
    return {"def_bound", v, "valid for n >= 2^r * r^3 (Deza-Erdos-Frankl regime)"};
}

BoundReport helliar_liu_bound(long long n, int r, const std::vector<int>& L) {
    if (L.size() < 2 || int(L.size()) > r - 1)
        throw std::invalid_argument("helliar_liu_bound: requires 2 <= |L| <= r-1");
    mpq_class v = mpq_class(3 * r - 1, 3 * r) * def_bound(n, r, L).value;
    v.canonicalize();
    return {"helliar_liu_bound", v, "valid for n >= (2r)^(r+1)"};
}

BoundReport ap_exact_value(long long n, int r, const std::vector<int>& L) {
    APClass cls = classify_ap(r, L);
    if (cls.kind != APKind::AP)
        throw std::invalid_argument("ap_exact_value: L together with r is not an arithmetic progression");
    int s = int(L.size());
    long long m = (n - L.front()) / cls.d;
    mpz_class v = turan_clique_count(m, s, s);
    return {"ap_exact_value", mpq_class(v), "exact for n beyond an unspecified threshold n_1.3(r,L)"};
}

BoundReport hm_value(long long n, int r, int t) {
    if (!(r > t && t >= 1 && r - t - 1 >= 1 && n >= t + 2))
        throw std::invalid_argument("hm_value: need r > t >= 1, r-t-1 >= 1, n >= t+2");
    mpz_class v = turan_clique_count(n - t - 2, r - t - 1, r - t - 2) +
                  mpz_class(t + 2) * turan_clique_count(n - t - 2, r - t - 1, r - t - 1);
    return {"hm_value", mpq_class(v), "exact maximum over non-trivial (K_r,t)-intersecting graphs for large n"};
}

BoundReport recursive_bound(long long n, int r, const std::vector<int>& L, int i, const mpq_class& c,
                            const PhiOracle& phi, const PsiOracle& psi) {
    int s = int(L.size());
    if (i < 1 || i > s) throw std::invalid_argument("recursive_bound: i out of [1, s]");
    if (c <= 0) throw std::invalid_argument("recursive_bound: c must be positive");
    int li = L[std::size_t(i) - 1];

    std::vector<int> without;
    for (int j = 0; j < s; ++j)
        if (j != i - 1) without.push_back(L[std::size_t(j)]);
    std::vector<int> prefix(L.begin(), L.begin() + (i - 1));
    std::vector<int> shifted{0};
    for (int j = i; j < s; ++j) shifted.push_back(L[std::size_t(j)] - li);

    mpz_class first = phi(n, r, without);
    mpz_class second = phi(n, li, prefix) * psi(n - li, r - li, shifted);
    mpq_class v = mpq_class(std::max(first, second)) / c;
    v.canonicalize();
    std::string note = "combine with caller-chosen c (the paper's c(r) is non-constructive)";
    if (li == 0) note += "; degenerate: l_i = 0 makes the second factor Psi_r(n, L) itself";
    return {"recursive_bound", v, note};
}

bool is_prime_power(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    return true; // q itself prime
}

std::optional<long long> find_prime_power(long long l2, long long l3) {
    if (l3 < 2) return std::nullopt;
    long long best = 0;
    long long rest = l3;
    auto consider = [&](long long p) {
        long long pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            if ((2 * l2) % pk != 0 && (best == 0 || pk < best)) best = pk;
        }
    };
    for (long long p = 2; p * p <= rest; ++p)
        if (rest % p == 0) consider(p);
    if (rest > 1) consider(rest);
    if (best == 0) return std::nullopt;
    return best;
}

static void check_lmod(long long q, const std::vector<int>& Lmod) {
    if (!is_prime_power(q)) throw std::invalid_argument("mod_q: q is not a prime power");
    for (int l : Lmod)
        if (l < 0 || l >= q) throw std::invalid_argument("mod_q: Lmod not within [0, q-1]");
}

bool mod_q_applicable(long long q, int r, const std::vector<int>& Lmod) {
    check_lmod(q, Lmod);
    int rm = int(((r % q) + q) % q);
    return std::find(Lmod.begin(), Lmod.end(), rm) == Lmod.end();
}

bool family_mod_q_ok(const SetFamily& f, long long q, const std::vector<int>& Lmod) {
    check_lmod(q, Lmod);
    for (std::size_t i = 0; i < f.edges.size(); ++i)
        for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
            int c = int(f.edges[i].intersection_count(f.edges[j]) % q);
            if (std::find(Lmod.begin(), Lmod.end(), c) == Lmod.end()) return false;
        }
    return true;
}

} // namespace cliquefam
