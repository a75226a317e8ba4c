#pragma once

#include "cliquefam/intersect.hpp"
#include "cliquefam/set_family.hpp"

#include <functional>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace cliquefam {

enum class APKind {
    AP,                      // l1..ls, r equally spaced
    NotApLastGapDiffers,     // r - ls != ls - l(s-1)
    NotApLastGapEqual,       // not an AP but the last two gaps agree
};

struct APClass {
    APKind kind = APKind::AP;
    int d = 0;                // common difference, valid when kind == AP
    bool size_flagged = false; // |L| in {1, r}: outside the theorem's hypothesis
};

APClass classify_ap(int r, const std::vector<int>& L);

/// Exact value plus a free-text validity note; no floating point anywhere.
struct BoundReport {
    std::string name;
    mpq_class value;
    std::string applicability;
};

/// prod over l in L of (n-l)/(r-l); the empty product is 1.
BoundReport def_bound(long long n, int r, const std::vector<int>& L);

/// (1 - 1/(3r)) times def_bound; rejects |L| in {1, r}.
BoundReport helliar_liu_bound(long long n, int r, const std::vector<int>& L);

/// N(K_s, T(floor((n-l1)/d), s)) for AP specs; rejects non-AP input.
BoundReport ap_exact_value(long long n, int r, const std::vector<int>& L);

/// N(K_{r-t-2}, T(n-t-2, r-t-1)) + (t+2) N(K_{r-t-1}, T(n-t-2, r-t-1)),
/// with N(K_0, .) = 1.
BoundReport hm_value(long long n, int r, int t);

using PhiOracle = std::function<mpz_class(long long n, int r, const std::vector<int>& L)>;
using PsiOracle = std::function<mpz_class(long long n, int r, const std::vector<int>& L)>;

/// Recursive combinator: c^-1 * max{ Phi_r(n, L \ {l_i}),
/// Phi_{l_i}(n, {l_1..l_{i-1}}) * Psi_{r-l_i}(n-l_i, {0, l_{i+1}-l_i, ...}) }.
/// i is 1-based; c > 0 supplied by the caller. The report notes the l_i = 0
/// degenerate shape when it applies.
BoundReport recursive_bound(long long n, int r, const std::vector<int>& L, int i, const mpq_class& c,
                            const PhiOracle& phi, const PsiOracle& psi);

bool is_prime_power(long long q);

/// Smallest prime power q with q | l3 and q does not divide 2*l2, when one
/// exists (guaranteed for 0 < l2 < l3 with l3 != 2*l2).
std::optional<long long> find_prime_power(long long l2, long long l3);

/// r mod q lies outside Lmod. Throws unless q is a prime power >= 2.
bool mod_q_applicable(long long q, int r, const std::vector<int>& Lmod);

/// |A ∩ B| mod q lies in Lmod for every distinct pair.
bool family_mod_q_ok(const SetFamily& f, long long q, const std::vector<int>& Lmod);

} // namespace cliquefam
