#pragma once

#include "cliquefam/graph.hpp"
#include "cliquefam/set_family.hpp"

#include <functional>
#include <gmpxx.h>

namespace cliquefam {

mpz_class binomial(long long n, long long k);

/// Visit every r-clique of G whose vertices lie in `allowed`, as a Bitset, in
/// lex order of the ascending vertex tuple. r = 0 visits the empty set once.
void enumerate_cliques(const Graph& g, int r, const Bitset& allowed,
                       const std::function<void(const Bitset&)>& visit);

/// The associated r-graph H_G^r: vertex sets of all r-cliques, lex order.
SetFamily associated_r_graph(const Graph& g, int r);

/// N(K_r, G). r = 0 gives 1, r = 1 gives n. Top-level branches (first clique
/// vertex) may run on `threads` workers; the sum is order-independent.
mpz_class count_cliques(const Graph& g, int r, int threads = 1);

/// N(K_r, G[allowed]) without building the induced subgraph.
mpz_class count_cliques_within(const Graph& g, int r, const Bitset& allowed, int threads = 1);

/// N(K_r, T(n,t)) closed form: with a = n mod t parts of size ceil(n/t) and
/// t-a of size floor(n/t), sum over i of C(a,i) C(t-a,r-i) ceil^i floor^(r-i).
mpz_class turan_clique_count(long long n, int t, int r);

/// Subfamily of H_G^r containing the vertex set T: empty unless T induces a
/// clique, else T extended by every (r-|T|)-clique in the common neighborhood.
SetFamily cliques_containing(const Graph& g, int r, const Bitset& T);

} // namespace cliquefam
