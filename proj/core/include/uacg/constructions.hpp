#pragma once

// Explicit colorings and cliques of unitary addition Cayley graphs.

#include <cstdint>
#include <vector>

#include "uacg/coloring.hpp"
#include "uacg/ring.hpp"

namespace uacg {

// m + u(R)/2^m, the common value of the clique and chromatic numbers of U(R)
// for a ring of odd order with m local factors and u(R) units.
std::uint64_t theorem1_value(const RingSpec& ring);

// Optimal proper coloring of U(R), odd order. Classes A_1..A_m hold the
// non-units, A_i being those whose first coordinate inside a maximal ideal
// is the i-th. Units are grouped into B_1..B_tau, the orbits of per-coordinate
// negation, each of size 2^m.
Coloring theorem1_coloring(const RingSpec& ring);

// Half of the nonzero residue field elements: exactly one of each pair
// {x, -x} and never -1. Residue rings take {1, ..., (q-1)/2}; Galois fields
// walk the generator powers and keep the first of each pair.
std::vector<std::uint32_t> half_residue_set(const LocalFactor& factor);

// Maximum clique T u (S_1 x ... x S_m) of U(R), odd order, where S_i is the
// preimage of half_residue_set and T holds the m vectors with a single zero
// coordinate and ones elsewhere. Pairwise adjacency is checked before
// returning.
CliqueWitness theorem1_clique(const RingSpec& ring);

// Proper and complete coloring of U(Z_p x Z_q) with (pq+1)/2 classes,
// 3 <= p < q primes. Vertices are indexed as in zn:pq (CRT order). The
// result is verified proper and complete before it is returned.
Coloring theorem2_coloring(std::uint32_t p, std::uint32_t q);
// Same construction on a ring whose factors are exactly Z_p and Z_q.
Coloring theorem2_coloring(const RingSpec& ring);

// Even/odd residues of Z_n, n even.
Coloring bipartition_coloring(std::uint64_t n);

}  // namespace uacg
