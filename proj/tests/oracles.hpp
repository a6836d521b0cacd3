#pragma once

// Test-side oracles, coded independently of the library internals they
// cross-check: a filter-everything reduced-table counter, a row-by-row
// second backtracker, fixpoint subset closure, power-set subloop filtering,
// repeated-multiplication powers, brute-force autotopism triples, pairwise
// isomorphism testing, and witness replay evaluators that touch only the
// multiplication table and inverse arrays.

#include <cstdint>
#include <vector>

#include "loops/autotopism.hpp"
#include "loops/cayley.hpp"
#include "loops/properties.hpp"
#include "loops/subloop.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;  // table[x][y] = x*y

Table to_table(const loops::Loop& l);
loops::Loop to_loop(const Table& t);

// Cyclic group of order n on 0..n-1 (addition mod n).
Table cyclic(int n);
// The Klein four-group.
Table klein();

bool is_latin(const Table& t);
bool is_reduced(const Table& t);  // row 0 and column 0 in natural order
bool has_two_sided_identity(const Table& t);

// Every reduced loop table of the order, produced by filtering every
// assignment of the free (n-1)^2 block. Usable through order 4.
std::vector<Table> filter_all_reduced_tables(int n);

// Second, structurally different enumerator: builds tables one whole row at
// a time from the lexicographic stream of row permutations. Usable through
// order 6.
std::uint64_t count_reduced_rowwise(int n);

// Fixpoint closure of seed + identity under products and inverse solving.
std::vector<int> closure_fixpoint(const Table& t, std::vector<int> seed);

// All subsets that contain the identity and are closed under products and
// both inverses, via the full power set. Usable through order ~16.
std::vector<std::vector<int>> subloops_powerset(const Table& t);

// s^k by plain repeated multiplication (negative k via the right inverse).
int power_repeated(const Table& t, int s, long k);

// Every (U, V, W) over all of SYM(G)^3 passing the S-bijection requirements
// of the kind plus the defining equation. Usable through order 4.
std::vector<loops::AutotopismTriple> brute_force_triples(
    const loops::SpecialLoop& gh, loops::TripleKind kind);

// Some bijection phi with phi(x*y) = phi(x) o phi(y)?
bool isomorphic(const Table& a, const Table& b);

// Re-evaluates the atomic identity at the witness through Loop::mul and the
// inverse arrays only; true when the violation reproduces.
bool replay_property_witness(const loops::SpecialLoop& gh, loops::Prop atomic,
                             const std::vector<int>& witness);

}  // namespace oracle
