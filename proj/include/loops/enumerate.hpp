#pragma once

// Exhaustive generation of all normalized loops of a given order (first row
// and column in natural order, so the identity is element 0), expansion into
// special-loop pairs, isomorph rejection via a canonical relabeling key, and
// the search for carriers that satisfy the subloop-restricted Bol identity
// without being Bol loops.

#include <cstdint>
#include <functional>
#include <vector>

#include "loops/properties.hpp"
#include "loops/subloop.hpp"

namespace loops {

inline constexpr int kEnumMaxOrder = 7;

// Streams every normalized loop of the order in lexicographic order of the
// flattened table. The callback returns false to stop early.
// Throws OrderTooLarge above kEnumMaxOrder.
void for_each_loop(int order, const std::function<bool(const Loop&)>& fn);

std::vector<Loop> enumerate_loops(int order);

// Streams every (loop, subloop) pair with |H| >= min_h, H = G included.
// Loops stream in enumeration order; each loop's subloops by size then
// lexicographically.
void for_each_special(int order, int min_h,
                      const std::function<bool(const SpecialLoop&)>& fn);

std::vector<SpecialLoop> enumerate_special(int order, int min_h = 2);

// Minimum flattened table over all relabelings that send the identity to
// element 0. Keys are equal exactly for isomorphic loops.
// Throws OrderTooLarge above kEnumMaxOrder.
std::vector<Elem> canonical_key(const Loop& l);

struct FindingFlags {
    bool s2_bol = false;
    bool bol = false;
    bool s2_rip = false;
    bool s2_rap = false;
    bool exponent2 = false;
};

struct Finding {
    Loop loop;
    std::vector<Elem> subloop;
    FindingFlags flags;
    std::vector<Elem> key;        // canonical key of the carrier
    std::vector<Elem> key_subloop;  // canonical image of the subloop
    int order = 0;
    std::uint64_t loop_index = 0;  // position in the enumeration stream
    bool exhaustive = true;
};

struct SearchOrderStats {
    int order = 0;
    std::uint64_t loops_scanned = 0;
    std::uint64_t pairs_scanned = 0;
    std::uint64_t findings = 0;
    bool exhaustive = true;
};

struct SearchOutcome {
    std::vector<Finding> findings;       // deduplicated, deterministic order
    std::vector<SearchOrderStats> per_order;
};

struct SearchOptions {
    int min_order = 1;
    int samples_per_order = 500;   // used beyond the exhaustive cap
    std::uint64_t seed = 0x5eedULL;
};

// Pairs (G, H) with the restricted Bol identity holding, the full Bol
// identity failing, |H| >= 2 and H != G. Exhaustive through order
// kEnumMaxOrder; beyond that falls back to seeded random sampling and the
// per-order stats say so.
SearchOutcome search_s2bl_not_bol(int max_order, const SearchOptions& opt = {});

}  // namespace loops
