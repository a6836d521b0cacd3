#pragma once

// Subloop machinery: closure of generating sets, enumeration of all subloops,
// and special loops (a carrier loop G together with a designated subloop H).

#include <vector>

#include "loops/cayley.hpp"

namespace loops {

struct NotClosed : LoopError {
    int s, t;  // s*t (or an inverse of s) lies outside the subset
    NotClosed(int a, int b)
        : LoopError("subset not closed: product of " + std::to_string(a) +
                    " and " + std::to_string(b) + " escapes it"),
          s(a), t(b) {}
};

struct TrivialSubloop : LoopError {
    TrivialSubloop() : LoopError("subloop must have at least 2 elements") {}
};

struct MissingIdentity : LoopError {
    MissingIdentity() : LoopError("subloop must contain the identity") {}
};

// A loop G with a designated subloop H. H must contain the identity and be
// closed under multiplication and both one-sided inverses. H = G is always
// permitted; a proper H must have at least 2 elements.
class SpecialLoop {
public:
    static SpecialLoop make(Loop loop, std::vector<int> subset);  // validates

    const Loop& loop() const { return loop_; }
    int order() const { return loop_.order(); }
    const std::vector<Elem>& subset() const { return subset_; }  // sorted
    int subloop_size() const { return int(subset_.size()); }
    bool in_subloop(int x) const { return mask_[static_cast<std::size_t>(x)]; }
    bool whole_carrier() const { return subloop_size() == order(); }

    // (H, *) re-indexed to 0..|H|-1 following the sorted subset order.
    Loop restricted() const;

private:
    SpecialLoop(Loop l, std::vector<Elem> subset, std::vector<bool> mask)
        : loop_(std::move(l)), subset_(std::move(subset)), mask_(std::move(mask)) {}

    Loop loop_;
    std::vector<Elem> subset_;
    std::vector<bool> mask_;
};

// Least subset containing seed and the identity, closed under multiplication
// and both one-sided inverses. Returned sorted.
std::vector<Elem> generated_subloop(const Loop& l, const std::vector<int>& seed);

// Every subloop (including {e} and G itself), sorted by size then
// lexicographically.
std::vector<std::vector<Elem>> all_subloops(const Loop& l);

// s*s = e for every s in H.
bool is_smarandache_exponent_two(const SpecialLoop& gh);

SpecialLoop make_special(Loop loop, std::vector<int> subset);

}  // namespace loops
