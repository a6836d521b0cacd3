#pragma once

// Machine verification of the toolkit's catalog of structural claims about
// special loops: implications that follow from the subloop-restricted Bol
// identity, the transform lemmas for one-sided autotopism sets, the
// autotopism factorization through pseudo-automorphisms, and the two
// experimental probes (closure of the pseudo-automorphism sets, and the
// search for carriers satisfying the restricted identity but not the full
// Bol identity).
//
// Each catalog entry yields a Verdict: `applicable` records whether the
// entry's hypothesis held on the given special loop, `conclusion` (present
// exactly when applicable) whether its claim checked out, and a failed
// conclusion carries a replayable counterexample. Q1 and Q2 are probes:
// their conclusion is always true and their findings land in `notes`.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loops/autotopism.hpp"
#include "loops/properties.hpp"
#include "loops/subloop.hpp"

namespace loops {

enum class TheoremId {
    R1, T1_4, T1_5, T1_6, C1_7, L1_8, L1_9, L1_10,
    T1_11, T1_12, T1_13, C1_14, C1_15, T1_16, T1_17,
    Q1, Q2,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::R1, TheoremId::T1_4, TheoremId::T1_5, TheoremId::T1_6,
    TheoremId::C1_7, TheoremId::L1_8, TheoremId::L1_9, TheoremId::L1_10,
    TheoremId::T1_11, TheoremId::T1_12, TheoremId::T1_13, TheoremId::C1_14,
    TheoremId::C1_15, TheoremId::T1_16, TheoremId::T1_17,
    TheoremId::Q1, TheoremId::Q2,
};

const char* theorem_name(TheoremId t);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct VerifyBounds {
    int exponent = 5;         // |n|, |m| cap for the power identities
    int search_max_order = 6; // exhaustive search cap used by Q2
};

struct Counterexample {
    std::string what;                // sub-claim label
    std::vector<int> elems;          // elements / exponents, layout per tag
    std::vector<Permutation> maps;   // permutations needed to replay
};

struct Verdict {
    TheoremId theorem;
    bool applicable = true;
    std::optional<bool> conclusion;        // present iff applicable
    std::optional<Counterexample> cex;     // present iff conclusion == false
    std::uint64_t instances = 0;           // quantifier instances examined
    std::vector<std::pair<std::string, std::string>> notes;

    bool failed() const { return conclusion.has_value() && !*conclusion; }
};

Verdict verify(const SpecialLoop& gh, TheoremId tag, const VerifyBounds& b = {});

struct TheoremTally {
    std::uint64_t applicable = 0;
    std::uint64_t held = 0;
    std::uint64_t failed = 0;
    std::uint64_t not_applicable = 0;
};

struct SweepFailure {
    std::size_t corpus_index;
    TheoremId theorem;
    Counterexample cex;
};

struct SweepReport {
    std::map<TheoremId, TheoremTally> tallies;
    std::vector<SweepFailure> failures;
    std::uint64_t corpus_size = 0;
};

// Runs every tag on every corpus member, tallying applicability and
// collecting all counterexamples in corpus order.
SweepReport sweep(const std::vector<SpecialLoop>& corpus,
                  const std::vector<TheoremId>& tags,
                  const VerifyBounds& b = {});

}  // namespace loops
