#pragma once

// Decision procedures for the named loop identities, both over the whole
// carrier and in the subloop-restricted ("S2nd"/"S3rd") forms where one
// variable ranges over the designated subloop H only.
//
// Every check is an exhaustive quantifier sweep in a fixed order, so the
// first counterexample found is deterministic. Witness layouts:
//
//   BOL            (x, y, z)   (xy*z)y != x(yz*y)
//   S2_BOL         (x, z, s)   (xs*z)s != x(sz*s),          s in H
//   RIP            (x, y)      yx*x^rho != y
//   LIP            (x, y)      x^lambda*(xy) != y
//   S2_RIP         (y, s)      ys*s^rho != y,               s in H
//   S2_LIP         (y, s)      s^lambda*(sy) != y,          s in H
//   S3_RIP         (y, s)      sy*y^rho != s,               s in H
//   RAP            (x, y)      y*xx != yx*x
//   LAP            (x, y)      xx*y != x*(xy)
//   S2_RAP         (y, s)      y*ss != ys*s,                s in H
//   S2_LAP         (y, s)      ss*y != s*(sy),              s in H
//   RPAP           (x, y, n)   x*y^n != x shifted by y n times
//   S_RPAP         (x, s, n)   x*s^n != x shifted by s n times, s in H
//   NUCLEAR_SQUARE (s, x, y)   y*(x*ss) != (yx)*ss,         s in H
//   EXPONENT2      (s)         s*s != e,                    s in H
//
// IP/AP and their S2 forms are conjunctions; their witness comes from the
// first failing constituent, recorded in CheckResult::witness_prop.
// Exponent sweeps run n = 0..maxN, then n = -1..-maxN; negative powers use
// the right inverse.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "loops/subloop.hpp"

namespace loops {

enum class Prop {
    BOL, S2_BOL,
    RIP, LIP, IP, S2_RIP, S2_LIP, S2_IP, S3_RIP,
    RAP, LAP, AP, S2_RAP, S2_LAP, S2_AP,
    RPAP, S_RPAP,
    NUCLEAR_SQUARE, EXPONENT2,
};

inline constexpr Prop kAllProps[] = {
    Prop::BOL, Prop::S2_BOL,
    Prop::RIP, Prop::LIP, Prop::IP, Prop::S2_RIP, Prop::S2_LIP, Prop::S2_IP,
    Prop::S3_RIP,
    Prop::RAP, Prop::LAP, Prop::AP, Prop::S2_RAP, Prop::S2_LAP, Prop::S2_AP,
    Prop::RPAP, Prop::S_RPAP,
    Prop::NUCLEAR_SQUARE, Prop::EXPONENT2,
};

struct PropertyId {
    Prop tag;
    int max_n = 6;  // exponent bound, used by RPAP / S_RPAP only

    PropertyId(Prop t) : tag(t) {}  // NOLINT: implicit by design
    PropertyId(Prop t, int n) : tag(t), max_n(n) {}
};

struct UnsupportedProperty : LoopError {
    UnsupportedProperty() : LoopError("unknown property tag") {}
};

struct CheckResult {
    bool holds = true;
    std::optional<std::vector<int>> witness;  // layout per property, see above
    Prop witness_prop{};  // identity the witness violates (differs from the
                          // requested tag only for conjunction properties)
    std::uint64_t checked = 0;

    explicit operator bool() const { return holds; }
};

CheckResult check(const SpecialLoop& gh, PropertyId p);

// N_rho(G) = { a : y*(x*a) = (y*x)*a for all x, y }, sorted.
std::vector<Elem> right_nucleus(const Loop& l);

// N_rho(G) restricted to H, sorted.
std::vector<Elem> smarandache_right_nucleus(const SpecialLoop& gh);

const char* prop_name(Prop p);
std::optional<Prop> prop_from_name(std::string_view name);

}  // namespace loops
