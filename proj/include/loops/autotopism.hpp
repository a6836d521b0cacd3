#pragma once

// Permutation-triple machinery for special loops: membership tests and
// exhaustive enumeration of autotopism triples (full, right, left),
// semi-automorphisms, and pseudo-automorphisms with their companions.
//
// Conventions. Mappings act on the right and compose left-to-right, so the
// triple (U, V, W) of kind FULL means xU * yV = (xy)W for all x, y; kind
// RIGHT restricts y to the subloop H, kind LEFT restricts x to H. Kind
// membership additionally requires the stated components to be S-bijections
// (bijections of G mapping H onto H): all three for FULL, V for RIGHT,
// U for LEFT.
//
// Equation sweeps and witness layouts:
//   FULL   sweep x over G, then y over G;  witness (x, y)
//   RIGHT  sweep x over G, then s over H;  witness (x, s)
//   LEFT   sweep s over H, then y over G;  witness (s, y)
//   semi-automorphisms: S1st sweeps (x, y) over G*G, S2nd sweeps y over G
//   then s over H with witness (y, s); an empty witness tuple means the
//   fixed-point requirement eT = e itself failed.

#include <cstdint>
#include <functional>
#include <vector>

#include "loops/properties.hpp"
#include "loops/subloop.hpp"

namespace loops {

enum class TripleKind { FULL, RIGHT, LEFT };

struct AutotopismTriple {
    Permutation u, v, w;
    TripleKind kind;

    bool operator==(const AutotopismTriple&) const = default;
};

struct NotInSubloop : LoopError {
    NotInSubloop() : LoopError("element does not lie in the subloop") {}
};

struct NotSBijection : LoopError {
    NotSBijection() : LoopError("map does not take the subloop onto itself") {}
};

struct PreconditionPropertyMissing : LoopError {
    Prop required;
    explicit PreconditionPropertyMissing(Prop p)
        : LoopError(std::string("loop lacks required property ") + prop_name(p)),
          required(p) {}
};

bool is_s_bijection(const SpecialLoop& gh, const Permutation& p);

// Defining-equation sweep for the triple's kind; no S-bijection checks.
CheckResult triple_holds(const SpecialLoop& gh, const AutotopismTriple& t);

// Equation sweep plus the kind's S-bijection requirements.
bool triple_member(const SpecialLoop& gh, const AutotopismTriple& t);

// (R_s^-1, L_s R_s, R_s), kind FULL, unvalidated. s must lie in H.
AutotopismTriple bol_triple(const SpecialLoop& gh, int s);

// Complete, deterministic enumeration (lexicographic in (U, V) images).
// W is always derived from the defining equation, never enumerated.
// Throws OrderTooLarge above order 7.
std::vector<AutotopismTriple> enumerate_triples(const SpecialLoop& gh,
                                                TripleKind kind);

AutotopismTriple compose_triples(const AutotopismTriple& a,
                                 const AutotopismTriple& b);
AutotopismTriple invert_triple(const AutotopismTriple& a);

// (U,V,W) right member of a loop with the subloop-restricted right inverse
// property maps to the right member (W, Jrho V Jrho, U); the left-hand
// analogue maps (U,V,W) to (Jlambda U Jlambda, W, V).
AutotopismTriple reflect_right_triple(const SpecialLoop& gh,
                                      const AutotopismTriple& t);
AutotopismTriple reflect_left_triple(const SpecialLoop& gh,
                                     const AutotopismTriple& t);

// eT = e and (xy*x)T = (xT*yT)xT over all of G.
CheckResult is_s1_semi_automorphism(const SpecialLoop& gh, const Permutation& t);
// eT = e and (sy*s)T = (sT*yT)sT for y in G, s in H.
CheckResult is_s2_semi_automorphism(const SpecialLoop& gh, const Permutation& t);

enum class SaiplKind { FIRST, SECOND };

// Is J_rho a semi-automorphism of the requested flavour?
CheckResult saipl_check(const SpecialLoop& gh, SaiplKind kind);

enum class CompanionKind { FIRST, RIGHT, LEFT };

struct CompanionRecord {
    Permutation map;
    std::vector<Elem> companions;  // all c in H making (A, A R_c, A R_c) a member
    CompanionKind kind;
};

CompanionRecord pseudo_automorphism_companions(const SpecialLoop& gh,
                                               const Permutation& a,
                                               CompanionKind kind);

// --- enumeration kernels -------------------------------------------------
//
// A right member (U, V, W) is determined by U and V(e) except for V's values
// off H, which are a free bijection of the complement; symmetrically a left
// member is free in U off H. Kernel iteration visits each member class once,
// which is what corpus-scale theorem sweeps need. v_on_h[i] (u_on_h[i]) is
// the image of subset()[i].

struct RightKernel {
    const Permutation& u;
    const std::vector<Elem>& v_on_h;
    const Permutation& w;
};
struct LeftKernel {
    const std::vector<Elem>& u_on_h;
    const Permutation& v;
    const Permutation& w;
};

void for_each_right_kernel(const SpecialLoop& gh,
                           const std::function<void(const RightKernel&)>& fn);
void for_each_left_kernel(const SpecialLoop& gh,
                          const std::function<void(const LeftKernel&)>& fn);

// Members of both the right and the left set. Fully determined by U (an
// S-bijection) and V(e), so no free parts; emitted with kind RIGHT.
void for_each_right_left_member(
    const SpecialLoop& gh,
    const std::function<void(const AutotopismTriple&)>& fn);

// All n! permutations of 0..n-1 in lexicographic order (cached, n <= 8).
const std::vector<Permutation>& all_permutations(int n);

// The S-bijections of gh in lexicographic order.
std::vector<Permutation> s_bijections(const SpecialLoop& gh);

}  // namespace loops
