#include "loops/theorems.hpp"

#include <map>
#include <set>
#include <sstream>

#include "loops/enumerate.hpp"

namespace loops {

const char* theorem_name(TheoremId t) {
    switch (t) {
        case TheoremId::R1: return "R1";
        case TheoremId::T1_4: return "T1_4";
        case TheoremId::T1_5: return "T1_5";
        case TheoremId::T1_6: return "T1_6";
        case TheoremId::C1_7: return "C1_7";
        case TheoremId::L1_8: return "L1_8";
        case TheoremId::L1_9: return "L1_9";
        case TheoremId::L1_10: return "L1_10";
        case TheoremId::T1_11: return "T1_11";
        case TheoremId::T1_12: return "T1_12";
        case TheoremId::T1_13: return "T1_13";
        case TheoremId::C1_14: return "C1_14";
        case TheoremId::C1_15: return "C1_15";
        case TheoremId::T1_16: return "T1_16";
        case TheoremId::T1_17: return "T1_17";
        case TheoremId::Q1: return "Q1";
        case TheoremId::Q2: return "Q2";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId t : kAllTheorems)
        if (name == theorem_name(t)) return t;
    return std::nullopt;
}

namespace {

Verdict verdict_inapplicable(TheoremId t, const std::string& why,
                             std::uint64_t inst) {
    Verdict v;
    v.theorem = t;
    v.applicable = false;
    v.instances = inst;
    v.notes.emplace_back("hypothesis", why);
    return v;
}

Verdict verdict_pass(TheoremId t, std::uint64_t inst) {
    Verdict v;
    v.theorem = t;
    v.applicable = true;
    v.conclusion = true;
    v.instances = inst;
    return v;
}

Verdict verdict_fail(TheoremId t, std::uint64_t inst, Counterexample cex) {
    Verdict v;
    v.theorem = t;
    v.applicable = true;
    v.conclusion = false;
    v.cex = std::move(cex);
    v.instances = inst;
    return v;
}

std::string perm_str(const Permutation& p) {
    std::string s;
    for (int i = 0; i < p.order(); ++i) {
        if (i) s += ' ';
        s += std::to_string(int(p(i)));
    }
    return s;
}

// s^n for n in [lo, hi], built once per pivot
struct PowerTable {
    long lo;
    std::vector<Elem> tab;
    PowerTable(const Loop& l, int s, long lo_, long hi_) : lo(lo_) {
        for (long n = lo_; n <= hi_; ++n) tab.push_back(l.power(s, n));
    }
    Elem at(long n) const { return tab[static_cast<std::size_t>(n - lo)]; }
};

Verdict verify_r1(const SpecialLoop& gh) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::R1, "S2_BOL fails", hyp.checked);
    Loop h = gh.restricted();
    std::vector<int> full(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i) full[static_cast<std::size_t>(i)] = i;
    auto res = check(SpecialLoop::make(h, full), Prop::BOL);
    std::uint64_t inst = hyp.checked + res.checked;
    if (res.holds) return verdict_pass(TheoremId::R1, inst);
    const std::vector<Elem>& sub = gh.subset();
    Counterexample cex;
    cex.what = "BOL-on-subloop";
    for (int w : *res.witness) cex.elems.push_back(sub[static_cast<std::size_t>(w)]);
    return verdict_fail(TheoremId::R1, inst, std::move(cex));
}

Verdict verify_t14(const SpecialLoop& gh) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_4, "S2_BOL fails", hyp.checked);
    std::uint64_t inst = hyp.checked;
    for (Prop p : {Prop::S2_RIP, Prop::S2_RAP}) {
        auto res = check(gh, p);
        inst += res.checked;
        if (!res.holds)
            return verdict_fail(TheoremId::T1_4, inst,
                                Counterexample{prop_name(p), *res.witness, {}});
    }
    return verdict_pass(TheoremId::T1_4, inst);
}

Verdict verify_t15(const SpecialLoop& gh, int bound) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_5, "S2_BOL fails", hyp.checked);
    const Loop& l = gh.loop();
    std::uint64_t inst = hyp.checked;
    std::vector<PowerTable> pows;
    for (Elem s : gh.subset()) pows.emplace_back(l, s, -long(bound) - 1, bound);
    for (int x = 0; x < l.order(); ++x)
        for (std::size_t i = 0; i < gh.subset().size(); ++i) {
            Elem s = gh.subset()[i];
            for (long n = -bound; n <= bound; ++n) {
                ++inst;
                // x s^n = (x s^(n-1)) s = (x s) s^(n-1)
                Elem lhs = l.mul(x, pows[i].at(n));
                Elem mid = l.mul(l.mul(x, pows[i].at(n - 1)), s);
                Elem rhs = l.mul(l.mul(x, s), pows[i].at(n - 1));
                if (lhs != mid || lhs != rhs)
                    return verdict_fail(
                        TheoremId::T1_5, inst,
                        Counterexample{"power-shift", {x, s, int(n)}, {}});
            }
        }
    return verdict_pass(TheoremId::T1_5, inst);
}

Verdict verify_t16(const SpecialLoop& gh, int bound) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_6, "S2_BOL fails", hyp.checked);
    const Loop& l = gh.loop();
    std::uint64_t inst = hyp.checked;
    std::vector<PowerTable> pows;
    for (Elem s : gh.subset())
        pows.emplace_back(l, s, -2L * bound, 2L * bound);
    for (int x = 0; x < l.order(); ++x)
        for (std::size_t i = 0; i < gh.subset().size(); ++i) {
            Elem s = gh.subset()[i];
            for (long m = -bound; m <= bound; ++m)
                for (long n = -bound; n <= bound; ++n) {
                    ++inst;
                    // (x s^m) s^n = x s^(m+n)
                    if (l.mul(l.mul(x, pows[i].at(m)), pows[i].at(n)) !=
                        l.mul(x, pows[i].at(m + n)))
                        return verdict_fail(TheoremId::T1_6, inst,
                                            Counterexample{"power-sum",
                                                           {x, s, int(m), int(n)},
                                                           {}});
                }
        }
    return verdict_pass(TheoremId::T1_6, inst);
}

Verdict verify_c17(const SpecialLoop& gh, int bound) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::C1_7, "S2_BOL fails", hyp.checked);
    auto res = check(gh, PropertyId(Prop::S_RPAP, bound));
    std::uint64_t inst = hyp.checked + res.checked;
    if (res.holds) return verdict_pass(TheoremId::C1_7, inst);
    return verdict_fail(TheoremId::C1_7, inst,
                        Counterexample{"S_RPAP", *res.witness, {}});
}

// Sorted-position lookup for subloop elements.
std::vector<int> subloop_positions(const SpecialLoop& gh) {
    std::vector<int> pos(static_cast<std::size_t>(gh.order()), -1);
    for (std::size_t i = 0; i < gh.subset().size(); ++i)
        pos[gh.subset()[i]] = int(i);
    return pos;
}

Permutation extend_on_complement(const SpecialLoop& gh,
                                 const std::vector<Elem>& on_h) {
    std::vector<Elem> img(static_cast<std::size_t>(gh.order()));
    for (int x = 0; x < gh.order(); ++x) img[static_cast<std::size_t>(x)] = Elem(x);
    for (std::size_t i = 0; i < gh.subset().size(); ++i)
        img[gh.subset()[i]] = on_h[i];
    return Permutation(std::move(img));
}

Verdict verify_l18(const SpecialLoop& gh) {
    const Loop& l = gh.loop();
    const int n = l.order();
    std::uint64_t inst = 0;
    std::uint64_t full_members = 0, right_kernels = 0, left_kernels = 0;
    std::uint64_t right_h_stable = 0, left_h_stable = 0;
    std::uint64_t anomalies = 0;
    std::optional<Counterexample> bad;

    // Full members are autotopisms of the carrier by definition; re-check
    // the equation anyway and verify their restrictions act on H.
    for (const AutotopismTriple& t : enumerate_triples(gh, TripleKind::FULL)) {
        ++full_members;
        for (int x = 0; x < n && !bad; ++x)
            for (int y = 0; y < n; ++y) {
                ++inst;
                if (l.mul(t.u(x), t.v(y)) != t.w(l.mul(x, y))) {
                    bad = Counterexample{"full-member-not-autotopism",
                                         {x, y},
                                         {t.u, t.v, t.w}};
                    break;
                }
            }
        if (bad) break;
        for (Elem a : gh.subset())
            for (Elem b : gh.subset()) {
                ++inst;
                if (l.mul(t.u(a), t.v(b)) != t.w(l.mul(a, b))) ++anomalies;
            }
    }

    auto positions = subloop_positions(gh);
    if (!bad) {
        for_each_right_kernel(gh, [&](const RightKernel& k) {
            ++right_kernels;
            bool stable = true;
            for (Elem a : gh.subset())
                if (!gh.in_subloop(k.u(a)) || !gh.in_subloop(k.w(a)))
                    stable = false;
            if (stable) {
                ++right_h_stable;
                // restriction must be an autotopism of (H, *)
                for (Elem a : gh.subset())
                    for (Elem b : gh.subset()) {
                        ++inst;
                        if (l.mul(k.u(a), k.v_on_h[static_cast<std::size_t>(positions[b])]) !=
                            k.w(l.mul(a, b)))
                            ++anomalies;
                    }
            }
        });
        for_each_left_kernel(gh, [&](const LeftKernel& k) {
            ++left_kernels;
            bool stable = true;
            for (Elem a : gh.subset())
                if (!gh.in_subloop(k.v(a)) || !gh.in_subloop(k.w(a)))
                    stable = false;
            if (stable) {
                ++left_h_stable;
                for (Elem a : gh.subset())
                    for (Elem b : gh.subset()) {
                        ++inst;
                        if (l.mul(k.u_on_h[static_cast<std::size_t>(positions[a])], k.v(b)) !=
                            k.w(l.mul(a, b)))
                            ++anomalies;
                    }
            }
        });
    }

    Verdict v;
    v.theorem = TheoremId::L1_8;
    v.applicable = true;
    v.instances = inst;
    v.notes.emplace_back("full_members", std::to_string(full_members));
    v.notes.emplace_back("right_kernels", std::to_string(right_kernels));
    v.notes.emplace_back("right_h_stabilizing", std::to_string(right_h_stable));
    v.notes.emplace_back("left_kernels", std::to_string(left_kernels));
    v.notes.emplace_back("left_h_stabilizing", std::to_string(left_h_stable));
    v.notes.emplace_back("restriction_anomalies", std::to_string(anomalies));
    if (bad) {
        v.conclusion = false;
        v.cex = std::move(bad);
    } else {
        v.conclusion = anomalies == 0;
        if (anomalies)
            v.cex = Counterexample{"restriction-equation", {}, {}};
    }
    return v;
}

Verdict verify_l19(const SpecialLoop& gh) {
    std::uint64_t inst = 0;
    for (TripleKind kind : {TripleKind::RIGHT, TripleKind::LEFT}) {
        std::vector<AutotopismTriple> members = enumerate_triples(gh, kind);
        std::map<std::pair<std::vector<Elem>, std::vector<Elem>>,
                 std::vector<Elem>>
            index;
        for (const AutotopismTriple& t : members)
            index[{t.u.image(), t.v.image()}] = t.w.image();
        const char* label =
            kind == TripleKind::RIGHT ? "right-set" : "left-set";

        Permutation id = Permutation::identity(gh.order());
        ++inst;
        auto it = index.find({id.image(), id.image()});
        if (it == index.end() || it->second != id.image())
            return verdict_fail(TheoremId::L1_9, inst,
                                Counterexample{std::string(label) +
                                                   "-missing-identity",
                                               {},
                                               {}});
        for (const AutotopismTriple& t : members) {
            ++inst;
            AutotopismTriple ti = invert_triple(t);
            auto jt = index.find({ti.u.image(), ti.v.image()});
            if (jt == index.end() || jt->second != ti.w.image())
                return verdict_fail(TheoremId::L1_9, inst,
                                    Counterexample{std::string(label) +
                                                       "-inverse-escapes",
                                                   {},
                                                   {t.u, t.v, t.w}});
        }
        for (const AutotopismTriple& a : members)
            for (const AutotopismTriple& b : members) {
                ++inst;
                AutotopismTriple ab = compose_triples(a, b);
                auto jt = index.find({ab.u.image(), ab.v.image()});
                if (jt == index.end() || jt->second != ab.w.image())
                    return verdict_fail(
                        TheoremId::L1_9, inst,
                        Counterexample{std::string(label) + "-composition-escapes",
                                       {},
                                       {a.u, a.v, a.w, b.u, b.v, b.w}});
            }
    }
    return verdict_pass(TheoremId::L1_9, inst);
}

Verdict verify_l110(const SpecialLoop& gh) {
    const Loop& l = gh.loop();
    const int n = l.order();
    bool rip = check(gh, Prop::S2_RIP).holds;
    bool lip = check(gh, Prop::S2_LIP).holds;
    if (!rip && !lip)
        return verdict_inapplicable(TheoremId::L1_10,
                                    "neither S2_RIP nor S2_LIP holds", 0);
    std::uint64_t inst = 0;
    std::optional<Counterexample> bad;
    auto positions = subloop_positions(gh);
    const std::vector<Elem>& sub = gh.subset();

    if (rip) {
        // (U, V, W) right member  =>  (W, Jrho V Jrho, U) right member
        for_each_right_kernel(gh, [&](const RightKernel& k) {
            if (bad) return;
            std::vector<Elem> tv(sub.size());
            for (std::size_t i = 0; i < sub.size(); ++i) {
                Elem srho = l.right_inv(sub[i]);
                tv[i] = l.right_inv(k.v_on_h[static_cast<std::size_t>(positions[srho])]);
            }
            for (int x = 0; x < n && !bad; ++x)
                for (std::size_t i = 0; i < sub.size(); ++i) {
                    ++inst;
                    if (l.mul(k.w(x), tv[i]) != k.u(l.mul(x, sub[i]))) {
                        bad = Counterexample{
                            "right-transform",
                            {x, sub[i]},
                            {k.u, extend_on_complement(gh, k.v_on_h), k.w}};
                        break;
                    }
                }
        });
    }
    if (lip && !bad) {
        // (U, V, W) left member  =>  (Jlambda U Jlambda, W, V) left member
        for_each_left_kernel(gh, [&](const LeftKernel& k) {
            if (bad) return;
            std::vector<Elem> tu(sub.size());
            for (std::size_t i = 0; i < sub.size(); ++i) {
                Elem slam = l.left_inv(sub[i]);
                tu[i] = l.left_inv(
                    k.u_on_h[static_cast<std::size_t>(positions[slam])]);
            }
            for (std::size_t i = 0; i < sub.size() && !bad; ++i)
                for (int y = 0; y < n; ++y) {
                    ++inst;
                    if (l.mul(tu[i], k.w(y)) != k.v(l.mul(sub[i], y))) {
                        bad = Counterexample{
                            "left-transform",
                            {sub[i], y},
                            {extend_on_complement(gh, k.u_on_h), k.v, k.w}};
                        break;
                    }
                }
        });
    }

    Verdict v;
    v.theorem = TheoremId::L1_10;
    v.applicable = true;
    v.instances = inst;
    v.notes.emplace_back("right_part", rip ? "checked" : "hypothesis-missing");
    v.notes.emplace_back("left_part", lip ? "checked" : "hypothesis-missing");
    v.conclusion = !bad.has_value();
    if (bad) v.cex = std::move(bad);
    return v;
}

Verdict verify_t111(const SpecialLoop& gh) {
    auto lhs = check(gh, Prop::S2_BOL);
    std::uint64_t inst = lhs.checked;
    bool rhs = true;
    int first_bad = -1;
    for (Elem s : gh.subset()) {
        AutotopismTriple t = bol_triple(gh, s);
        auto res = triple_holds(gh, t);
        inst += res.checked;
        bool member = res.holds && is_s_bijection(gh, t.u) &&
                      is_s_bijection(gh, t.v) && is_s_bijection(gh, t.w);
        if (!member) {
            rhs = false;
            first_bad = s;
            break;
        }
    }
    Verdict v;
    v.theorem = TheoremId::T1_11;
    v.applicable = true;
    v.instances = inst;
    v.notes.emplace_back("identity_side", lhs.holds ? "holds" : "fails");
    v.notes.emplace_back("triple_side", rhs ? "holds" : "fails");
    v.notes.emplace_back("failing_pivot",
                         first_bad < 0 ? "none" : std::to_string(first_bad));
    v.conclusion = lhs.holds == rhs;
    if (!*v.conclusion) {
        Counterexample cex;
        cex.what = "equivalence-mismatch";
        if (lhs.witness) cex.elems = *lhs.witness;
        if (first_bad >= 0) cex.elems.push_back(first_bad);
        v.cex = std::move(cex);
    }
    return v;
}

Verdict verify_t112(const SpecialLoop& gh) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_12, "S2_BOL fails",
                                    hyp.checked);
    auto saipl = saipl_check(gh, SaiplKind::SECOND);
    auto s3 = check(gh, Prop::S3_RIP);
    std::uint64_t inst = hyp.checked + saipl.checked + s3.checked;
    if (saipl.holds == s3.holds) return verdict_pass(TheoremId::T1_12, inst);
    Counterexample cex;
    cex.what = "saipl-s3rip-mismatch";
    cex.elems = {saipl.holds ? 1 : 0, s3.holds ? 1 : 0};
    const auto& w = saipl.holds ? s3.witness : saipl.witness;
    if (w)
        cex.elems.insert(cex.elems.end(), w->begin(), w->end());
    return verdict_fail(TheoremId::T1_12, inst, std::move(cex));
}

Verdict verify_t113(const SpecialLoop& gh) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_13, "S2_BOL fails",
                                    hyp.checked);
    std::uint64_t inst = hyp.checked;
    std::uint64_t diagonal = 0;
    for (const AutotopismTriple& t : enumerate_triples(gh, TripleKind::FULL)) {
        if (t.u != t.w) continue;
        ++diagonal;
        auto res = is_s2_semi_automorphism(gh, t.v);
        inst += res.checked;
        if (!res.holds)
            return verdict_fail(TheoremId::T1_13, inst,
                                Counterexample{"s2-semi-automorphism",
                                               *res.witness,
                                               {t.u, t.v, t.w}});
    }
    Verdict v = verdict_pass(TheoremId::T1_13, inst);
    v.notes.emplace_back("diagonal_members", std::to_string(diagonal));
    return v;
}

Verdict verify_c114_c115(const SpecialLoop& gh, TheoremId id, Prop extra) {
    auto hyp1 = check(gh, Prop::S2_BOL);
    if (!hyp1.holds)
        return verdict_inapplicable(id, "S2_BOL fails", hyp1.checked);
    auto hyp2 = check(gh, extra);
    if (!hyp2.holds)
        return verdict_inapplicable(
            id, std::string(prop_name(extra)) + " fails",
            hyp1.checked + hyp2.checked);
    const Loop& l = gh.loop();
    std::uint64_t inst = hyp1.checked + hyp2.checked;
    for (Elem s : gh.subset()) {
        Permutation t =
            compose(l.left_translation(s), inverse(l.right_translation(s)));
        auto res = is_s2_semi_automorphism(gh, t);
        inst += res.checked;
        if (!res.holds) {
            Counterexample cex;
            cex.what = "ls-rsinv-not-semi";
            cex.elems = {int(s)};
            if (res.witness)
                cex.elems.insert(cex.elems.end(), res.witness->begin(),
                                 res.witness->end());
            cex.maps = {t};
            return verdict_fail(id, inst, std::move(cex));
        }
    }
    return verdict_pass(id, inst);
}

// One factorization step shared by the full and the one-sided variants:
// A = U R_{s1}^{-1} must be a pseudo-automorphism with companion
// c = (s1 s2) s1 and (U,V,W) must equal (A, A R_c, A R_c) composed with the
// inverse of the pivot triple of s1.
struct FactorizationCheck {
    bool ok = true;
    std::string what;
    Permutation a;
    Elem s1 = 0, s2 = 0, c = 0;

    FactorizationCheck(const SpecialLoop& gh, const Permutation& u,
                       const Permutation& v, const Permutation& w,
                       TripleKind membership_kind, std::uint64_t& inst)
        : a(Permutation::identity(gh.order())) {
        const Loop& l = gh.loop();
        s1 = u(l.identity());
        s2 = v(l.identity());
        if (!gh.in_subloop(s1) || !gh.in_subloop(s2)) {
            ok = false;
            what = "translation-elements-outside-subloop";
            return;
        }
        Permutation rs1 = l.right_translation(s1);
        a = compose(u, inverse(rs1));
        c = l.mul(l.mul(s1, s2), s1);
        if (!gh.in_subloop(c)) {
            ok = false;
            what = "companion-outside-subloop";
            return;
        }
        Permutation arc = compose(a, l.right_translation(c));
        if (membership_kind == TripleKind::FULL) {
            AutotopismTriple pa{a, arc, arc, TripleKind::FULL};
            inst += gh.order() * std::uint64_t(gh.order());
            if (!triple_member(gh, pa)) {
                ok = false;
                what = "companion-triple-not-member";
                return;
            }
        } else {
            AutotopismTriple pr{a, arc, arc, TripleKind::RIGHT};
            AutotopismTriple pl{a, arc, arc, TripleKind::LEFT};
            inst += 2 * gh.order() * std::uint64_t(gh.subloop_size());
            if (!triple_member(gh, pr) || !triple_member(gh, pl)) {
                ok = false;
                what = "companion-triple-not-member";
                return;
            }
        }
        // (U,V,W) = (A, A R_c, A R_c)(R_s1^{-1}, L_s1 R_s1, R_s1)^{-1}
        Permutation bu = rs1;
        Permutation bv = inverse(compose(l.left_translation(s1), rs1));
        Permutation bw = inverse(rs1);
        if (compose(a, bu) != u || compose(arc, bv) != v ||
            compose(arc, bw) != w) {
            ok = false;
            what = "factorization-mismatch";
        }
    }
};

Verdict verify_t116(const SpecialLoop& gh) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_16, "S2_BOL fails",
                                    hyp.checked);
    std::uint64_t inst = hyp.checked;
    std::uint64_t members = 0;
    for (const AutotopismTriple& t : enumerate_triples(gh, TripleKind::FULL)) {
        ++members;
        FactorizationCheck fc(gh, t.u, t.v, t.w, TripleKind::FULL, inst);
        if (!fc.ok)
            return verdict_fail(TheoremId::T1_16, inst,
                                Counterexample{fc.what,
                                               {fc.s1, fc.s2, fc.c},
                                               {t.u, t.v, t.w}});
    }
    Verdict v = verdict_pass(TheoremId::T1_16, inst);
    v.notes.emplace_back("full_members", std::to_string(members));
    return v;
}

Verdict verify_t117(const SpecialLoop& gh) {
    auto hyp = check(gh, Prop::S2_BOL);
    if (!hyp.holds)
        return verdict_inapplicable(TheoremId::T1_17, "S2_BOL fails",
                                    hyp.checked);
    std::uint64_t inst = hyp.checked;
    std::uint64_t members = 0;
    std::optional<Counterexample> bad;
    for_each_right_left_member(gh, [&](const AutotopismTriple& t) {
        if (bad) return;
        ++members;
        FactorizationCheck fc(gh, t.u, t.v, t.w, TripleKind::RIGHT, inst);
        if (!fc.ok)
            bad = Counterexample{fc.what, {fc.s1, fc.s2, fc.c}, {t.u, t.v, t.w}};
    });
    if (bad) return verdict_fail(TheoremId::T1_17, inst, std::move(*bad));
    Verdict v = verdict_pass(TheoremId::T1_17, inst);
    v.notes.emplace_back("intersection_members", std::to_string(members));
    return v;
}

Verdict verify_q1(const SpecialLoop& gh) {
    Verdict v;
    v.theorem = TheoremId::Q1;
    v.applicable = true;
    v.conclusion = true;  // informational probe, never a failure
    std::uint64_t inst = 0;
    const struct {
        CompanionKind kind;
        const char* label;
    } kinds[] = {{CompanionKind::FIRST, "first"},
                 {CompanionKind::RIGHT, "right"},
                 {CompanionKind::LEFT, "left"}};
    for (const auto& [kind, label] : kinds) {
        std::vector<Permutation> members;
        std::set<std::vector<Elem>> images;
        for (const Permutation& a : s_bijections(gh)) {
            ++inst;
            if (!pseudo_automorphism_companions(gh, a, kind).companions.empty()) {
                members.push_back(a);
                images.insert(a.image());
            }
        }
        std::string prefix = std::string("pseudo.") + label;
        v.notes.emplace_back(prefix + ".size", std::to_string(members.size()));
        bool has_id =
            images.count(Permutation::identity(gh.order()).image()) > 0;
        v.notes.emplace_back(prefix + ".contains_identity",
                             has_id ? "yes" : "no");
        bool inv_closed = true;
        std::string inv_witness;
        for (const Permutation& a : members) {
            ++inst;
            if (!images.count(inverse(a).image())) {
                inv_closed = false;
                inv_witness = perm_str(a);
                break;
            }
        }
        v.notes.emplace_back(prefix + ".closed_inverse",
                             inv_closed ? "yes" : "no: " + inv_witness);
        bool comp_closed = true;
        std::string comp_witness;
        for (const Permutation& a : members) {
            for (const Permutation& b : members) {
                ++inst;
                if (!images.count(compose(a, b).image())) {
                    comp_closed = false;
                    comp_witness = perm_str(a) + " ; " + perm_str(b);
                    break;
                }
            }
            if (!comp_closed) break;
        }
        v.notes.emplace_back(prefix + ".closed_composition",
                             comp_closed ? "yes" : "no: " + comp_witness);
        v.notes.emplace_back(prefix + ".group_observed",
                             has_id && inv_closed && comp_closed ? "yes" : "no");
    }
    v.instances = inst;
    return v;
}

Verdict verify_q2(const VerifyBounds& b) {
    Verdict v;
    v.theorem = TheoremId::Q2;
    v.applicable = true;
    v.conclusion = true;  // search report, never a failure
    SearchOutcome outcome = search_s2bl_not_bol(b.search_max_order);
    std::uint64_t total = 0;
    for (const SearchOrderStats& st : outcome.per_order) {
        std::ostringstream os;
        os << "loops=" << st.loops_scanned << " pairs=" << st.pairs_scanned
           << " findings=" << st.findings
           << (st.exhaustive ? " exhaustive" : " sampled");
        v.notes.emplace_back("search.order." + std::to_string(st.order),
                             os.str());
        total += st.loops_scanned;
        v.instances += st.pairs_scanned;
    }
    v.notes.emplace_back("search.findings_total",
                         std::to_string(outcome.findings.size()));
    v.notes.emplace_back("search.loops_total", std::to_string(total));
    return v;
}

}  // namespace

Verdict verify(const SpecialLoop& gh, TheoremId tag, const VerifyBounds& b) {
    switch (tag) {
        case TheoremId::R1: return verify_r1(gh);
        case TheoremId::T1_4: return verify_t14(gh);
        case TheoremId::T1_5: return verify_t15(gh, b.exponent);
        case TheoremId::T1_6: return verify_t16(gh, b.exponent);
        case TheoremId::C1_7: return verify_c17(gh, b.exponent);
        case TheoremId::L1_8: return verify_l18(gh);
        case TheoremId::L1_9: return verify_l19(gh);
        case TheoremId::L1_10: return verify_l110(gh);
        case TheoremId::T1_11: return verify_t111(gh);
        case TheoremId::T1_12: return verify_t112(gh);
        case TheoremId::T1_13: return verify_t113(gh);
        case TheoremId::C1_14:
            return verify_c114_c115(gh, TheoremId::C1_14, Prop::NUCLEAR_SQUARE);
        case TheoremId::C1_15:
            return verify_c114_c115(gh, TheoremId::C1_15, Prop::EXPONENT2);
        case TheoremId::T1_16: return verify_t116(gh);
        case TheoremId::T1_17: return verify_t117(gh);
        case TheoremId::Q1: return verify_q1(gh);
        case TheoremId::Q2: return verify_q2(b);
    }
    throw LoopError("unknown theorem tag");
}

SweepReport sweep(const std::vector<SpecialLoop>& corpus,
                  const std::vector<TheoremId>& tags, const VerifyBounds& b) {
    SweepReport report;
    report.corpus_size = corpus.size();
    for (TheoremId t : tags) report.tallies[t];  // ensure stable key set
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (TheoremId t : tags) {
            Verdict v = verify(corpus[i], t, b);
            TheoremTally& tally = report.tallies[t];
            if (!v.applicable) {
                ++tally.not_applicable;
                continue;
            }
            ++tally.applicable;
            if (*v.conclusion) {
                ++tally.held;
            } else {
                ++tally.failed;
                report.failures.push_back(SweepFailure{i, t, *v.cex});
            }
        }
    }
    return report;
}

}  // namespace loops
