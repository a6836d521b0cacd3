#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loops/enumerate.hpp"
#include "loops/theorems.hpp"
#include "oracles.hpp"

using namespace loops;

namespace {

SpecialLoop z4_pair() {
    return make_special(oracle::to_loop(oracle::cyclic(4)), {0, 2});
}

std::vector<TheoremId> deterministic_tags() {
    // everything except the probes
    std::vector<TheoremId> tags;
    for (TheoremId t : kAllTheorems)
        if (t != TheoremId::Q1 && t != TheoremId::Q2) tags.push_back(t);
    return tags;
}

}  // namespace

TEST_CASE("tag names round-trip") {
    for (TheoremId t : kAllTheorems)
        CHECK(theorem_from_name(theorem_name(t)) == t);
    CHECK(!theorem_from_name("T9_9").has_value());
}

TEST_CASE("group pair verifies everything") {
    SpecialLoop gh = z4_pair();
    for (TheoremId t : deterministic_tags()) {
        Verdict v = verify(gh, t);
        CHECK(v.theorem == t);
        if (v.applicable) {
            REQUIRE(v.conclusion.has_value());
            CHECK(*v.conclusion);
            CHECK(!v.cex.has_value());
        }
    }
    // hypotheses actually hold on a group pair
    CHECK(verify(gh, TheoremId::T1_4).applicable);
    CHECK(verify(gh, TheoremId::T1_11).applicable);
    CHECK(verify(gh, TheoremId::C1_15).applicable);  // {0,2} has exponent 2
}

TEST_CASE("equivalence check reports both directions") {
    Verdict v = verify(z4_pair(), TheoremId::T1_11);
    REQUIRE(v.applicable);
    CHECK(*v.conclusion);
    bool identity_side = false, triple_side = false;
    for (const auto& [k, val] : v.notes) {
        if (k == "identity_side") identity_side = val == "holds";
        if (k == "triple_side") triple_side = val == "holds";
    }
    CHECK(identity_side);
    CHECK(triple_side);
}

TEST_CASE("hypothesis failures are reported as not applicable") {
    bool found = false;
    for (const SpecialLoop& gh : enumerate_special(5, 2)) {
        if (check(gh, Prop::S2_BOL).holds) continue;
        Verdict v = verify(gh, TheoremId::T1_4);
        CHECK(!v.applicable);
        CHECK(!v.conclusion.has_value());
        // pivot-triple equivalence still applies and must agree
        Verdict t11 = verify(gh, TheoremId::T1_11);
        CHECK(t11.applicable);
        CHECK(*t11.conclusion);
        bool has_pivot = false;
        for (const auto& [k, val] : t11.notes)
            if (k == "failing_pivot") has_pivot = val != "none";
        CHECK(has_pivot);
        found = true;
        break;
    }
    CHECK(found);
}

TEST_CASE("zero failures across the order <= 4 corpus, all tags") {
    std::vector<SpecialLoop> corpus;
    for (int n = 2; n <= 4; ++n)
        for (const SpecialLoop& gh : enumerate_special(n, 2))
            corpus.push_back(gh);
    REQUIRE(!corpus.empty());
    SweepReport report = sweep(corpus, deterministic_tags());
    CHECK(report.failures.empty());
    for (const auto& [tag, tally] : report.tallies) {
        CHECK(tally.failed == 0);
        CHECK(tally.applicable == tally.held);
    }
    // the restricted-Bol hypothesis holds on every group pair here
    CHECK(report.tallies.at(TheoremId::T1_4).applicable == corpus.size());
}

TEST_CASE("sweep on cyclic groups with every subloop") {
    std::vector<SpecialLoop> corpus;
    for (int n : {2, 3, 4, 5, 6}) {
        Loop g = oracle::to_loop(oracle::cyclic(n));
        for (const auto& h : all_subloops(g)) {
            if (h.size() < 2) continue;
            corpus.push_back(make_special(g, std::vector<int>(h.begin(), h.end())));
        }
    }
    SweepReport report = sweep(corpus, deterministic_tags());
    CHECK(report.failures.empty());
    CHECK(report.tallies.at(TheoremId::T1_5).applicable == corpus.size());
    CHECK(report.tallies.at(TheoremId::L1_10).applicable == corpus.size());
}

TEST_CASE("power identities at the bound imply the power alternative") {
    VerifyBounds b;
    b.exponent = 4;
    for (const SpecialLoop& gh : enumerate_special(5, 2)) {
        Verdict t5 = verify(gh, TheoremId::T1_5, b);
        Verdict t6 = verify(gh, TheoremId::T1_6, b);
        if (t5.applicable && *t5.conclusion && t6.applicable && *t6.conclusion)
            CHECK(check(gh, PropertyId(Prop::S_RPAP, b.exponent)).holds);
    }
}

TEST_CASE("one-sided set structure notes") {
    Verdict v = verify(z4_pair(), TheoremId::L1_8);
    REQUIRE(v.applicable);
    CHECK(*v.conclusion);
    std::map<std::string, std::string> notes(v.notes.begin(), v.notes.end());
    CHECK(notes.at("restriction_anomalies") == "0");
    CHECK(notes.at("right_kernels") != "0");
    CHECK(notes.at("left_kernels") != "0");

    Verdict l9 = verify(z4_pair(), TheoremId::L1_9);
    CHECK(*l9.conclusion);
}

TEST_CASE("probe of companion-map sets on a group pair") {
    Verdict v = verify(z4_pair(), TheoremId::Q1);
    CHECK(v.applicable);
    CHECK(*v.conclusion);  // probes never fail
    std::map<std::string, std::string> notes(v.notes.begin(), v.notes.end());
    CHECK(notes.count("pseudo.first.size") == 1);
    CHECK(notes.at("pseudo.first.contains_identity") == "yes");
    CHECK(notes.count("pseudo.right.group_observed") == 1);
    CHECK(notes.count("pseudo.left.closed_composition") == 1);
    // deterministic across runs
    Verdict v2 = verify(z4_pair(), TheoremId::Q1);
    CHECK(v.notes == v2.notes);
}

TEST_CASE("search probe reports per-order outcomes") {
    VerifyBounds b;
    b.search_max_order = 4;
    Verdict v = verify(z4_pair(), TheoremId::Q2, b);
    CHECK(*v.conclusion);
    std::map<std::string, std::string> notes(v.notes.begin(), v.notes.end());
    CHECK(notes.at("search.findings_total") == "0");
    CHECK(notes.at("search.order.4") ==
          "loops=4 pairs=6 findings=0 exhaustive");
}

TEST_CASE("verdict invariants across a mixed order-5 slice") {
    for (const SpecialLoop& gh : enumerate_special(5, 2))
        for (TheoremId t : deterministic_tags()) {
            Verdict v = verify(gh, t);
            CHECK(v.conclusion.has_value() == v.applicable);
            if (v.conclusion.has_value() && !*v.conclusion)
                CHECK(v.cex.has_value());
            else
                CHECK(!v.cex.has_value());
        }
}
