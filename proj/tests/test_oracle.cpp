// test_oracle.cpp -- the exhaustive engines against hand counts and each other.
#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mmkit/fixtures.hpp"
#include "mmkit/gen.hpp"
#include "mmkit/io.hpp"
#include "mmkit/mechanisms.hpp"
#include "mmkit/oracle.hpp"
#include "mmkit/properties.hpp"
#include "mmkit/rng.hpp"
#include "util.hpp"

using namespace mmkit;
using testutil::assign;
using testutil::mk;

namespace {

MarketInstance random_market(Rng& rng, int max_n, int max_m, int max_quota = 2) {
    GeneratorSpec spec;
    spec.students = 2 + (int)rng.below((std::uint64_t)max_n - 1);
    spec.schools = 2 + (int)rng.below((std::uint64_t)max_m - 1);
    spec.family = GraphFamily::RandomTree;
    spec.pref_mode = PrefMode::General;
    spec.quota_mode = max_quota > 1 ? QuotaMode::RandomBounded : QuotaMode::Unit;
    spec.max_quota = max_quota;
    spec.seed = rng.engine();
    return generate(spec).inst;
}

// a complete-preference unit-quota square market, the object-allocation shape
MarketInstance random_allocation_market(Rng& rng, int n) {
    GeneratorSpec spec;
    spec.students = n;
    spec.schools = n;
    spec.family = GraphFamily::Complete;
    spec.pref_mode = PrefMode::General;
    spec.quota_mode = QuotaMode::Unit;
    spec.seed = rng.engine();
    MarketInstance inst = generate(spec).inst;
    // force complete lists on both sides, in seeded random order
    for (int i = 0; i < n; i++) {
        std::vector<int> list(n);
        for (int s = 0; s < n; s++) list[s] = s;
        rng.shuffle(list);
        inst.student_pref[i] = list;
    }
    for (int s = 0; s < n; s++) {
        std::vector<int> list(n);
        for (int i = 0; i < n; i++) list[i] = i;
        rng.shuffle(list);
        inst.school_pref[s] = list;
    }
    inst.finalize();
    return inst;
}

}  // namespace

TEST_CASE("feasible enumeration matches the hand count on a two-by-two market") {
    MarketInstance inst = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=1 s2=1\n"
        "pref i1: s1 > s2\n"
        "pref i2: s1 > s2\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1 > i2\n");
    auto all = enumerate_feasible(inst);
    // per student: unmatched, s1 or s2; minus the two double bookings
    CHECK(all.size() == 7);
    CHECK(std::is_sorted(all.begin(), all.end(), matching_less));
    CHECK(all.front() == assign(inst, {"-", "-"}));
    for (const Matching& y : all) CHECK(is_feasible(inst, y));
    CHECK(enumerate_feasible_parallel(inst) == all);
}

TEST_CASE("a zero-quota school never appears in an enumerated matching") {
    MarketInstance inst = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=0 s2=1\n"
        "pref i1: s1 > s2\n"
        "pref i2: s1 > s2\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1 > i2\n");
    auto all = enumerate_feasible(inst);
    CHECK(all.size() == 3);  // empty, i1 at s2, i2 at s2
    for (const Matching& y : all)
        for (int s : y.to_school) CHECK(s != 0);
}

TEST_CASE("the serial and split enumerations agree on random markets") {
    Rng rng(301);
    for (int trial = 0; trial < 15; trial++) {
        MarketInstance inst = random_market(rng, 5, 4);
        auto serial = enumerate_feasible(inst);
        auto split = enumerate_feasible_parallel(inst);
        CHECK(serial == split);
        CHECK(std::is_sorted(serial.begin(), serial.end(), matching_less));
        CHECK(mark_pareto(inst, serial) == mark_pareto_parallel(inst, serial));
    }
}

TEST_CASE("domination is irreflexive and strict somewhere") {
    MarketInstance q12 = fixture_instance("pair-q12");
    Matching y = assign(q12, {"s1", "s2"});
    Matching z = assign(q12, {"s2", "s2"});
    CHECK(dominates(q12, z, y));
    CHECK_FALSE(dominates(q12, y, z));
    CHECK_FALSE(dominates(q12, y, y));
    CHECK_FALSE(dominates(q12, z, z));
}

TEST_CASE("pareto marks agree with the single-matching test") {
    Rng rng(302);
    for (int trial = 0; trial < 10; trial++) {
        MarketInstance inst = random_market(rng, 4, 4);
        auto all = enumerate_feasible(inst);
        auto marks = mark_pareto(inst, all);
        REQUIRE(marks.size() == all.size());
        for (std::size_t idx = 0; idx < all.size(); idx++)
            CHECK((bool)marks[idx] == is_pareto_efficient(inst, all[idx]));
    }
}

TEST_CASE("the efficient set of the three-path market is exactly four matchings") {
    MarketInstance inst = fixture_instance("path3-pe-vs-lef");
    MatchingFilter pe;
    pe.pareto_efficient = true;
    auto set = enumerate_matchings(inst, pe);
    std::vector<Matching> want = {
        assign(inst, {"s1", "s2", "s3"}), assign(inst, {"s1", "s3", "s2"}),
        assign(inst, {"s2", "s3", "s1"}), assign(inst, {"s3", "s2", "s1"})};
    std::sort(want.begin(), want.end(), matching_less);
    CHECK(set == want);

    // every one of them carries local envy, so the combined filter is empty
    MatchingFilter both = pe;
    both.lef = true;
    CHECK(enumerate_matchings(inst, both).empty());
    CHECK_FALSE(decide_lee(inst).has_value());
}

TEST_CASE("the locally-envy-free set of the one-seat market") {
    MarketInstance inst = fixture_instance("pair-one-seat");
    MatchingFilter lef;
    lef.lef = true;
    auto set = enumerate_matchings(inst, lef);
    std::vector<Matching> want = {assign(inst, {"-", "-"}), assign(inst, {"-", "s1"}),
                                  assign(inst, {"s1", "-"})};
    CHECK(set == want);  // already in enumeration order

    MatchingFilter stable;
    stable.stable = true;
    auto stable_set = enumerate_matchings(inst, stable);
    REQUIRE(stable_set.size() == 1);
    CHECK(stable_set[0] == assign(inst, {"s1", "-"}));
}

TEST_CASE("filters compose conjunctively and match the direct predicates") {
    Rng rng(303);
    for (int trial = 0; trial < 8; trial++) {
        MarketInstance inst = random_market(rng, 4, 3);
        auto all = enumerate_feasible(inst);

        MatchingFilter f;
        f.lef = true;
        f.nonwasteful = true;
        f.exact_size = 2;
        auto got = enumerate_matchings(inst, f);
        std::vector<Matching> want;
        for (const Matching& y : all)
            if (envy_report(inst, y).locally_envy_free() && is_nonwasteful(inst, y) &&
                y.size() == 2)
                want.push_back(y);
        CHECK(got == want);

        MatchingFilter g;
        g.fair = true;
        g.mutually_best = true;
        g.locally_stable = true;
        auto got2 = enumerate_matchings(inst, g);
        std::vector<Matching> want2;
        for (const Matching& y : all)
            if (!has_justified_envy(inst, y) && is_mutually_best(inst, y) &&
                is_locally_stable(inst, y))
                want2.push_back(y);
        CHECK(got2 == want2);
    }
}

TEST_CASE("existence decisions agree with the filtered enumeration") {
    MarketInstance lone = mk(
        "students: i1\n"
        "schools: s1\n"
        "quota: s1=1\n"
        "pref i1: s1\n"
        "pref s1: i1\n");
    auto hit = decide_lee(lone);
    REQUIRE(hit.has_value());
    CHECK(*hit == assign(lone, {"s1"}));

    Rng rng(304);
    for (int trial = 0; trial < 12; trial++) {
        MarketInstance inst = random_market(rng, 4, 3);
        MatchingFilter f;
        f.lef = true;
        f.pareto_efficient = true;
        auto set = enumerate_matchings(inst, f);
        auto got = decide_lee(inst);
        CHECK(got.has_value() == !set.empty());
        if (got.has_value() && !set.empty()) CHECK(*got == set.front());
    }
}

TEST_CASE("the three-loop market's efficient fair set splits into two branches") {
    MarketInstance inst = fixture_instance("near-complete-3");
    MatchingFilter f;
    f.lef = true;
    f.pareto_efficient = true;
    LatticeReport rep = check_lattice_closure(inst, f);
    CHECK(rep.set.size() >= 2);
    CHECK_FALSE(rep.nojoin_pairs.empty());
    CHECK_FALSE(rep.has_optimum);

    // the two branch heads named by the fixture really are in the set
    Matching a = assign(inst, {"s1", "s2", "s3"});
    Matching b = assign(inst, {"s1", "s3", "s2"});
    CHECK(std::count(rep.set.begin(), rep.set.end(), a) == 1);
    CHECK(std::count(rep.set.begin(), rep.set.end(), b) == 1);
}

TEST_CASE("a unique survivor is trivially the optimum") {
    MarketInstance inst = fixture_instance("sp-path3-p1");
    MatchingFilter f;
    f.lef = true;
    f.pareto_efficient = true;
    LatticeReport rep = check_lattice_closure(inst, f);
    REQUIRE(rep.set.size() == 1);
    CHECK(rep.set[0] == assign(inst, {"s3", "s1", "s2"}));
    CHECK(rep.nojoin_pairs.empty());
    CHECK(rep.has_optimum);
    CHECK(rep.optimum == rep.set[0]);
}

TEST_CASE("stable sets always join, with the proposal outcome on top") {
    Rng rng(305);
    for (int trial = 0; trial < 12; trial++) {
        MarketInstance inst = random_market(rng, 5, 3);
        MatchingFilter stable;
        stable.stable = true;
        LatticeReport rep = check_lattice_closure(inst, stable);
        INFO(serialize_instance(inst));
        REQUIRE_FALSE(rep.set.empty());
        CHECK(rep.nojoin_pairs.empty());
        CHECK(rep.has_optimum);
        CHECK(rep.optimum == deferred_acceptance(inst));
    }
}

TEST_CASE("stable matchings fill every school to the same level") {
    Rng rng(306);
    for (int trial = 0; trial < 12; trial++) {
        MarketInstance inst = random_market(rng, 5, 3);
        MatchingFilter stable;
        stable.stable = true;
        auto set = enumerate_matchings(inst, stable);
        REQUIRE_FALSE(set.empty());
        auto fill = set.front().fill(inst);
        for (const Matching& y : set) CHECK(y.fill(inst) == fill);
    }
}

TEST_CASE("class statistics report sizes and uniformity per class") {
    MarketInstance sizes = fixture_instance("path3-sizes");
    RuralReport rep = rural_hospitals_check(sizes);
    CHECK(rep.lef_pe.label == "lef+pe");
    CHECK(rep.lef_pe.count == 2);
    CHECK(rep.lef_pe.sizes == std::vector<int>{2, 3});
    CHECK_FALSE(rep.lef_pe.same_size);
    CHECK_FALSE(rep.lef_pe.same_fill);
    CHECK(rep.lef_nonwasteful.label == "lef+nonwasteful");

    MarketInstance pair = fixture_instance("pair-one-seat");
    RuralReport pr = rural_hospitals_check(pair);
    CHECK(pr.lef_pe.count == 2);  // either student alone at the school
    CHECK(pr.lef_pe.same_size);
    CHECK(pr.lef_pe.same_fill);
}

TEST_CASE("no profitable misreport exists for the dictatorship mechanisms") {
    Rng rng(307);
    for (int trial = 0; trial < 10; trial++) {
        MarketInstance inst = random_market(rng, 3, 3);
        INFO(serialize_instance(inst));

        MechanismConfig sd;
        sd.kind = MechanismConfig::Kind::SerialDictatorship;
        sd.master.order.resize(inst.n());
        for (int i = 0; i < inst.n(); i++) sd.master.order[i] = i;
        CHECK_FALSE(verify_strategyproofness(inst, sd).has_value());

        MechanismConfig sdd;
        sdd.kind = MechanismConfig::Kind::SdDegeneracy;
        CHECK_FALSE(verify_strategyproofness(inst, sdd).has_value());
        sdd.reverse = true;
        CHECK_FALSE(verify_strategyproofness(inst, sdd).has_value());
    }
}

TEST_CASE("no profitable misreport exists for proposal-side deferred acceptance") {
    Rng rng(308);
    for (int trial = 0; trial < 10; trial++) {
        MarketInstance inst = random_market(rng, 3, 3);
        INFO(serialize_instance(inst));
        MechanismConfig da;
        da.kind = MechanismConfig::Kind::DeferredAcceptance;
        CHECK_FALSE(verify_strategyproofness(inst, da).has_value());
    }
}

TEST_CASE("the attack run can be gamed, and the witness replays") {
    MarketInstance inst = fixture_instance("sp-path3-p1");
    MechanismConfig blt;
    blt.kind = MechanismConfig::Kind::BLt2;
    auto witness = verify_strategyproofness(inst, blt);
    REQUIRE(witness.has_value());
    CHECK(witness->student == 0);  // the first student can lie its way up

    // replay the lie and confirm the recorded gain
    Matching honest = b_lt2(inst);
    CHECK(honest.to_school[witness->student] == witness->honest_school);
    MarketInstance lie = inst;
    lie.student_pref[witness->student] = witness->misreport;
    lie.finalize();
    Matching lied = b_lt2(lie);
    CHECK(lied.to_school[witness->student] == witness->lied_school);
    CHECK(inst.student_prefers(witness->student, witness->lied_school,
                               witness->honest_school));
}

TEST_CASE("pick-in-order feasibility by brute force") {
    MarketInstance inst = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=1 s2=1\n"
        "pref i1: s1 > s2\n"
        "pref i2: s2 > s1\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1 > i2\n");
    // both students reach their top in every order; nobody reaches the other seat
    CHECK(sd_feasible_brute(inst, 0, 0));
    CHECK(sd_feasible_brute(inst, 1, 1));
    CHECK_FALSE(sd_feasible_brute(inst, 0, 1));
    CHECK_FALSE(sd_feasible_brute(inst, 1, 0));

    MarketInstance contested = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=1 s2=1\n"
        "pref i1: s1 > s2\n"
        "pref i2: s1 > s2\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1 > i2\n");
    CHECK(sd_feasible_brute(contested, 0, 0));
    CHECK(sd_feasible_brute(contested, 0, 1));
    CHECK(sd_feasible_brute(contested, 1, 0));
    CHECK(sd_feasible_brute(contested, 1, 1));

    MarketInstance lopsided = fixture_instance("pair-one-seat");
    CHECK_THROWS_AS(sd_feasible_brute(lopsided, 0, 0), std::invalid_argument);
}

TEST_CASE("the rewritten existence question shapes up and answers the same") {
    Rng rng(309);
    for (int trial = 0; trial < 8; trial++) {
        MarketInstance source = random_allocation_market(rng, 3);
        INFO(serialize_instance(source));
        for (int i = 0; i < source.n(); i++)
            for (int s = 0; s < source.m(); s++) {
                MarketInstance reduced = reduce_sd_feasibility_to_lee(source, i, s);
                CHECK(reduced.n() == source.n() + 1);
                CHECK(reduced.m() == source.m() + 1);
                for (int q : reduced.quota) CHECK(q == 1);
                for (int j = 0; j < reduced.n(); j++)
                    CHECK((int)reduced.student_pref[j].size() == reduced.m());

                bool direct = sd_feasible_brute(source, i, s);
                auto lee = decide_lee(reduced);
                CHECK(lee.has_value() == direct);
                if (lee.has_value()) {
                    CHECK(lee->to_school[i] == s);
                    CHECK(envy_report(reduced, *lee).locally_envy_free());
                    CHECK(is_pareto_efficient(reduced, *lee));
                }
            }
    }

    // one larger market, a single pair, to cross the n=4 line
    MarketInstance source = random_allocation_market(rng, 4);
    MarketInstance reduced = reduce_sd_feasibility_to_lee(source, 2, 1);
    CHECK(decide_lee(reduced).has_value() == sd_feasible_brute(source, 2, 1));

    CHECK_THROWS_AS(reduce_sd_feasibility_to_lee(source, 9, 0), std::invalid_argument);
}
