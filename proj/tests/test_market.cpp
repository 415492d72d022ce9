// test_market.cpp -- data model: validation, closure, matchings, bounds.
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "mmkit/gen.hpp"
#include "mmkit/market.hpp"
#include "mmkit/rng.hpp"
#include "util.hpp"

using namespace mmkit;
using testutil::assign;
using testutil::mk;

namespace {

const char* kPathThree =
    "students: i1 i2 i3\n"
    "schools: s1 s2 s3\n"
    "quota: s1=1 s2=1 s3=1\n"
    "pref i1: s1 > s2 > s3\n"
    "pref i2: s2 > s1 > s3\n"
    "pref i3: s1 > s2 > s3\n"
    "pref s1: i2 > i1 > i3\n"
    "pref s2: i1 > i3 > i2\n"
    "pref s3: i1 > i2 > i3\n"
    "edges: i1-i2 i2-i3\n";

}  // namespace

TEST_CASE("a clean instance validates with no issues") {
    ValidationReport rep;
    MarketInstance inst = parse_instance(kPathThree, &rep);
    CHECK(rep.ok());
    CHECK(rep.issues.empty());
    CHECK(inst.n() == 3);
    CHECK(inst.m() == 3);
    CHECK(inst.graph.has_edge(0, 1));
    CHECK(inst.graph.has_edge(1, 2));
    CHECK_FALSE(inst.graph.has_edge(0, 2));
}

TEST_CASE("one-sided listings are pruned with a warning") {
    // i1 lists s2 but s2 does not list i1 back; and s3 lists i3 one-sidedly.
    ValidationReport rep;
    MarketInstance inst = parse_instance(
        "students: i1 i2 i3\n"
        "schools: s1 s2 s3\n"
        "quota: s1=1 s2=1 s3=1\n"
        "pref i1: s1 > s2\n"
        "pref i2: s2\n"
        "pref i3: s1\n"
        "pref s1: i1 > i3\n"
        "pref s2: i2\n"
        "pref s3: i3\n",
        &rep);
    CHECK(rep.ok());
    int warnings = 0;
    for (const auto& issue : rep.issues)
        if (issue.severity == Issue::Warning) warnings++;
    CHECK(warnings == 2);
    CHECK_FALSE(inst.has_contract(0, 1));  // i1-s2 dropped
    CHECK(inst.has_contract(0, 0));
    CHECK(inst.student_pref[0] == std::vector<int>{0});
    CHECK(inst.school_pref[2].empty());  // s3's lone entry dropped

    SUBCASE("the closure is idempotent") {
        auto prefs_i = inst.student_pref;
        auto prefs_s = inst.school_pref;
        inst.finalize();
        CHECK(inst.student_pref == prefs_i);
        CHECK(inst.school_pref == prefs_s);
    }
}

TEST_CASE("structural defects are reported as errors") {
    auto expect_bad = [](MarketInstance inst, const char* what) {
        ValidationReport rep = validate_instance(inst);
        INFO(what << ":\n" << rep.to_string());
        CHECK_FALSE(rep.ok());
    };
    MarketInstance base;
    base.students = {"i1", "i2"};
    base.schools = {"s1"};
    base.student_pref = {{0}, {0}};
    base.school_pref = {{0, 1}};
    base.quota = {1};

    {
        MarketInstance ok = base;
        CHECK(validate_instance(ok).ok());
    }
    {
        MarketInstance inst = base;
        inst.students[1] = "i1";
        expect_bad(inst, "duplicate student id");
    }
    {
        MarketInstance inst = base;
        inst.schools[0] = "i1";
        expect_bad(inst, "school id reusing a student id");
    }
    {
        MarketInstance inst = base;
        inst.students[0] = "i=1";
        expect_bad(inst, "reserved character in id");
    }
    {
        MarketInstance inst = base;
        inst.students[0] = "";
        expect_bad(inst, "empty id");
    }
    {
        MarketInstance inst = base;
        inst.quota = {-1};
        expect_bad(inst, "negative quota");
    }
    {
        MarketInstance inst = base;
        inst.quota = {};
        expect_bad(inst, "missing quota");
    }
    {
        MarketInstance inst = base;
        inst.student_pref[0] = {0, 0};
        expect_bad(inst, "duplicate pref entry");
    }
    {
        MarketInstance inst = base;
        inst.school_pref[0] = {0, 2};
        expect_bad(inst, "pref entry out of range");
    }
    {
        MarketInstance inst = base;
        inst.graph.edges = {{0, 2}};
        expect_bad(inst, "edge to an undeclared student");
    }
    {
        MarketInstance inst = base;
        inst.graph.edges = {{0, 0}};
        expect_bad(inst, "self-loop");
    }
    {
        MarketInstance inst = base;
        inst.graph.edges = {{0, 1}, {1, 0}};
        expect_bad(inst, "duplicate edge");
    }
}

TEST_CASE("validation canonicalizes edge order") {
    MarketInstance inst;
    inst.students = {"a", "b", "c"};
    inst.schools = {"s1"};
    inst.student_pref = {{0}, {0}, {0}};
    inst.school_pref = {{0, 1, 2}};
    inst.quota = {2};
    inst.graph.edges = {{2, 1}, {1, 0}};
    REQUIRE(validate_instance(inst).ok());
    std::vector<std::pair<int, int>> want = {{0, 1}, {1, 2}};
    CHECK(inst.graph.edges == want);
    CHECK(inst.graph.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("strict comparisons treat unranked partners as incomparable-below") {
    MarketInstance inst = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=1 s2=1\n"
        "pref i1: s2 > s1\n"
        "pref i2: s1\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1\n");
    // i1 ranks both schools, i2 only s1; s2 is unranked for i2.
    CHECK(inst.student_prefers(0, 1, 0));        // s2 over s1
    CHECK_FALSE(inst.student_prefers(0, 0, 1));
    CHECK(inst.student_prefers(0, 0, kNone));    // anything ranked beats unmatched
    CHECK_FALSE(inst.student_prefers(0, kNone, 0));
    CHECK_FALSE(inst.student_prefers(1, 1, kNone));  // unranked school never preferred
    CHECK_FALSE(inst.student_prefers(1, 1, 0));

    CHECK(inst.school_prefers(0, 0, 1));
    CHECK_FALSE(inst.school_prefers(0, 1, 0));
    CHECK(inst.school_prefers(0, 1, kNone));
    CHECK_FALSE(inst.school_prefers(0, kNone, 1));
    CHECK_FALSE(inst.school_prefers(1, 1, kNone));  // s2 never ranked i2
    CHECK_FALSE(inst.school_prefers(1, 1, 0));
}

TEST_CASE("matching accessors count and bucket assignments") {
    MarketInstance inst = mk(kPathThree);
    Matching y = assign(inst, {"s1", "-", "s2"});
    CHECK(y.size() == 2);
    CHECK(y.fill(inst) == std::vector<int>{1, 1, 0});
    auto rosters = y.school_rosters(inst);
    CHECK(rosters[0] == std::vector<int>{0});
    CHECK(rosters[1] == std::vector<int>{2});
    CHECK(rosters[2].empty());
}

TEST_CASE("matching order is lexicographic with unmatched first") {
    Matching a{{kNone, kNone}}, b{{kNone, 0}}, c{{0, kNone}}, d{{0, 1}};
    CHECK(matching_less(a, b));
    CHECK(matching_less(b, c));
    CHECK(matching_less(c, d));
    CHECK_FALSE(matching_less(d, a));
    CHECK_FALSE(matching_less(a, a));
}

TEST_CASE("check_matching rejects malformed assignments") {
    MarketInstance inst = mk(kPathThree);
    Matching short_vec{{0, kNone}};
    CHECK_THROWS_AS(check_matching(inst, short_vec), std::invalid_argument);
    Matching bad_school{{0, 7, kNone}};
    CHECK_THROWS_AS(check_matching(inst, bad_school), std::invalid_argument);

    // i2 never lists s2, so the closure drops s2's entry for i2 and the pair
    // (i2, s2) is not a contract.
    MarketInstance pruned = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=1 s2=1\n"
        "pref i1: s1 > s2\n"
        "pref i2: s1\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1 > i2\n");
    Matching non_contract{{kNone, 1}};
    CHECK_THROWS_AS(check_matching(pruned, non_contract), std::invalid_argument);
}

TEST_CASE("feasibility is a per-school quota check") {
    MarketInstance inst = mk(
        "students: i1 i2\n"
        "schools: s1 s2\n"
        "quota: s1=1 s2=2\n"
        "pref i1: s1 > s2\n"
        "pref i2: s1 > s2\n"
        "pref s1: i1 > i2\n"
        "pref s2: i1 > i2\n");
    CHECK(is_feasible(inst, assign(inst, {"-", "-"})));
    CHECK(is_feasible(inst, assign(inst, {"s1", "s2"})));
    CHECK(is_feasible(inst, assign(inst, {"s2", "s2"})));
    CHECK_FALSE(is_feasible(inst, assign(inst, {"s1", "s1"})));
}

TEST_CASE("feasibility survives unmatching any subset of students") {
    Rng rng(20260816);
    for (int trial = 0; trial < 30; trial++) {
        GeneratorSpec spec;
        spec.students = 3 + (int)rng.below(4);
        spec.schools = 2 + (int)rng.below(3);
        spec.family = GraphFamily::RandomTree;
        spec.quota_mode = QuotaMode::RandomBounded;
        spec.max_quota = 2;
        spec.seed = rng.engine();
        MarketInstance inst = generate(spec).inst;

        // greedy feasible matching: each student takes its first school with room
        Matching y;
        y.to_school.assign(inst.n(), kNone);
        std::vector<int> fill(inst.m(), 0);
        for (int i = 0; i < inst.n(); i++)
            for (int s : inst.student_pref[i])
                if (fill[s] < inst.quota[s]) {
                    y.to_school[i] = s;
                    fill[s]++;
                    break;
                }
        REQUIRE(is_feasible(inst, y));

        Matching sub = y;
        for (int i = 0; i < inst.n(); i++)
            if (rng.below(2) == 0) sub.to_school[i] = kNone;
        CHECK(is_feasible(inst, sub));
    }
}

TEST_CASE("desk bounds gate the exhaustive engines") {
    GeneratorSpec spec;
    spec.students = 9;  // over the default cap of 8
    spec.schools = 3;
    spec.family = GraphFamily::Path;
    spec.seed = 5;
    MarketInstance big = generate(spec).inst;

    DeskBounds bounds;
    CHECK_THROWS_AS(enforce_bounds(big, bounds, "test"), std::length_error);
    bounds.force = true;
    CHECK_NOTHROW(enforce_bounds(big, bounds, "test"));

    MarketInstance small = mk(kPathThree);
    CHECK_NOTHROW(enforce_bounds(small, DeskBounds{}, "test"));

    DeskBounds tight;
    tight.max_total_quota = 2;
    CHECK_THROWS_AS(enforce_bounds(small, tight, "test"), std::length_error);
}
