// test_io.cpp -- text formats: parse/serialize round trips and error spots.
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "mmkit/fixtures.hpp"
#include "mmkit/graph.hpp"
#include "mmkit/io.hpp"
#include "util.hpp"

using namespace mmkit;
using testutil::assign;
using testutil::mk;

TEST_CASE("serialize(parse(.)) is a fixed point on every fixture") {
    for (const Fixture& fx : fixtures()) {
        INFO("fixture " << fx.name);
        MarketInstance inst = parse_instance(fx.instance_text);
        std::string once = serialize_instance(inst);
        MarketInstance again = parse_instance(once);
        CHECK(serialize_instance(again) == once);

        CHECK(again.students == inst.students);
        CHECK(again.schools == inst.schools);
        CHECK(again.student_pref == inst.student_pref);
        CHECK(again.school_pref == inst.school_pref);
        CHECK(again.quota == inst.quota);
        CHECK(again.graph.edges == inst.graph.edges);
    }
}

TEST_CASE("comments, blank lines and an omitted edges section parse") {
    MarketInstance inst = parse_instance(
        "# a tiny market\n"
        "students: i1 i2\n"
        "\n"
        "schools: s1   # trailing comment\n"
        "quota: s1=2\n"
        "pref i1: s1\n"
        "pref i2: s1\n"
        "pref s1: i2 > i1\n");
    CHECK(inst.n() == 2);
    CHECK(inst.graph.edges.empty());
    CHECK(inst.quota == std::vector<int>{2});
}

TEST_CASE("parse errors carry the offending line") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_instance(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    // non-numeric quota
    expect_line(
        "students: i1\n"
        "schools: s1\n"
        "quota: s1=x\n"
        "pref i1: s1\n"
        "pref s1: i1\n",
        3);
    // sections out of order
    expect_line(
        "schools: s1\n"
        "students: i1\n"
        "quota: s1=1\n",
        1);
    // unknown agent in a pref line
    expect_line(
        "students: i1\n"
        "schools: s1\n"
        "quota: s1=1\n"
        "pref i9: s1\n",
        4);
    // unknown school in a quota entry
    expect_line(
        "students: i1\n"
        "schools: s1\n"
        "quota: s2=1\n",
        3);
    // malformed edge token
    expect_line(
        "students: i1 i2\n"
        "schools: s1\n"
        "quota: s1=1\n"
        "pref i1: s1\n"
        "pref s1: i1\n"
        "edges: i1i2\n",
        6);
}

TEST_CASE("a validation error without a report becomes invalid_argument") {
    // a negative quota is well-formed text, so it is the validator's problem
    const std::string text =
        "students: i1\n"
        "schools: s1\n"
        "quota: s1=-1\n"
        "pref i1: s1\n"
        "pref s1: i1\n";
    CHECK_THROWS_AS(parse_instance(text), std::invalid_argument);

    ValidationReport rep;
    parse_instance(text, &rep);
    CHECK_FALSE(rep.ok());

    // duplicate ids never reach validation: the parser rejects them in place
    CHECK_THROWS_AS(parse_instance("students: i1 i1\n"
                                   "schools: s1\n"
                                   "quota: s1=1\n"
                                   "pref s1: i1\n"),
                    ParseError);
}

TEST_CASE("matching lines round-trip, with '-' and omission for unmatched") {
    MarketInstance inst = fixture_instance("path3-sizes");
    Matching y = parse_matching("match: i1=s1 i2=- i3=s2\n", inst);
    CHECK(y.to_school == std::vector<int>{0, kNone, 1});
    CHECK(serialize_matching(y, inst) == "match: i1=s1 i2=- i3=s2\n");

    Matching omitted = parse_matching("match: i3=s2", inst);
    CHECK(omitted.to_school == std::vector<int>{kNone, kNone, 1});

    Matching empty = parse_matching("match:", inst);
    CHECK(empty.size() == 0);
}

TEST_CASE("matching parse rejects unknown agents and repeats") {
    MarketInstance inst = fixture_instance("path3-sizes");
    CHECK_THROWS_AS(parse_matching("match: i9=s1", inst), ParseError);
    CHECK_THROWS_AS(parse_matching("match: i1=s9", inst), ParseError);
    CHECK_THROWS_AS(parse_matching("match: i1=s1 i1=s2", inst), ParseError);
    CHECK_THROWS_AS(parse_matching("i1=s1", inst), ParseError);  // missing keyword

    // assignments outside the contract set get through the parser; the
    // structural gate is check_matching (i2 only has a contract with s2 here)
    Matching stray = parse_matching("match: i2=s1", inst);
    CHECK_THROWS_AS(check_matching(inst, stray), std::invalid_argument);
}

TEST_CASE("decomposition text round-trips against its instance") {
    const Fixture* fx = find_fixture("bags-w2");
    REQUIRE(fx != nullptr);
    REQUIRE_FALSE(fx->decomposition_text.empty());
    MarketInstance inst = parse_instance(fx->instance_text);
    TreeDecomposition td = parse_decomposition(fx->decomposition_text, inst);
    CHECK(td.bags.size() == 5);
    CHECK(td.tree_edges.size() == 4);
    std::string once = serialize_decomposition(td, inst);
    TreeDecomposition again = parse_decomposition(once, inst);
    CHECK(serialize_decomposition(again, inst) == once);
    CHECK(again.bags == td.bags);
    CHECK(again.tree_edges == td.tree_edges);
}

TEST_CASE("decomposition parse errors") {
    MarketInstance inst = fixture_instance("path3-sizes");
    CHECK_THROWS_AS(parse_decomposition("bags: B1={i1,i9}\n", inst), ParseError);
    CHECK_THROWS_AS(parse_decomposition("bags: B1={i1} B1={i2}\n", inst), ParseError);
    CHECK_THROWS_AS(
        parse_decomposition("bags: B1={i1}\ntree: B1-B7\n", inst), ParseError);
    CHECK_THROWS_AS(parse_decomposition("tree: B1-B2\n", inst), ParseError);
}

TEST_CASE("stream and string parsers agree") {
    const Fixture* fx = find_fixture("path5-da-blt");
    REQUIRE(fx != nullptr);
    std::istringstream in(fx->instance_text);
    MarketInstance from_stream = parse_instance(in);
    MarketInstance from_string = parse_instance(fx->instance_text);
    CHECK(serialize_instance(from_stream) == serialize_instance(from_string));
}
