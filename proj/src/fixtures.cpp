// fixtures.cpp -- the built-in study markets. Every matching named in a note
// is written in the matching text format so it can be pasted straight back
// into the CLI.

#include "mmkit/fixtures.hpp"

#include <stdexcept>

#include "mmkit/io.hpp"

namespace mmkit {

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"near-complete-3",
         "no lattice structure over the locally-envy-free efficient matchings",
         R"(students: i1 i2 i3
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s1 > s2 > s3
pref i2: s1 > s2 > s3
pref i3: s1 > s2 > s3
pref s1: i1 > i2 > i3
pref s2: i1 > i2 > i3
pref s3: i1 > i2 > i3
edges: i1-i2 i1-i3
)",
         "",
         "Identical preferences on both sides, i1 acquainted with both others.\n"
         "Among the locally-envy-free efficient matchings, 'match: i1=s1 i2=s2 i3=s3'\n"
         "and 'match: i1=s1 i2=s3 i3=s2' have no common upper bound in the set, and\n"
         "no element of the set is weakly best for every student."},

        {"path3-sizes",
         "locally-envy-free efficient matchings of different sizes",
         R"(students: i1 i2 i3
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s1 > s2 > s3
pref i2: s2
pref i3: s1 > s2 > s3
pref s1: i2 > i1 > i3
pref s2: i3 > i2 > i1
pref s3: i1 > i2 > i3
edges: i1-i2 i2-i3
)",
         "",
         "i2 finds only s2 acceptable. 'match: i1=s1 i3=s2' (two students placed)\n"
         "and 'match: i1=s3 i2=s2 i3=s1' (all three placed) are both locally\n"
         "envy-free and efficient, so the property does not pin down the size."},

        {"path3-pe-vs-lef",
         "every efficient matching carries local justified envy",
         R"(students: i1 i2 i3
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s1 > s2 > s3
pref i2: s2 > s1 > s3
pref i3: s1 > s2 > s3
pref s1: i2 > i1 > i3
pref s2: i1 > i3 > i2
pref s3: i1 > i2 > i3
edges: i1-i2 i2-i3
)",
         "",
         "Four efficient matchings exist and each one leaves some student with\n"
         "justified envy toward an acquaintance, so efficiency and local envy-\n"
         "freeness cannot be met together here."},

        {"sp-path3-p1",
         "path market with peaked school preferences, student profile 1",
         R"(students: i1 i2 i3
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s1 > s2 > s3
pref i2: s1 > s2 > s3
pref i3: s2 > s1 > s3
pref s1: i3 > i2 > i1
pref s2: i1 > i2 > i3
pref s3: i1 > i2 > i3
edges: i1-i2 i2-i3
)",
         "",
         "School preferences are single-peaked on the path. Exactly one matching\n"
         "is locally envy-free and efficient: 'match: i1=s3 i2=s1 i3=s2'. If i1\n"
         "reports s2 > s1 > s3 instead, the market becomes sp-path3-p2, whose\n"
         "first such matching hands i1 the school s2 it truly ranks above s3."},

        {"sp-path3-p2",
         "path market with peaked school preferences, student profile 2",
         R"(students: i1 i2 i3
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s2 > s1 > s3
pref i2: s1 > s2 > s3
pref i3: s2 > s1 > s3
pref s1: i3 > i2 > i1
pref s2: i1 > i2 > i3
pref s3: i1 > i2 > i3
edges: i1-i2 i2-i3
)",
         "",
         "Same schools as sp-path3-p1, shifted student reports. Two matchings are\n"
         "locally envy-free and efficient: 'match: i1=s2 i2=s3 i3=s1' and\n"
         "'match: i1=s3 i2=s1 i3=s2'."},

        {"sp-path3-p3",
         "path market with peaked school preferences, student profile 3",
         R"(students: i1 i2 i3
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s2 > s1 > s3
pref i2: s2 > s1 > s3
pref i3: s2 > s1 > s3
pref s1: i3 > i2 > i1
pref s2: i1 > i2 > i3
pref s3: i1 > i2 > i3
edges: i1-i2 i2-i3
)",
         "",
         "All students agree on s2 > s1 > s3. The only locally-envy-free efficient\n"
         "matching is 'match: i1=s2 i2=s3 i3=s1'."},

        {"path5-da-blt",
         "deferred acceptance and the neighborhood sweep disagree",
         R"(students: i1 i2 i3 i4 i5
schools: s1 s2 s3 s4 s5
quota: s1=1 s2=1 s3=1 s4=1 s5=1
pref i1: s2 > s3 > s4 > s1 > s5
pref i2: s1 > s2 > s3 > s4 > s5
pref i3: s4 > s3 > s2 > s1 > s5
pref i4: s2 > s3 > s4 > s1 > s5
pref i5: s3 > s5 > s1 > s2 > s4
pref s1: i2 > i1 > i3 > i4 > i5
pref s2: i5 > i4 > i3 > i2 > i1
pref s3: i1 > i2 > i3 > i4 > i5
pref s4: i4 > i3 > i2 > i1 > i5
pref s5: i1 > i2 > i3 > i4 > i5
edges: i1-i2 i2-i3 i3-i4 i4-i5
)",
         "",
         "Deferred acceptance gives 'match: i1=s3 i2=s1 i3=s4 i4=s2 i5=s5'; the\n"
         "neighborhood sweep gives 'match: i1=s2 i2=s1 i3=s4 i4=s3 i5=s5' from\n"
         "every processing order. Neither outcome dominates the other: i1 does\n"
         "better in the second, i4 in the first. (i2, s1) is the one mutually-best\n"
         "pair."},

        {"bags-w2",
         "width-2 decomposition with school preferences peaked on it",
         R"(students: i1 i2 i3 i4 i5 i6 i7
schools: s1 s2 s3
quota: s1=1 s2=1 s3=1
pref i1: s1 > s2 > s3
pref i2: s2 > s1 > s3
pref i3: s1 > s3 > s2
pref i4: s3 > s2 > s1
pref i5: s2 > s3 > s1
pref i6: s1 > s2 > s3
pref i7: s3 > s1 > s2
pref s1: i4 > i3 > i5 > i2 > i1 > i7 > i6
pref s2: i1 > i2 > i3 > i4 > i5 > i6 > i7
pref s3: i5 > i4 > i6 > i3 > i7 > i2 > i1
edges: i1-i2 i1-i3 i2-i3 i2-i4 i3-i4 i3-i5 i4-i5 i3-i7 i5-i7 i4-i6 i5-i6
)",
         R"(bags: B1={i3,i4,i5} B2={i2,i3,i4} B3={i1,i2,i3} B4={i3,i5,i7} B5={i4,i5,i6}
tree: B1-B2 B2-B3 B1-B4 B1-B5
)",
         "The graph is the union of the five bag cliques; the decomposition has\n"
         "width 2 and all three school rankings grow bag by bag along its tree\n"
         "(s1 from B1, s2 from B3, s3 from B5)."},

        {"path5-double-peak",
         "peaked on a path decomposition but not on the path itself",
         R"(students: i1 i2 i3 i4 i5
schools: s1 s2
quota: s1=1 s2=1
pref i1: s1 > s2
pref i2: s2 > s1
pref i3: s1 > s2
pref i4: s2 > s1
pref i5: s1 > s2
pref s1: i2 > i4 > i3 > i1 > i5
pref s2: i3 > i2 > i4 > i5 > i1
edges: i1-i2 i2-i3 i3-i4 i4-i5
)",
         R"(bags: B1={i1,i2} B2={i2,i3,i4} B3={i4,i5}
tree: B1-B2 B2-B3
)",
         "s1 ranks i2 then i4, which is disconnected as a path prefix, so s1 is\n"
         "not single-peaked on the path; both schools are single-peaked on the\n"
         "width-2 bag chain, where i2 and i4 share the middle bag."},

        {"pair-one-seat",
         "fairness alone does not seat the mutually-best pair",
         R"(students: i1 i2
schools: s1
quota: s1=1
pref i1: s1
pref i2: s1
pref s1: i1 > i2
)",
         "",
         "The empty matching 'match: i1=- i2=-' is fair (nobody matched, nobody\n"
         "envied) yet leaves the mutually-best pair (i1, s1) apart; it is also\n"
         "wasteful. Only the stable matching 'match: i1=s1' seats the pair."},

        {"pair-q12",
         "locally envy-free yet locally unstable and inefficient",
         R"(students: i1 i2
schools: s1 s2
quota: s1=1 s2=2
pref i1: s2 > s1
pref i2: s2 > s1
pref s1: i1 > i2
pref s2: i2 > i1
edges: i1-i2
)",
         "",
         "In 'match: i1=s1 i2=s2' nobody has justified envy, but i1 sees the free\n"
         "second seat at s2 through the acquainted i2: a visible blocking pair,\n"
         "and moving i1 there is a Pareto improvement. The empty matching here is\n"
         "locally stable by default yet inefficient for the same reason."},

        {"path3-q12",
         "locally envy-free and efficient yet locally unstable",
         R"(students: i1 i2 i3
schools: s1 s2
quota: s1=1 s2=2
pref i1: s2 > s1
pref i2: s2 > s1
pref i3: s2 > s1
pref s1: i1 > i2 > i3
pref s2: i2 > i1 > i3
edges: i1-i2 i2-i3
)",
         "",
         "In 'match: i1=s1 i2=s2 i3=s2' no acquaintance is enviable, and no\n"
         "Pareto improvement exists, yet (i1, s2) blocks: s2 ranks i1 above its\n"
         "worst admit i3, and i1 sees the roster through i2."},
    };
    return all;
}

const Fixture* find_fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

MarketInstance fixture_instance(const std::string& name) {
    const Fixture* f = find_fixture(name);
    if (!f) throw std::invalid_argument("unknown fixture: " + name);
    try {
        return parse_instance(f->instance_text);
    } catch (const std::exception& e) {
        throw std::logic_error("fixture " + name + " does not validate: " + e.what());
    }
}

} // namespace mmkit
