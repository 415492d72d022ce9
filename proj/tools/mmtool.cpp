// mmtool.cpp -- command-line front end. Exit codes: 0 success, 1 a property
// check came back negative (or a mechanism could not finish), 2 bad input.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mmkit/analysis.hpp"
#include "mmkit/fixtures.hpp"
#include "mmkit/gen.hpp"
#include "mmkit/io.hpp"
#include "mmkit/market.hpp"
#include "mmkit/mechanisms.hpp"
#include "mmkit/oracle.hpp"
#include "mmkit/properties.hpp"

using namespace mmkit;

namespace {

// "-" reads stdin. Validation issues go to stderr; errors abort with code 2.
MarketInstance load_instance(const std::string& path) {
    if (path.empty())
        throw std::invalid_argument("--instance is required for this subcommand");
    ValidationReport report;
    MarketInstance inst = path == "-" ? parse_instance(std::cin, &report)
                                      : parse_instance_file(path, &report);
    if (!report.issues.empty()) std::cerr << report.to_string();
    if (!report.ok()) throw std::invalid_argument("instance failed validation");
    return inst;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace((unsigned char)c)) {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return names;
}

std::vector<int> student_order(const MarketInstance& inst, const std::string& text) {
    std::vector<int> order;
    for (const auto& name : split_names(text)) {
        int i = inst.student_index(name);
        if (i < 0) throw std::invalid_argument("unknown student: " + name);
        order.push_back(i);
    }
    return order;
}

// ids cannot contain '-', so the first dash splits an edge token
AcquaintanceGraph parse_edge_list(const MarketInstance& inst, const std::string& text) {
    AcquaintanceGraph g;
    g.n = inst.n();
    for (const auto& token : split_names(text)) {
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("expected an a-b edge, got " + token);
        int a = inst.student_index(token.substr(0, dash));
        int b = inst.student_index(token.substr(dash + 1));
        if (a < 0 || b < 0)
            throw std::invalid_argument("unknown student in edge " + token);
        g.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    g.build_adjacency();
    return g;
}

std::string match_line(const MarketInstance& inst, const Matching& y) {
    std::string line = serialize_matching(y, inst);
    line.pop_back();   // drop the newline for inline use
    return line;
}

struct MechArgs {
    std::string mechanism = "blt2";
    std::string master;
    std::string policy = "declared";
    std::string order;
    int k = 2;
    bool diagnose = false;
    bool reverse = false;
    std::string tree;
};

void add_mech_options(CLI::App* cmd, MechArgs& args) {
    cmd->add_option("--mechanism", args.mechanism,
                    "da, sd, blt2, blt-k, sd-degeneracy, blt2-tree")
        ->check(CLI::IsMember({"da", "sd", "blt2", "blt-k", "sd-degeneracy",
                               "blt2-tree"}));
    cmd->add_option("--master", args.master, "sd: processing order (student names)");
    cmd->add_option("--policy", args.policy, "b-lt scan order policy")
        ->check(CLI::IsMember({"declared", "explicit", "random"}));
    cmd->add_option("--order", args.order, "b-lt explicit scan order (student names)");
    cmd->add_option("--k", args.k, "blt-k: admit while under k unassigned neighbors outrank");
    cmd->add_flag("--diagnose", args.diagnose,
                  "blt-k: note attack-count mismatches instead of failing");
    cmd->add_flag("--reverse", args.reverse,
                  "sd-degeneracy: process the removal order backwards");
    cmd->add_option("--tree", args.tree,
                    "blt2-tree: spanning tree edges, e.g. 'i1-i2 i2-i3'");
}

MechanismConfig make_mech(const MarketInstance& inst, const MechArgs& args,
                          std::uint64_t seed) {
    MechanismConfig cfg;
    if (args.policy == "explicit") {
        cfg.selection.policy = SelectionPolicy::ExplicitOrder;
        cfg.selection.order = student_order(inst, args.order);
    } else if (args.policy == "random") {
        cfg.selection.policy = SelectionPolicy::SeededRandom;
        cfg.selection.seed = seed;
    }
    if (args.mechanism == "da") {
        cfg.kind = MechanismConfig::Kind::DeferredAcceptance;
    } else if (args.mechanism == "sd") {
        cfg.kind = MechanismConfig::Kind::SerialDictatorship;
        if (args.master.empty())
            throw std::invalid_argument("sd needs --master");
        cfg.master.order = student_order(inst, args.master);
    } else if (args.mechanism == "blt2") {
        cfg.kind = MechanismConfig::Kind::BLt2;
    } else if (args.mechanism == "blt-k") {
        cfg.kind = MechanismConfig::Kind::BLtKPlus1;
        cfg.k = args.k;
        cfg.certified = !args.diagnose;
    } else if (args.mechanism == "sd-degeneracy") {
        cfg.kind = MechanismConfig::Kind::SdDegeneracy;
        cfg.reverse = args.reverse;
    } else {
        cfg.kind = MechanismConfig::Kind::BLt2OnTree;
        if (args.tree.empty())
            throw std::invalid_argument("blt2-tree needs --tree");
        cfg.tree = parse_edge_list(inst, args.tree);
    }
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"matching-market toolkit: mechanisms, property checks, "
                 "exhaustive oracles"};
    app.require_subcommand(1);

    std::string instance_path, out_path, format = "text";
    std::uint64_t seed = 0;
    bool force = false;
    app.add_option("--instance", instance_path, "instance file ('-' for stdin)");
    app.add_option("--out", out_path, "write output here instead of stdout");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "csv"}));
    auto* seed_opt = app.add_option("--seed", seed, "seed for anything randomized");
    app.add_flag("--force", force, "run exhaustive checks past the desk-scale bounds");

    // callbacks run inside parse(), so bounds must be assembled lazily
    auto desk = [&] {
        DeskBounds b;
        b.force = force;
        return b;
    };
    int rc = 0;

    // solve
    MechArgs margs;
    bool solve_report = false, solve_trace = false;
    auto* solve = app.add_subcommand("solve", "run a mechanism, print the matching");
    add_mech_options(solve, margs);
    solve->add_flag("--report", solve_report, "append the property report");
    solve->add_flag("--trace", solve_trace, "append the mechanism trace");
    solve->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        MechanismTrace trace;
        Matching y = run_mechanism(inst, make_mech(inst, margs, seed), &trace);
        std::ostringstream out;
        out << serialize_matching(y, inst);
        if (solve_trace) out << trace.to_text(inst);
        if (solve_report) {
            PropertyReport rep = analyze_matching(inst, y, desk());
            if (format == "csv")
                out << PropertyReport::csv_header() << '\n' << rep.to_csv() << '\n';
            else
                out << rep.to_text();
        }
        write_out(out_path, out.str());
    });

    // check
    std::string matching_path, matching_inline, require;
    auto* check = app.add_subcommand("check", "report the properties of a matching");
    check->add_option("--matching", matching_path, "matching file ('-' for stdin)");
    check->add_option("--match", matching_inline,
                      "inline matching, e.g. 'i1=s1 i2=-'");
    check->add_option("--require", require,
                      "comma-separated properties that must hold (exit 1 otherwise)");
    check->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        Matching y;
        if (!matching_inline.empty()) {
            std::string text = matching_inline.rfind("match:", 0) == 0
                                   ? matching_inline
                                   : "match: " + matching_inline;
            y = parse_matching(text, inst);
        } else if (matching_path == "-") {
            y = parse_matching(std::cin, inst);
        } else if (!matching_path.empty()) {
            y = parse_matching_file(matching_path, inst);
        } else {
            throw std::invalid_argument("check needs --matching or --match");
        }
        PropertyReport rep = analyze_matching(inst, y, desk());
        std::ostringstream out;
        if (format == "csv")
            out << PropertyReport::csv_header() << '\n' << rep.to_csv() << '\n';
        else
            out << rep.to_text();
        write_out(out_path, out.str());
        for (const auto& name : split_names(require)) {
            bool value;
            if (name == "feasible") value = rep.feasible;
            else if (name == "fair") value = rep.fair;
            else if (name == "locally_envy_free") value = rep.locally_envy_free;
            else if (name == "nonwasteful") value = rep.nonwasteful;
            else if (name == "stable") value = rep.stable;
            else if (name == "pareto_efficient") value = rep.pareto_efficient;
            else if (name == "mutually_best") value = rep.mutually_best;
            else if (name == "locally_stable") value = rep.locally_stable;
            else throw std::invalid_argument("unknown property: " + name);
            if (!value) {
                std::cerr << "requirement failed: " << name << '\n';
                rc = 1;
            }
        }
    });

    // shared filter flags for enumerate / lattice
    MatchingFilter filter;
    int exact_size = -1;
    auto add_filter_options = [&](CLI::App* cmd) {
        cmd->add_flag("--lef", filter.lef, "keep locally envy-free matchings");
        cmd->add_flag("--fair", filter.fair, "keep fair matchings");
        cmd->add_flag("--nonwasteful", filter.nonwasteful, "keep nonwasteful matchings");
        cmd->add_flag("--pe", filter.pareto_efficient, "keep Pareto-efficient matchings");
        cmd->add_flag("--stable", filter.stable, "keep stable matchings");
        cmd->add_flag("--mb", filter.mutually_best,
                      "keep matchings containing every mutually-best pair");
        cmd->add_flag("--ls", filter.locally_stable, "keep locally stable matchings");
        cmd->add_option("--size", exact_size, "keep matchings placing exactly this many");
    };

    auto* enumerate = app.add_subcommand(
        "enumerate", "list every feasible matching passing the filters");
    add_filter_options(enumerate);
    enumerate->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        filter.exact_size = exact_size;
        auto found = enumerate_matchings(inst, filter, desk());
        std::ostringstream out;
        if (format == "csv") {
            out << "assignment\n";
            for (const auto& y : found) {
                for (int i = 0; i < inst.n(); i++) {
                    if (i) out << ';';
                    out << inst.students[i] << '='
                        << (y.to_school[i] == kNone ? std::string("-")
                                                    : inst.schools[y.to_school[i]]);
                }
                out << '\n';
            }
        } else {
            for (const auto& y : found) out << serialize_matching(y, inst);
            out << "count: " << found.size() << '\n';
        }
        write_out(out_path, out.str());
    });

    auto* lee = app.add_subcommand(
        "lee", "find a locally envy-free efficient matching, if any exists");
    lee->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        auto y = decide_lee(inst, desk());
        write_out(out_path, y ? serialize_matching(*y, inst) : "none\n");
    });

    auto* lattice = app.add_subcommand(
        "lattice", "order structure of a filtered matching set");
    add_filter_options(lattice);
    lattice->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        filter.exact_size = exact_size;
        LatticeReport rep = check_lattice_closure(inst, filter, desk());
        std::ostringstream out;
        if (format == "csv") {
            out << "set_size,nojoin_pairs,has_optimum\n"
                << rep.set.size() << ',' << rep.nojoin_pairs.size() << ','
                << rep.has_optimum << '\n';
        } else {
            out << "set_size: " << rep.set.size() << '\n';
            out << "has_optimum: " << (rep.has_optimum ? "yes" : "no") << '\n';
            if (rep.has_optimum)
                out << "optimum: " << match_line(inst, rep.optimum) << '\n';
            out << "nojoin_pairs: " << rep.nojoin_pairs.size() << '\n';
            for (auto& [a, b] : rep.nojoin_pairs) {
                out << "  " << match_line(inst, rep.set[a]) << '\n';
                out << "  " << match_line(inst, rep.set[b]) << "\n";
            }
        }
        write_out(out_path, out.str());
    });

    auto* rural = app.add_subcommand(
        "rural", "do all matchings of a fairness class place the same students?");
    rural->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        RuralReport rep = rural_hospitals_check(inst, desk());
        std::ostringstream out;
        auto sizes = [](const RuralClassStat& c) {
            std::ostringstream s;
            for (std::size_t k = 0; k < c.sizes.size(); k++)
                s << (k ? ";" : "") << c.sizes[k];
            return s.str();
        };
        if (format == "csv") {
            out << "class,count,same_size,same_fill,sizes\n";
            for (const auto* c : {&rep.lef_pe, &rep.lef_nonwasteful})
                out << c->label << ',' << c->count << ',' << c->same_size << ','
                    << c->same_fill << ',' << sizes(*c) << '\n';
        } else {
            for (const auto* c : {&rep.lef_pe, &rep.lef_nonwasteful})
                out << "class " << c->label << ": count=" << c->count
                    << " same_size=" << (c->same_size ? "yes" : "no")
                    << " same_fill=" << (c->same_fill ? "yes" : "no")
                    << " sizes=" << sizes(*c) << '\n';
        }
        write_out(out_path, out.str());
    });

    // verify-sp
    MechArgs vargs;
    auto* verify = app.add_subcommand(
        "verify-sp", "search every misreport for a profitable lie (exit 1 if found)");
    add_mech_options(verify, vargs);
    verify->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        auto witness = verify_strategyproofness(inst, make_mech(inst, vargs, seed),
                                                desk());
        std::ostringstream out;
        if (!witness) {
            out << "no manipulation found\n";
        } else {
            rc = 1;
            out << "manipulable: yes\n";
            out << "student: " << inst.students[witness->student] << '\n';
            out << "misreport:";
            if (witness->misreport.empty()) out << " (empty)";
            for (std::size_t r = 0; r < witness->misreport.size(); r++)
                out << (r ? " > " : " ") << inst.schools[witness->misreport[r]];
            out << '\n';
            out << "honest_school: "
                << (witness->honest_school == kNone
                        ? std::string("-")
                        : inst.schools[witness->honest_school])
                << '\n';
            out << "lied_school: " << inst.schools[witness->lied_school] << '\n';
        }
        write_out(out_path, out.str());
    });

    // reduce
    std::string red_student, red_school;
    bool red_decide = false;
    auto* reduce = app.add_subcommand(
        "reduce", "rewrite pick-order feasibility as a local-envy question");
    reduce->add_option("--student", red_student, "student of the queried pair")->required();
    reduce->add_option("--school", red_school, "school of the queried pair")->required();
    reduce->add_flag("--decide", red_decide,
                     "also decide both sides by brute force (exit 1 on disagreement)");
    reduce->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        int i = inst.student_index(red_student);
        int s = inst.school_index(red_school);
        if (i < 0) throw std::invalid_argument("unknown student: " + red_student);
        if (s < 0) throw std::invalid_argument("unknown school: " + red_school);
        MarketInstance reduced = reduce_sd_feasibility_to_lee(inst, i, s);
        std::ostringstream out;
        out << serialize_instance(reduced);
        if (red_decide) {
            bool brute = sd_feasible_brute(inst, i, s, desk());
            bool lee_ans = decide_lee(reduced, desk()).has_value();
            out << "# sd_feasible_brute: " << (brute ? "yes" : "no") << '\n';
            out << "# lee_on_reduction: " << (lee_ans ? "yes" : "no") << '\n';
            if (brute != lee_ans) {
                std::cerr << "reduction and brute force disagree\n";
                rc = 1;
            }
        }
        write_out(out_path, out.str());
    });

    // gen
    GeneratorSpec gspec;
    std::string gfamily = "random-tree", gprefs = "general", gquota = "unit";
    std::string out_decomp;
    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    gen->add_option("--students", gspec.students, "number of students");
    gen->add_option("--schools", gspec.schools, "number of schools");
    gen->add_option("--family", gfamily,
                    "path, random-tree, partial-k-tree, tree-plus-chords, complete");
    gen->add_option("--prefs", gprefs, "general, peaked-tree, peaked-decomposition");
    gen->add_option("--quotas", gquota, "unit or random");
    gen->add_option("--k", gspec.k, "partial-k-tree backbone size");
    gen->add_option("--degree-cap", gspec.degree_cap, "tree-plus-chords degree cap");
    gen->add_option("--chords", gspec.chords, "tree-plus-chords extra edges");
    gen->add_option("--max-quota", gspec.max_quota, "random quotas drawn from [1, this]");
    gen->add_option("--out-decomp", out_decomp,
                    "write the shipped tree decomposition here");
    gen->callback([&] {
        if (seed_opt->count() == 0)
            throw std::invalid_argument("gen needs an explicit --seed");
        gspec.family = parse_family(gfamily);
        gspec.pref_mode = parse_pref_mode(gprefs);
        gspec.quota_mode = parse_quota_mode(gquota);
        gspec.seed = seed;
        GeneratedInstance g = generate(gspec);
        std::ostringstream out;
        out << serialize_instance(g.inst);
        if (g.has_tree) {
            out << "# underlying tree:";
            for (auto& [a, b] : g.tree.edges)
                out << ' ' << g.inst.students[a] << '-' << g.inst.students[b];
            out << '\n';
        }
        if (!out_decomp.empty()) {
            if (!g.has_decomposition)
                throw std::invalid_argument("family " + gfamily +
                                            " ships no decomposition");
            write_out(out_decomp, serialize_decomposition(g.decomposition, g.inst));
        }
        write_out(out_path, out.str());
    });

    // analyze
    std::string decomp_path;
    auto* analyze = app.add_subcommand("analyze", "structural report on an instance");
    analyze->add_option("--decomposition", decomp_path, "tree decomposition file");
    analyze->callback([&] {
        MarketInstance inst = load_instance(instance_path);
        TreeDecomposition td;
        bool have_td = false;
        if (!decomp_path.empty()) {
            td = parse_decomposition_file(decomp_path, inst);
            have_td = true;
        }
        InstanceReport rep = analyze_instance(inst, have_td ? &td : nullptr);
        std::ostringstream out;
        if (format == "csv")
            out << InstanceReport::csv_header() << '\n' << rep.to_csv(inst);
        else
            out << rep.to_text(inst);
        write_out(out_path, out.str());
    });

    // fixtures
    std::string fixture_name;
    bool fixture_note = false;
    auto* fix = app.add_subcommand("fixtures", "list or print the built-in markets");
    fix->add_option("--name", fixture_name, "print this fixture instead of the list");
    fix->add_flag("--note", fixture_note, "prefix the instance with its study note");
    fix->add_option("--out-decomp", out_decomp,
                    "write the fixture's tree decomposition here");
    fix->callback([&] {
        std::ostringstream out;
        if (fixture_name.empty()) {
            for (const auto& f : fixtures())
                out << f.name << " - " << f.description << '\n';
            write_out(out_path, out.str());
            return;
        }
        const Fixture* f = find_fixture(fixture_name);
        if (!f) throw std::invalid_argument("unknown fixture: " + fixture_name);
        if (fixture_note) {
            std::istringstream note(f->note);
            for (std::string line; std::getline(note, line);)
                out << "# " << line << '\n';
        }
        out << f->instance_text;
        if (!out_decomp.empty()) {
            if (f->decomposition_text.empty())
                throw std::invalid_argument("fixture " + fixture_name +
                                            " ships no decomposition");
            write_out(out_decomp, f->decomposition_text);
        }
        write_out(out_path, out.str());
    });

    // global flags may appear after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const MechanismError& e) {
        std::cerr << "mechanism failed: " << e.what() << '\n';
        return 1;
    } catch (const DecompositionError& e) {
        std::cerr << "decomposition error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
