// oracle.cpp -- exhaustive checks: enumeration, existence questions, order
// structure, rural-hospitals style invariants, strategyproofness, and the
// feasibility-to-existence rewrite.

#include "mmkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "enum_core.hpp"

namespace mmkit {

namespace detail {

std::vector<std::vector<int>> option_table(const MarketInstance& inst) {
    std::vector<std::vector<int>> opts(inst.n());
    for (int i = 0; i < inst.n(); i++) {
        opts[i].push_back(kNone);
        auto sorted = inst.student_pref[i];
        std::sort(sorted.begin(), sorted.end());
        opts[i].insert(opts[i].end(), sorted.begin(), sorted.end());
    }
    return opts;
}

void enumerate_from(const MarketInstance& inst,
                    const std::vector<std::vector<int>>& opts, int i,
                    std::vector<int>& pick, std::vector<int>& fill,
                    std::vector<Matching>& out) {
    if (i == inst.n()) {
        Matching y;
        y.to_school = pick;
        out.push_back(std::move(y));
        return;
    }
    for (int s : opts[i]) {
        if (s != kNone) {
            if (fill[s] == inst.quota[s]) continue;
            fill[s]++;
        }
        pick[i] = s;
        enumerate_from(inst, opts, i + 1, pick, fill, out);
        if (s != kNone) fill[s]--;
    }
}

} // namespace detail

namespace {

// leaner than envy_report when only yes/no is needed
bool lef_quick(const MarketInstance& inst, const Matching& y) {
    for (int i = 0; i < inst.n(); i++)
        for (int j : inst.graph.neighbors(i)) {
            int s = y.to_school[j];
            if (s == kNone) continue;
            if (inst.student_prefers(i, s, y.to_school[i]) &&
                inst.school_prefers(s, i, j))
                return false;
        }
    return true;
}

} // namespace

std::vector<Matching> enumerate_feasible(const MarketInstance& inst,
                                         const DeskBounds& bounds) {
    enforce_bounds(inst, bounds);
    auto opts = detail::option_table(inst);
    std::vector<Matching> out;
    std::vector<int> pick(inst.n(), kNone), fill(inst.m(), 0);
    detail::enumerate_from(inst, opts, 0, pick, fill, out);
    return out;
}

bool dominates(const MarketInstance& inst, const Matching& z, const Matching& y) {
    bool strict = false;
    for (int i = 0; i < inst.n(); i++) {
        int a = z.to_school[i], b = y.to_school[i];
        if (a == b) continue;
        if (!inst.student_prefers(i, a, b)) return false;
        strict = true;
    }
    return strict;
}

std::vector<char> mark_pareto(const MarketInstance& inst,
                              const std::vector<Matching>& all) {
    std::vector<char> pe(all.size(), 1);
    for (std::size_t a = 0; a < all.size(); a++)
        for (std::size_t b = 0; b < all.size(); b++)
            if (b != a && dominates(inst, all[b], all[a])) {
                pe[a] = 0;
                break;
            }
    return pe;
}

std::vector<Matching> enumerate_matchings(const MarketInstance& inst,
                                          const MatchingFilter& filter,
                                          const DeskBounds& bounds) {
    auto all = enumerate_feasible_parallel(inst, bounds);
    std::vector<char> pe;
    if (filter.pareto_efficient) pe = mark_pareto_parallel(inst, all);

    std::vector<Matching> out;
    for (std::size_t idx = 0; idx < all.size(); idx++) {
        const Matching& y = all[idx];
        if (filter.exact_size >= 0 && (int)y.size() != filter.exact_size) continue;
        if (filter.pareto_efficient && !pe[idx]) continue;
        if (filter.lef && !lef_quick(inst, y)) continue;
        if ((filter.fair || filter.stable) && has_justified_envy(inst, y)) continue;
        if ((filter.nonwasteful || filter.stable) && !is_nonwasteful(inst, y)) continue;
        if (filter.mutually_best && !is_mutually_best(inst, y)) continue;
        if (filter.locally_stable && !is_locally_stable(inst, y)) continue;
        out.push_back(y);
    }
    return out;
}

std::optional<Matching> decide_lee(const MarketInstance& inst,
                                   const DeskBounds& bounds) {
    auto all = enumerate_feasible_parallel(inst, bounds);
    for (const Matching& y : all) {
        if (!lef_quick(inst, y)) continue;
        bool dominated = false;
        for (const Matching& z : all)
            if (dominates(inst, z, y)) {
                dominated = true;
                break;
            }
        if (!dominated) return y;
    }
    return std::nullopt;
}

LatticeReport check_lattice_closure(const MarketInstance& inst,
                                    const MatchingFilter& filter,
                                    const DeskBounds& bounds) {
    LatticeReport rep;
    rep.set = enumerate_matchings(inst, filter, bounds);
    const auto& set = rep.set;

    auto weakly_better = [&](const Matching& z, const Matching& y) {
        for (int i = 0; i < inst.n(); i++) {
            int a = z.to_school[i], b = y.to_school[i];
            if (a != b && !inst.student_prefers(i, a, b)) return false;
        }
        return true;
    };

    for (std::size_t a = 0; a < set.size(); a++)
        for (std::size_t b = a + 1; b < set.size(); b++) {
            bool bounded = false;
            for (const Matching& z : set)
                if (weakly_better(z, set[a]) && weakly_better(z, set[b])) {
                    bounded = true;
                    break;
                }
            if (!bounded) rep.nojoin_pairs.emplace_back((int)a, (int)b);
        }

    for (const Matching& z : set) {
        bool top = true;
        for (const Matching& y : set)
            if (!weakly_better(z, y)) {
                top = false;
                break;
            }
        if (top) {
            rep.has_optimum = true;
            rep.optimum = z;
            break;
        }
    }
    return rep;
}

RuralReport rural_hospitals_check(const MarketInstance& inst,
                                  const DeskBounds& bounds) {
    auto build = [&](const char* label, const MatchingFilter& f) {
        RuralClassStat st;
        st.label = label;
        auto set = enumerate_matchings(inst, f, bounds);
        st.count = (int)set.size();
        std::set<int> sizes;
        for (const Matching& y : set) sizes.insert((int)y.size());
        st.sizes.assign(sizes.begin(), sizes.end());
        st.same_size = sizes.size() <= 1;
        st.same_fill = true;
        if (!set.empty()) {
            auto first = set.front().fill(inst);
            for (const Matching& y : set)
                if (y.fill(inst) != first) {
                    st.same_fill = false;
                    break;
                }
        }
        return st;
    };

    MatchingFilter lef_pe;
    lef_pe.lef = true;
    lef_pe.pareto_efficient = true;
    MatchingFilter lef_nw;
    lef_nw.lef = true;
    lef_nw.nonwasteful = true;

    RuralReport rep;
    rep.lef_pe = build("lef+pe", lef_pe);
    rep.lef_nonwasteful = build("lef+nonwasteful", lef_nw);
    return rep;
}

std::optional<ManipulationWitness> verify_strategyproofness(
    const MarketInstance& inst, const MechanismConfig& mech,
    const DeskBounds& bounds) {
    enforce_bounds(inst, bounds);
    Matching honest = run_mechanism(inst, mech);

    for (int i = 0; i < inst.n(); i++) {
        const auto& declared = inst.student_pref[i];
        const int d = (int)declared.size();
        for (unsigned mask = 0; mask < (1u << d); mask++) {
            std::vector<int> lie_list;
            for (int p = 0; p < d; p++)
                if (mask & (1u << p)) lie_list.push_back(declared[p]);
            std::sort(lie_list.begin(), lie_list.end());
            do {
                if (lie_list == declared) continue;
                MarketInstance lie = inst;
                lie.student_pref[i] = lie_list;
                lie.finalize(nullptr);
                Matching out;
                try {
                    out = run_mechanism(lie, mech);
                } catch (const MechanismError&) {
                    continue;  // the lie broke the mechanism's preconditions
                }
                if (inst.student_prefers(i, out.to_school[i], honest.to_school[i]))
                    return ManipulationWitness{i, lie_list, honest.to_school[i],
                                               out.to_school[i]};
            } while (std::next_permutation(lie_list.begin(), lie_list.end()));
        }
    }
    return std::nullopt;
}

namespace {

// shared by sd_feasible_brute and the reduction: the object-allocation shape
void require_allocation_market(const MarketInstance& source, int student, int school) {
    if (source.n() != source.m())
        throw std::invalid_argument("allocation market needs as many schools as students");
    for (int s = 0; s < source.m(); s++)
        if (source.quota[s] != 1)
            throw std::invalid_argument("allocation market needs unit quotas");
    for (int i = 0; i < source.n(); i++)
        if ((int)source.student_pref[i].size() != source.m())
            throw std::invalid_argument("allocation market needs complete student lists");
    for (int s = 0; s < source.m(); s++)
        if ((int)source.school_pref[s].size() != source.n())
            throw std::invalid_argument("allocation market needs complete school lists");
    if (student < 0 || student >= source.n() || school < 0 || school >= source.m())
        throw std::invalid_argument("target pair is out of range");
}

std::string fresh_id(std::string base, const std::vector<std::string>& taken_a,
                     const std::vector<std::string>& taken_b) {
    auto used = [&](const std::string& t) {
        return std::find(taken_a.begin(), taken_a.end(), t) != taken_a.end() ||
               std::find(taken_b.begin(), taken_b.end(), t) != taken_b.end();
    };
    while (used(base)) base += "x";
    return base;
}

} // namespace

bool sd_feasible_brute(const MarketInstance& source, int student, int school,
                       const DeskBounds& bounds) {
    enforce_bounds(source, bounds);
    require_allocation_market(source, student, school);
    std::vector<int> order(source.n());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (serial_dictatorship(source, MasterList{order}).to_school[student] == school)
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

MarketInstance reduce_sd_feasibility_to_lee(const MarketInstance& source,
                                            int student, int school) {
    require_allocation_market(source, student, school);
    const int n = source.n();

    MarketInstance out;
    out.students = source.students;
    out.students.push_back(fresh_id("aux_i", source.students, source.schools));
    out.schools = source.schools;
    out.schools.push_back(fresh_id("aux_s", source.students, source.schools));
    const int aux_i = n, aux_s = n;
    out.quota.assign(n + 1, 1);

    // students keep their lists, with the new school appended as worst;
    // the new student ranks schools in declared order, new school last
    out.student_pref.assign(n + 1, {});
    for (int i = 0; i < n; i++) {
        out.student_pref[i] = source.student_pref[i];
        out.student_pref[i].push_back(aux_s);
    }
    for (int s = 0; s < n; s++) out.student_pref[aux_i].push_back(s);
    out.student_pref[aux_i].push_back(aux_s);

    // the target school puts the chosen student on top and the new student
    // last; every other school buries the chosen student below the new one
    out.school_pref.assign(n + 1, {});
    std::vector<int> rest;
    for (int i = 0; i < n; i++)
        if (i != student) rest.push_back(i);
    for (int s = 0; s <= n; s++) {
        if (s == school) {
            out.school_pref[s].push_back(student);
            out.school_pref[s].insert(out.school_pref[s].end(), rest.begin(), rest.end());
            out.school_pref[s].push_back(aux_i);
        } else {
            out.school_pref[s] = rest;
            out.school_pref[s].push_back(aux_i);
            out.school_pref[s].push_back(student);
        }
    }

    // chosen student and new student know everyone; the rest know only them
    out.graph.n = n + 1;
    out.graph.edges.emplace_back(student, aux_i);
    for (int j : rest) {
        out.graph.edges.emplace_back(student, j);
        out.graph.edges.emplace_back(aux_i, j);
    }

    auto report = validate_instance(out);
    if (!report.ok())
        throw std::logic_error("reduction produced an invalid market:\n" + report.to_string());
    return out;
}

} // namespace mmkit
