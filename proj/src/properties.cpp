// properties.cpp -- matching analyzers.

#include "mmkit/properties.hpp"

#include <algorithm>
#include <sstream>

namespace mmkit {

EnvyReport envy_report(const MarketInstance& inst, const Matching& y) {
    check_matching(inst, y);
    const int n = inst.n();
    EnvyReport rep;
    rep.ev.assign(n, {});
    rep.evr.assign(n, {});
    rep.loc_ev.assign(n, {});
    rep.loc_evr.assign(n, {});

    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            if (j == i) continue;
            int s = y.to_school[j];
            if (s == kNone) continue;
            if (!inst.student_prefers(i, s, y.to_school[i])) continue;
            if (!inst.school_prefers(s, i, j)) continue;
            rep.ev[i].push_back(j);
            rep.evr[j].push_back(i);
            if (inst.graph.has_edge(i, j)) {
                rep.loc_ev[i].push_back(j);
                rep.loc_evr[j].push_back(i);
            }
        }
    }
    for (int i = 0; i < n; i++) {
        rep.ef_level = std::max(rep.ef_level, (int)rep.ev[i].size());
        rep.erf_level = std::max(rep.erf_level, (int)rep.evr[i].size());
        rep.local_ef_level = std::max(rep.local_ef_level, (int)rep.loc_ev[i].size());
        rep.local_erf_level = std::max(rep.local_erf_level, (int)rep.loc_evr[i].size());
    }
    return rep;
}

bool has_justified_envy(const MarketInstance& inst, const Matching& y) {
    check_matching(inst, y);
    const int n = inst.n();
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (j == i) continue;
            int s = y.to_school[j];
            if (s == kNone) continue;
            if (inst.student_prefers(i, s, y.to_school[i]) &&
                inst.school_prefers(s, i, j))
                return true;
        }
    return false;
}

std::string EnvyReport::to_text(const MarketInstance& inst, const Matching& y) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < ev.size(); i++)
        for (int j : ev[i]) {
            out << "envy: " << inst.students[i] << " -> " << inst.students[j]
                << " at " << inst.schools[y.to_school[j]];
            if (inst.graph.has_edge((int)i, j)) out << " [local]";
            out << '\n';
        }
    out << "levels: ef=" << ef_level << " erf=" << erf_level
        << " local_ef=" << local_ef_level << " local_erf=" << local_erf_level << '\n';
    return out.str();
}

bool is_nonwasteful(const MarketInstance& inst, const Matching& y,
                    std::pair<int, int>* waste) {
    check_matching(inst, y);
    auto fill = y.fill(inst);
    for (int i = 0; i < inst.n(); i++) {
        for (int s : inst.student_pref[i]) {
            if (s == y.to_school[i]) break;  // from here on, i is not better off
            if (fill[s] < inst.quota[s]) {
                if (waste) *waste = {i, s};
                return false;
            }
        }
    }
    return true;
}

bool is_pareto_efficient(const MarketInstance& inst, const Matching& y,
                         Matching* dominator, const DeskBounds& bounds) {
    check_matching(inst, y);
    if (!is_feasible(inst, y)) return false;
    enforce_bounds(inst, bounds);

    const int n = inst.n();
    // Each student may keep its seat or move strictly up its own list; any
    // feasible combination with at least one move dominates y.
    std::vector<std::vector<int>> options(n);
    for (int i = 0; i < n; i++) {
        for (int s : inst.student_pref[i]) {
            if (s == y.to_school[i]) break;
            options[i].push_back(s);
        }
        options[i].push_back(y.to_school[i]);
    }

    auto fill = std::vector<int>(inst.m(), 0);
    std::vector<int> pick(n, kNone);
    bool found = false;

    auto rec = [&](auto&& self, int i, int moved) -> void {
        if (found) return;
        if (i == n) {
            if (moved == 0) return;
            found = true;
            if (dominator) dominator->to_school = pick;
            return;
        }
        for (int s : options[i]) {
            bool is_move = (s != y.to_school[i]);
            if (s != kNone) {
                if (fill[s] == inst.quota[s]) continue;
                fill[s]++;
            }
            pick[i] = s;
            self(self, i + 1, moved + (is_move ? 1 : 0));
            if (s != kNone) fill[s]--;
            if (found) return;
        }
    };
    rec(rec, 0, 0);
    return !found;
}

std::vector<std::pair<int, int>> mb_pairs(const MarketInstance& inst) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < inst.n(); i++) {
        if (inst.student_pref[i].empty()) continue;
        int s = inst.student_pref[i][0];
        if (inst.quota[s] < 1) continue;
        if (!inst.school_pref[s].empty() && inst.school_pref[s][0] == i)
            out.emplace_back(i, s);
    }
    return out;
}

bool is_mutually_best(const MarketInstance& inst, const Matching& y) {
    check_matching(inst, y);
    for (auto& [i, s] : mb_pairs(inst))
        if (y.to_school[i] != s) return false;
    return true;
}

bool is_locally_stable(const MarketInstance& inst, const Matching& y,
                       std::pair<int, int>* blocking) {
    check_matching(inst, y);
    auto rosters = y.school_rosters(inst);
    for (int i = 0; i < inst.n(); i++) {
        for (int s : inst.student_pref[i]) {
            if (s == y.to_school[i]) break;
            if (inst.quota[s] == 0) continue;
            bool blocks;
            if ((int)rosters[s].size() < inst.quota[s]) {
                blocks = true;  // free seat and i holds a contract with s
            } else {
                blocks = false;
                for (int j : rosters[s])
                    if (inst.irank[s][i] < inst.irank[s][j]) { blocks = true; break; }
            }
            if (!blocks) continue;
            for (int j : inst.graph.neighbors(i)) {
                if (y.to_school[j] == s) {
                    if (blocking) *blocking = {i, s};
                    return false;  // i can see the blocked school through j
                }
            }
        }
    }
    return true;
}

PropertyReport analyze_matching(const MarketInstance& inst, const Matching& y,
                                const DeskBounds& bounds) {
    check_matching(inst, y);
    PropertyReport rep;
    rep.feasible = is_feasible(inst, y);

    auto envy = envy_report(inst, y);
    rep.fair = envy.fair();
    rep.locally_envy_free = envy.locally_envy_free();
    rep.ef_level = envy.ef_level;
    rep.erf_level = envy.erf_level;
    rep.local_ef_level = envy.local_ef_level;
    rep.local_erf_level = envy.local_erf_level;

    rep.nonwasteful = is_nonwasteful(inst, y);
    rep.stable = rep.feasible && rep.fair && rep.nonwasteful;
    rep.pareto_efficient = is_pareto_efficient(inst, y, nullptr, bounds);
    rep.mutually_best = is_mutually_best(inst, y);
    rep.locally_stable = rep.feasible && is_locally_stable(inst, y);
    rep.matched = (int)y.size();
    return rep;
}

namespace {
const char* yn(bool b) { return b ? "yes" : "no"; }
}

std::string PropertyReport::to_text() const {
    std::ostringstream out;
    out << "feasible: " << yn(feasible) << '\n'
        << "fair: " << yn(fair) << '\n'
        << "locally_envy_free: " << yn(locally_envy_free) << '\n'
        << "nonwasteful: " << yn(nonwasteful) << '\n'
        << "stable: " << yn(stable) << '\n'
        << "pareto_efficient: " << yn(pareto_efficient) << '\n'
        << "mutually_best: " << yn(mutually_best) << '\n'
        << "locally_stable: " << yn(locally_stable) << '\n'
        << "ef_level: " << ef_level << '\n'
        << "erf_level: " << erf_level << '\n'
        << "local_ef_level: " << local_ef_level << '\n'
        << "local_erf_level: " << local_erf_level << '\n'
        << "matched: " << matched << '\n';
    return out.str();
}

std::string PropertyReport::csv_header() {
    return "feasible,fair,locally_envy_free,nonwasteful,stable,pareto_efficient,"
           "mutually_best,locally_stable,ef_level,erf_level,local_ef_level,"
           "local_erf_level,matched";
}

std::string PropertyReport::to_csv() const {
    std::ostringstream out;
    out << feasible << ',' << fair << ',' << locally_envy_free << ',' << nonwasteful
        << ',' << stable << ',' << pareto_efficient << ',' << mutually_best << ','
        << locally_stable << ',' << ef_level << ',' << erf_level << ','
        << local_ef_level << ',' << local_erf_level << ',' << matched;
    return out.str();
}

} // namespace mmkit
