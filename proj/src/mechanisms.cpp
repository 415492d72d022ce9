// mechanisms.cpp -- mechanism implementations.

#include "mmkit/mechanisms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mmkit/properties.hpp"
#include "mmkit/rng.hpp"

namespace mmkit {

std::vector<int> MechanismTrace::assignment_order() const {
    std::vector<int> out;
    for (const auto& e : events) {
        out.push_back(e.student);
        if (e.kind == TraceEvent::Kind::AttackPair) out.push_back(e.partner);
    }
    return out;
}

std::string MechanismTrace::to_text(const MarketInstance& inst) const {
    std::ostringstream out;
    auto school = [&](int s) { return s == kNone ? std::string("-") : inst.schools[s]; };
    for (const auto& e : events) {
        switch (e.kind) {
            case TraceEvent::Kind::MutualBest:
                out << "mutual-best: " << inst.students[e.student] << " -> "
                    << school(e.school) << '\n';
                break;
            case TraceEvent::Kind::Direct:
                out << "direct: " << inst.students[e.student] << " -> "
                    << school(e.school) << '\n';
                break;
            case TraceEvent::Kind::Exhausted:
                out << "exhausted: " << inst.students[e.student] << '\n';
                break;
            case TraceEvent::Kind::AttackPair:
                out << "attack-pair: " << inst.students[e.student] << " -> "
                    << school(e.school) << ", " << inst.students[e.partner] << " -> "
                    << school(e.partner_school) << '\n';
                break;
        }
    }
    for (const auto& n : notes) out << "note: " << n << '\n';
    return out.str();
}

namespace {

// first school on i's list with a free seat, kNone when there is none
int best_available(const MarketInstance& inst, const std::vector<int>& fill, int i) {
    for (int s : inst.student_pref[i])
        if (fill[s] < inst.quota[s]) return s;
    return kNone;
}

std::vector<int> scan_order(const MarketInstance& inst, const SelectionConfig& cfg) {
    std::vector<int> order(inst.n());
    std::iota(order.begin(), order.end(), 0);
    if (cfg.policy == SelectionPolicy::ExplicitOrder) {
        if ((int)cfg.order.size() != inst.n())
            throw std::invalid_argument("selection order must cover every student");
        std::vector<char> seen(inst.n(), 0);
        for (int i : cfg.order) {
            if (i < 0 || i >= inst.n() || seen[i])
                throw std::invalid_argument("selection order is not a permutation");
            seen[i] = 1;
        }
        order = cfg.order;
    } else if (cfg.policy == SelectionPolicy::SeededRandom) {
        Rng rng(cfg.seed);
        rng.shuffle(order);
    }
    return order;
}

enum class AttackCheck { Exact, Note, Ignore };

Matching blt_run(const MarketInstance& inst, int k, const SelectionConfig& cfg,
                 MechanismTrace* trace, AttackCheck check) {
    if (k < 1) throw std::invalid_argument("b_lt: k must be at least 1");
    const int n = inst.n();
    auto order = scan_order(inst, cfg);

    Matching y;
    y.to_school.assign(n, kNone);
    std::vector<int> fill(inst.m(), 0);
    std::vector<char> settled(n, 0);
    int open = n;
    MechanismTrace local;
    MechanismTrace& tr = trace ? *trace : local;
    tr.events.clear();
    tr.notes.clear();

    auto settle = [&](int i, int s) {
        y.to_school[i] = s;
        if (s != kNone) fill[s]++;
        settled[i] = 1;
        open--;
    };

    for (auto& [i, s] : mb_pairs(inst)) {
        settle(i, s);
        tr.events.push_back({TraceEvent::Kind::MutualBest, i, s, kNone, kNone});
    }

    while (open > 0) {
        // direct sweep: admit anyone within the top k of themselves plus
        // their unassigned neighbors, as seen by their best remaining school
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i : order) {
                if (settled[i]) continue;
                int s = best_available(inst, fill, i);
                if (s == kNone) {
                    settle(i, kNone);
                    tr.events.push_back({TraceEvent::Kind::Exhausted, i, kNone, kNone, kNone});
                    progress = true;
                    continue;
                }
                int above = 0;
                for (int j : inst.graph.neighbors(i))
                    if (!settled[j] && inst.school_prefers(s, j, i)) above++;
                if (above <= k - 1) {
                    settle(i, s);
                    tr.events.push_back({TraceEvent::Kind::Direct, i, s, kNone, kNone});
                    progress = true;
                }
            }
        }
        if (open == 0) break;

        // attack step: j attacks i when j is an unassigned neighbor of i that
        // i's best remaining school ranks above i
        std::vector<int> best(n, kNone);
        for (int i : order)
            if (!settled[i]) best[i] = best_available(inst, fill, i);

        std::vector<std::pair<int, int>> attacks;
        std::vector<std::vector<char>> attacked_by(n, std::vector<char>(n, 0));
        for (int i : order) {
            if (settled[i]) continue;
            int count = 0;
            for (int j : inst.graph.neighbors(i)) {
                if (settled[j] || !inst.school_prefers(best[i], j, i)) continue;
                attacks.emplace_back(j, i);
                attacked_by[i][j] = 1;
                count++;
            }
            if (count != k && check != AttackCheck::Ignore) {
                std::ostringstream msg;
                msg << "student " << inst.students[i] << " is attacked by " << count
                    << " unassigned neighbors, expected " << k;
                if (check == AttackCheck::Exact) throw MechanismError(msg.str(), attacks);
                tr.notes.push_back(msg.str());
            }
        }

        int a = -1, b = -1;
        for (int i : order) {
            if (a >= 0) break;
            if (settled[i]) continue;
            for (int j : order) {
                if (j == i || settled[j]) continue;
                if (attacked_by[i][j] && attacked_by[j][i]) {
                    a = i;
                    b = j;
                    break;
                }
            }
        }
        if (a < 0)
            throw MechanismError("no pair of students attacking each other; cannot proceed",
                                 attacks);
        if (best[a] == best[b])
            throw MechanismError("attacking pair shares its best school; preferences "
                                 "cannot be strict",
                                 attacks);
        settle(a, best[a]);
        settle(b, best[b]);
        tr.events.push_back({TraceEvent::Kind::AttackPair, a, best[a], b, best[b]});
    }

    // a B-LT run is a serial dictatorship in disguise: feeding the settle
    // order back through one must reproduce the matching exactly
    Matching replay = serial_dictatorship(inst, MasterList{tr.assignment_order()});
    if (!(replay == y))
        throw std::logic_error("b_lt: trace replay diverged from the run");
    return y;
}

} // namespace

Matching deferred_acceptance(const MarketInstance& inst) {
    const int n = inst.n(), m = inst.m();
    std::vector<int> next(n, 0), hold(n, kNone);
    std::vector<std::vector<int>> holds(m);

    while (true) {
        std::vector<std::vector<int>> proposals(m);
        bool any = false;
        for (int i = 0; i < n; i++) {
            if (hold[i] != kNone || next[i] >= (int)inst.student_pref[i].size()) continue;
            proposals[inst.student_pref[i][next[i]++]].push_back(i);
            any = true;
        }
        if (!any) break;
        for (int s = 0; s < m; s++) {
            if (proposals[s].empty()) continue;
            auto& pool = holds[s];
            pool.insert(pool.end(), proposals[s].begin(), proposals[s].end());
            std::sort(pool.begin(), pool.end(),
                      [&](int a, int b) { return inst.irank[s][a] < inst.irank[s][b]; });
            while ((int)pool.size() > inst.quota[s]) {
                hold[pool.back()] = kNone;
                pool.pop_back();
            }
            for (int i : pool) hold[i] = s;
        }
    }

    Matching y;
    y.to_school = hold;
    return y;
}

Matching serial_dictatorship(const MarketInstance& inst, const MasterList& list,
                             MechanismTrace* trace) {
    const int n = inst.n();
    if ((int)list.order.size() != n)
        throw std::invalid_argument("master list must cover every student");
    std::vector<char> seen(n, 0);
    for (int i : list.order) {
        if (i < 0 || i >= n || seen[i])
            throw std::invalid_argument("master list is not a permutation");
        seen[i] = 1;
    }

    Matching y;
    y.to_school.assign(n, kNone);
    std::vector<int> fill(inst.m(), 0);
    for (int i : list.order) {
        int s = best_available(inst, fill, i);
        if (s != kNone) {
            y.to_school[i] = s;
            fill[s]++;
        }
        if (trace)
            trace->events.push_back({s == kNone ? TraceEvent::Kind::Exhausted
                                                : TraceEvent::Kind::Direct,
                                     i, s, kNone, kNone});
    }
    return y;
}

Matching b_lt2(const MarketInstance& inst, const SelectionConfig& cfg,
               MechanismTrace* trace) {
    return blt_run(inst, 1, cfg, trace, AttackCheck::Ignore);
}

Matching b_lt_k_plus_1(const MarketInstance& inst, int k, const SelectionConfig& cfg,
                       MechanismTrace* trace, bool certified) {
    return blt_run(inst, k, cfg, trace, certified ? AttackCheck::Exact : AttackCheck::Note);
}

Matching sd_degeneracy(const MarketInstance& inst, bool reverse, MechanismTrace* trace) {
    auto deg = degeneracy_ordering(inst.graph);
    MasterList list{deg.order};
    if (reverse) std::reverse(list.order.begin(), list.order.end());
    return serial_dictatorship(inst, list, trace);
}

Matching b_lt2_on_underlying_tree(const MarketInstance& inst,
                                  const AcquaintanceGraph& tree,
                                  const SelectionConfig& cfg, MechanismTrace* trace) {
    if (tree.n != inst.n())
        throw std::invalid_argument("underlying tree must span the student set");
    AcquaintanceGraph t = tree;
    t.build_adjacency();
    if (!is_tree(t))
        throw std::invalid_argument("underlying graph is not a tree");
    for (auto& [a, b] : t.edges)
        if (!inst.graph.has_edge(a, b))
            throw std::invalid_argument("tree edge " + inst.students[a] + "-" +
                                        inst.students[b] +
                                        " is not in the acquaintance graph");
    MarketInstance sub = inst;
    sub.graph = t;
    return b_lt2(sub, cfg, trace);
}

Matching run_mechanism(const MarketInstance& inst, const MechanismConfig& cfg,
                       MechanismTrace* trace) {
    switch (cfg.kind) {
        case MechanismConfig::Kind::DeferredAcceptance:
            return deferred_acceptance(inst);
        case MechanismConfig::Kind::SerialDictatorship:
            return serial_dictatorship(inst, cfg.master, trace);
        case MechanismConfig::Kind::BLt2:
            return b_lt2(inst, cfg.selection, trace);
        case MechanismConfig::Kind::BLtKPlus1:
            return b_lt_k_plus_1(inst, cfg.k, cfg.selection, trace, cfg.certified);
        case MechanismConfig::Kind::SdDegeneracy:
            return sd_degeneracy(inst, cfg.reverse, trace);
        case MechanismConfig::Kind::BLt2OnTree:
            return b_lt2_on_underlying_tree(inst, cfg.tree, cfg.selection, trace);
    }
    throw std::invalid_argument("unknown mechanism");
}

} // namespace mmkit
