// analysis.cpp -- instance-level structural report.

#include "mmkit/analysis.hpp"

#include <sstream>

#include "mmkit/properties.hpp"

namespace mmkit {

namespace {

const char* tri(int v) { return v < 0 ? "n/a" : (v ? "yes" : "no"); }

} // namespace

InstanceReport analyze_instance(const MarketInstance& inst,
                                const TreeDecomposition* td) {
    InstanceReport rep;
    rep.graph_is_tree = is_tree(inst.graph);
    rep.degeneracy = degeneracy_ordering(inst.graph);
    if (td) {
        rep.decomposition_width = validate_tree_decomposition(inst.graph, *td);
        rep.has_decomposition = true;
    }
    rep.mutually_best = mb_pairs(inst);

    const int n = inst.n(), m = inst.m();
    rep.peaked_on_tree.assign(m, -1);
    rep.peaked_on_decomposition.assign(m, -1);
    rep.rank_bound.assign(m, -1);
    for (int s = 0; s < m; s++) {
        // the peak and rank-bound notions only make sense for a complete
        // ranking of the students (the list is duplicate-free already)
        if ((int)inst.school_pref[s].size() != n) continue;
        if (rep.graph_is_tree)
            rep.peaked_on_tree[s] = is_single_peaked_on_tree(inst.school_pref[s],
                                                             inst.graph);
        if (td)
            rep.peaked_on_decomposition[s] =
                is_single_peaked_on_decomposition(inst.school_pref[s], *td);
        rep.rank_bound[s] = neighbor_rank_bound(inst.school_pref[s], inst.graph);
    }
    return rep;
}

std::string InstanceReport::to_text(const MarketInstance& inst) const {
    std::ostringstream out;
    out << "graph_is_tree: " << (graph_is_tree ? "yes" : "no") << '\n';
    out << "degeneracy: " << degeneracy.k << '\n';
    out << "degeneracy_order:";
    for (int v : degeneracy.order) out << ' ' << inst.students[v];
    out << '\n';
    if (has_decomposition)
        out << "decomposition_width: " << decomposition_width << '\n';
    for (int s = 0; s < inst.m(); s++) {
        out << "school " << inst.schools[s] << ": peaked_on_tree="
            << tri(peaked_on_tree[s]);
        if (has_decomposition)
            out << " peaked_on_decomposition=" << tri(peaked_on_decomposition[s]);
        out << " rank_bound=";
        if (rank_bound[s] < 0)
            out << "n/a";
        else
            out << rank_bound[s];
        out << '\n';
    }
    out << "mutually_best:";
    if (mutually_best.empty()) out << " none";
    for (auto& [i, s] : mutually_best)
        out << ' ' << inst.students[i] << '=' << inst.schools[s];
    out << '\n';
    return out.str();
}

std::string InstanceReport::csv_header() {
    return "school,peaked_on_tree,peaked_on_decomposition,rank_bound,"
           "graph_is_tree,degeneracy,decomposition_width,mutually_best";
}

std::string InstanceReport::to_csv(const MarketInstance& inst) const {
    std::ostringstream pairs;
    for (std::size_t p = 0; p < mutually_best.size(); p++) {
        if (p) pairs << ';';
        pairs << inst.students[mutually_best[p].first] << '='
              << inst.schools[mutually_best[p].second];
    }
    std::ostringstream out;
    for (int s = 0; s < inst.m(); s++) {
        out << inst.schools[s] << ',' << peaked_on_tree[s] << ','
            << peaked_on_decomposition[s] << ',' << rank_bound[s] << ','
            << graph_is_tree << ',' << degeneracy.k << ',' << decomposition_width
            << ',' << pairs.str() << '\n';
    }
    return out.str();
}

} // namespace mmkit
