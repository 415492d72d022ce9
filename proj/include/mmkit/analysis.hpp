// analysis.hpp -- structural report on an instance: what the acquaintance
// graph is, how school preferences sit on it, and which pairs are
// mutually best. Complements properties.hpp, which reports on a matching.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmkit/graph.hpp"
#include "mmkit/market.hpp"

namespace mmkit {

// Per-school entries use 1 / 0 / -1: holds, fails, not applicable (the
// school's list is not a complete ranking, or the needed structure is
// missing -- a non-tree graph, no decomposition supplied).
struct InstanceReport {
    bool graph_is_tree = false;
    DegeneracyOrdering degeneracy;
    bool has_decomposition = false;
    int decomposition_width = -1;
    std::vector<int> peaked_on_tree;
    std::vector<int> peaked_on_decomposition;
    std::vector<int> rank_bound;   // neighbor_rank_bound per school, -1 when n/a
    std::vector<std::pair<int, int>> mutually_best;

    std::string to_text(const MarketInstance& inst) const;
    static std::string csv_header();
    std::string to_csv(const MarketInstance& inst) const;   // one row per school
};

// td may be null; when given it is validated first (DecompositionError
// propagates) and the per-school decomposition checks run against it.
InstanceReport analyze_instance(const MarketInstance& inst,
                                const TreeDecomposition* td = nullptr);

} // namespace mmkit
