// graph.hpp -- graph analytics behind the mechanisms: tree detection,
// degeneracy orderings, tree-decomposition validation, single-peakedness.

#ifndef MMKIT_GRAPH_HPP
#define MMKIT_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmkit/market.hpp"

namespace mmkit {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;            // student indices per bag
    std::vector<std::pair<int, int>> tree_edges;   // bag-index pairs
};

struct DegeneracyOrdering {
    std::vector<int> order;   // peel order; each vertex has <= k neighbors after it
    int k = 0;
};

// Connected and |E| = |V| - 1. The empty graph is not a tree.
bool is_tree(const AcquaintanceGraph& g);

// Iterative minimum-degree removal, ties broken by declared order. The
// returned k is the graph's degeneracy and the order witnesses it.
DegeneracyOrdering degeneracy_ordering(const AcquaintanceGraph& g);

struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks the three decomposition properties plus tree-ness of the bag tree;
// returns the width (largest bag minus one). Throws DecompositionError naming
// the first violated property and a witness.
int validate_tree_decomposition(const AcquaintanceGraph& g, const TreeDecomposition& td);

// True iff every prefix of pref induces a connected subgraph of g.
// Preconditions: g is a tree, pref is a permutation of all students; throws
// std::invalid_argument otherwise.
bool is_single_peaked_on_tree(const std::vector<int>& pref, const AcquaintanceGraph& g);

// True iff pref can be produced by the bag-by-bag ranking process: pick a
// start bag, then repeatedly pick a bag adjacent to the chosen set and append
// its not-yet-ranked students. Recognition is a memoized backtracking search
// over chosen-bag sets. td must be internally consistent (bag tree really a
// tree, bags covering exactly the students of pref); throws otherwise.
bool is_single_peaked_on_decomposition(const std::vector<int>& pref,
                                       const TreeDecomposition& td);

// Max over students i of the (1-based) rank of i within {i} union N(i) under
// pref. pref must be a permutation of all students.
int neighbor_rank_bound(const std::vector<int>& pref, const AcquaintanceGraph& g);

}  // namespace mmkit

#endif
