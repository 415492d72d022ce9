#include "mmkit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace mmkit {

namespace {

int count_reachable(const AcquaintanceGraph& g, int start) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack = {start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        count++;
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return count;
}

}  // namespace

bool is_tree(const AcquaintanceGraph& g) {
    if (g.n == 0) return false;
    if ((int)g.edges.size() != g.n - 1) return false;
    return count_reachable(g, 0) == g.n;
}

DegeneracyOrdering degeneracy_ordering(const AcquaintanceGraph& g) {
    DegeneracyOrdering result;
    std::vector<int> degree(g.n);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; v++) degree[v] = (int)g.neighbors(v).size();

    for (int round = 0; round < g.n; round++) {
        int pick = -1;
        for (int v = 0; v < g.n; v++) {
            if (removed[v]) continue;
            if (pick == -1 || degree[v] < degree[pick]) pick = v;
        }
        result.k = std::max(result.k, degree[pick]);
        result.order.push_back(pick);
        removed[pick] = 1;
        for (int w : g.neighbors(pick))
            if (!removed[w]) degree[w]--;
    }
    return result;
}

int validate_tree_decomposition(const AcquaintanceGraph& g, const TreeDecomposition& td) {
    const int bags = (int)td.bags.size();
    if (bags == 0) throw DecompositionError("decomposition has no bags");

    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= g.n)
                throw DecompositionError("bag refers to an undeclared student");

    // bag tree: valid indices, |bags|-1 edges, connected
    if ((int)td.tree_edges.size() != bags - 1)
        throw DecompositionError("bag tree must have exactly one edge less than bags");
    std::vector<std::vector<int>> bag_adj(bags);
    for (auto& [a, b] : td.tree_edges) {
        if (a < 0 || a >= bags || b < 0 || b >= bags || a == b)
            throw DecompositionError("bag tree edge refers to an invalid bag");
        bag_adj[a].push_back(b);
        bag_adj[b].push_back(a);
    }
    {
        std::vector<char> seen(bags, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            count++;
            for (int w : bag_adj[v])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        if (count != bags) throw DecompositionError("bag tree is disconnected");
    }

    // property 1: bags cover every student
    std::vector<std::vector<int>> containing(g.n);
    for (int j = 0; j < bags; j++)
        for (int v : td.bags[j]) containing[v].push_back(j);
    for (int v = 0; v < g.n; v++)
        if (containing[v].empty())
            throw DecompositionError("student " + std::to_string(v) +
                                     " appears in no bag");

    // property 2: bags holding a fixed student form a connected subtree
    for (int v = 0; v < g.n; v++) {
        std::vector<char> in_set(bags, 0);
        for (int j : containing[v]) in_set[j] = 1;
        std::vector<char> seen(bags, 0);
        std::vector<int> stack = {containing[v][0]};
        seen[containing[v][0]] = 1;
        int count = 0;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            count++;
            for (int w : bag_adj[b])
                if (in_set[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        if (count != (int)containing[v].size())
            throw DecompositionError("bags containing student " + std::to_string(v) +
                                     " are not connected in the bag tree");
    }

    // property 3: every graph edge lies inside some bag
    for (auto& [a, b] : g.edges) {
        bool covered = false;
        for (int j : containing[a]) {
            const auto& bag = td.bags[j];
            if (std::find(bag.begin(), bag.end(), b) != bag.end()) {
                covered = true;
                break;
            }
        }
        if (!covered)
            throw DecompositionError("edge " + std::to_string(a) + "-" +
                                     std::to_string(b) + " is inside no bag");
    }

    int widest = 0;
    for (const auto& bag : td.bags) widest = std::max(widest, (int)bag.size());
    return widest - 1;
}

bool is_single_peaked_on_tree(const std::vector<int>& pref, const AcquaintanceGraph& g) {
    if (!is_tree(g)) throw std::invalid_argument("single-peaked check: graph is not a tree");
    if ((int)pref.size() != g.n)
        throw std::invalid_argument("single-peaked check: preference must rank every student");
    std::vector<char> seen(g.n, 0);
    for (int v : pref) {
        if (v < 0 || v >= g.n || seen[v])
            throw std::invalid_argument("single-peaked check: preference is not a permutation");
        seen[v] = 1;
    }

    // A prefix stays connected exactly when each added vertex touches the
    // prefix before it.
    std::vector<char> in_prefix(g.n, 0);
    in_prefix[pref[0]] = 1;
    for (int t = 1; t < g.n; t++) {
        bool touches = false;
        for (int w : g.neighbors(pref[t])) {
            if (in_prefix[w]) {
                touches = true;
                break;
            }
        }
        if (!touches) return false;
        in_prefix[pref[t]] = 1;
    }
    return true;
}

bool is_single_peaked_on_decomposition(const std::vector<int>& pref,
                                       const TreeDecomposition& td) {
    const int bags = (int)td.bags.size();
    const int n = (int)pref.size();
    if (bags > 22)
        throw std::invalid_argument("decomposition check: too many bags for exact search");

    std::vector<int> pos(n, -1);
    for (int r = 0; r < n; r++) {
        int v = pref[r];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("decomposition check: preference is not a permutation");
        pos[v] = r;
    }
    {
        std::vector<char> covered(n, 0);
        if ((int)td.tree_edges.size() != bags - 1)
            throw std::invalid_argument("decomposition check: bag tree is not a tree");
        for (const auto& bag : td.bags)
            for (int v : bag) {
                if (v < 0 || v >= n)
                    throw std::invalid_argument(
                        "decomposition check: bag student outside the preference domain");
                covered[v] = 1;
            }
        for (int v = 0; v < n; v++)
            if (!covered[v])
                throw std::invalid_argument("decomposition check: student missing from bags");
    }

    std::vector<std::vector<int>> bag_adj(bags);
    for (auto& [a, b] : td.tree_edges) {
        if (a < 0 || a >= bags || b < 0 || b >= bags)
            throw std::invalid_argument("decomposition check: invalid bag tree edge");
        bag_adj[a].push_back(b);
        bag_adj[b].push_back(a);
    }

    // State: set of chosen bags; the students ranked so far are exactly the
    // union of the chosen bags and must always form a prefix of pref. A new
    // bag is admissible when it is adjacent to the chosen set and its fresh
    // students equal the next contiguous pref segment as a set.
    std::vector<char> dead(std::size_t(1) << bags, 0);   // states proven fruitless
    std::vector<char> ranked(n, 0);

    auto segment_matches = [&](const std::vector<int>& bag, int ranked_count) {
        int fresh = 0;
        for (int v : bag)
            if (!ranked[v]) fresh++;
        if (fresh == 0) return true;
        for (int v : bag)
            if (!ranked[v] && (pos[v] < ranked_count || pos[v] >= ranked_count + fresh))
                return false;
        return true;
    };

    auto search = [&](auto&& self, std::uint32_t chosen, int ranked_count) -> bool {
        if (ranked_count == n) return true;
        if (dead[chosen]) return false;
        for (int b = 0; b < bags; b++) {
            if (chosen & (std::uint32_t(1) << b)) continue;
            bool adjacent = false;
            for (int w : bag_adj[b])
                if (chosen & (std::uint32_t(1) << w)) { adjacent = true; break; }
            if (!adjacent) continue;
            if (!segment_matches(td.bags[b], ranked_count)) continue;
            std::vector<int> fresh;
            for (int v : td.bags[b])
                if (!ranked[v]) { ranked[v] = 1; fresh.push_back(v); }
            if (self(self, chosen | (std::uint32_t(1) << b),
                     ranked_count + (int)fresh.size()))
                return true;
            for (int v : fresh) ranked[v] = 0;
        }
        dead[chosen] = 1;
        return false;
    };

    for (int b = 0; b < bags; b++) {
        std::fill(ranked.begin(), ranked.end(), 0);
        if (!segment_matches(td.bags[b], 0)) continue;
        for (int v : td.bags[b]) ranked[v] = 1;
        if (search(search, std::uint32_t(1) << b, (int)td.bags[b].size())) return true;
    }
    return false;
}

int neighbor_rank_bound(const std::vector<int>& pref, const AcquaintanceGraph& g) {
    if ((int)pref.size() != g.n)
        throw std::invalid_argument("neighbor rank bound: preference must rank every student");
    std::vector<int> pos(g.n, -1);
    for (int r = 0; r < g.n; r++) {
        int v = pref[r];
        if (v < 0 || v >= g.n || pos[v] != -1)
            throw std::invalid_argument("neighbor rank bound: preference is not a permutation");
        pos[v] = r;
    }
    int bound = 0;
    for (int v = 0; v < g.n; v++) {
        int rank = 1;
        for (int w : g.neighbors(v))
            if (pos[w] < pos[v]) rank++;
        bound = std::max(bound, rank);
    }
    return bound;
}

}  // namespace mmkit
