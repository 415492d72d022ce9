// gen.cpp -- seeded instance generator. Draw order is fixed (graph, quotas,
// student preferences, school preferences) so a seed pins the whole instance.

#include "mmkit/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmkit/rng.hpp"

namespace mmkit {

namespace {

// random tree where every vertex keeps degree < cap. With cap >= 2 an
// eligible parent always exists: v vertices of a forest carry 2(v-1) degree
// total, so they cannot all sit at 2 or more.
std::vector<std::pair<int, int>> capped_tree(int n, int cap, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; v++) {
        std::vector<int> eligible;
        for (int u = 0; u < v; u++)
            if (deg[u] < cap) eligible.push_back(u);
        int u = eligible[rng.below_int((int)eligible.size())];
        edges.push_back({u, v});
        deg[u]++;
        deg[v]++;
    }
    return edges;
}

// grow a k-tree bag by bag, then thin it: every new vertex forms a clique
// with k members of an existing bag; afterwards each edge survives with
// probability 3/4. The decomposition stays valid for the thinned graph.
std::vector<std::pair<int, int>> partial_ktree(int n, int k, Rng& rng,
                                               TreeDecomposition& td) {
    std::vector<std::pair<int, int>> edges;
    int base = std::min(n, k + 1);
    std::vector<int> bag0;
    for (int v = 0; v < base; v++) bag0.push_back(v);
    for (int a = 0; a < base; a++)
        for (int b = a + 1; b < base; b++) edges.push_back({a, b});
    td.bags.push_back(bag0);

    for (int v = base; v < n; v++) {
        int host = rng.below_int((int)td.bags.size());
        std::vector<int> members = td.bags[host];
        rng.shuffle(members);
        members.resize(k);
        std::sort(members.begin(), members.end());
        for (int u : members) edges.push_back({u, v});
        members.push_back(v);
        td.tree_edges.push_back({host, (int)td.bags.size()});
        td.bags.push_back(std::move(members));
    }

    std::vector<std::pair<int, int>> kept;
    for (auto& e : edges)
        if (rng.below(4) != 0) kept.push_back(e);
    return kept;
}

// ranking that grows outward from a random start vertex: every prefix stays
// connected, which is exactly single-peakedness on a tree.
std::vector<int> grow_on_tree(const AcquaintanceGraph& g, Rng& rng) {
    std::vector<int> order;
    std::vector<char> in(g.n, 0);
    int start = rng.below_int(g.n);
    order.push_back(start);
    in[start] = 1;
    while ((int)order.size() < g.n) {
        std::vector<int> frontier;
        for (int v = 0; v < g.n; v++) {
            if (in[v]) continue;
            for (int u : g.neighbors(v))
                if (in[u]) {
                    frontier.push_back(v);
                    break;
                }
        }
        int v = frontier[rng.below_int((int)frontier.size())];
        order.push_back(v);
        in[v] = 1;
    }
    return order;
}

// same idea one level up: absorb whole bags along the bag tree, fresh
// members of each bag in random order.
std::vector<int> grow_on_bags(const TreeDecomposition& td, int n, Rng& rng) {
    int b = (int)td.bags.size();
    std::vector<std::vector<int>> badj(b);
    for (auto& [x, y] : td.tree_edges) {
        badj[x].push_back(y);
        badj[y].push_back(x);
    }
    std::vector<char> used(b, 0), ranked(n, 0);
    std::vector<int> order;
    auto absorb = [&](int bag) {
        std::vector<int> fresh;
        for (int v : td.bags[bag])
            if (!ranked[v]) fresh.push_back(v);
        rng.shuffle(fresh);
        for (int v : fresh) {
            order.push_back(v);
            ranked[v] = 1;
        }
        used[bag] = 1;
    };
    absorb(rng.below_int(b));
    for (int step = 1; step < b; step++) {
        std::vector<int> frontier;
        for (int x = 0; x < b; x++) {
            if (used[x]) continue;
            for (int y : badj[x])
                if (used[y]) {
                    frontier.push_back(x);
                    break;
                }
        }
        absorb(frontier[rng.below_int((int)frontier.size())]);
    }
    return order;
}

} // namespace

GeneratedInstance generate(const GeneratorSpec& spec) {
    if (spec.students < 1 || spec.schools < 1)
        throw std::invalid_argument("generate: need at least one student and one school");
    if (spec.family == GraphFamily::PartialKTree && spec.k < 1)
        throw std::invalid_argument("generate: partial-k-tree needs k >= 1");
    if (spec.family == GraphFamily::TreePlusChords &&
        (spec.degree_cap < 2 || spec.chords < 0))
        throw std::invalid_argument("generate: tree-plus-chords needs degree_cap >= 2");
    if (spec.quota_mode == QuotaMode::RandomBounded && spec.max_quota < 1)
        throw std::invalid_argument("generate: max_quota must be at least 1");
    if (spec.pref_mode == PrefMode::SinglePeakedTree &&
        spec.family != GraphFamily::Path && spec.family != GraphFamily::RandomTree &&
        spec.family != GraphFamily::TreePlusChords)
        throw std::invalid_argument(
            "generate: tree-peaked preferences need a tree-backed graph family");
    if (spec.pref_mode == PrefMode::SinglePeakedDecomposition &&
        spec.family != GraphFamily::PartialKTree)
        throw std::invalid_argument(
            "generate: decomposition-peaked preferences need the partial-k-tree family");

    const int n = spec.students, m = spec.schools;
    Rng rng(spec.seed);
    GeneratedInstance out;
    MarketInstance& inst = out.inst;

    for (int v = 0; v < n; v++) inst.students.push_back("i" + std::to_string(v + 1));
    for (int s = 0; s < m; s++) inst.schools.push_back("s" + std::to_string(s + 1));

    inst.graph.n = n;
    switch (spec.family) {
        case GraphFamily::Path:
            for (int v = 0; v + 1 < n; v++) inst.graph.edges.push_back({v, v + 1});
            break;
        case GraphFamily::RandomTree:
            inst.graph.edges = capped_tree(n, n, rng);
            break;
        case GraphFamily::PartialKTree:
            inst.graph.edges = partial_ktree(n, spec.k, rng, out.decomposition);
            out.has_decomposition = true;
            break;
        case GraphFamily::TreePlusChords: {
            auto tree_edges = capped_tree(n, spec.degree_cap, rng);
            out.tree.n = n;
            out.tree.edges = tree_edges;
            out.tree.build_adjacency();
            out.has_tree = true;
            inst.graph.edges = tree_edges;
            inst.graph.build_adjacency();
            std::vector<int> deg(n, 0);
            for (auto& [a, b] : tree_edges) {
                deg[a]++;
                deg[b]++;
            }
            int added = 0;
            for (int tries = 4 * spec.chords; tries > 0 && added < spec.chords; tries--) {
                int a = rng.below_int(n), b = rng.below_int(n);
                if (a == b || inst.graph.has_edge(a, b)) continue;
                if (deg[a] >= spec.degree_cap || deg[b] >= spec.degree_cap) continue;
                inst.graph.edges.push_back({std::min(a, b), std::max(a, b)});
                inst.graph.build_adjacency();
                deg[a]++;
                deg[b]++;
                added++;
            }
            break;
        }
        case GraphFamily::Complete:
            for (int a = 0; a < n; a++)
                for (int b = a + 1; b < n; b++) inst.graph.edges.push_back({a, b});
            break;
    }
    inst.graph.build_adjacency();

    inst.quota.assign(m, 1);
    if (spec.quota_mode == QuotaMode::RandomBounded)
        for (int s = 0; s < m; s++) inst.quota[s] = 1 + rng.below_int(spec.max_quota);

    const bool peaked = spec.pref_mode != PrefMode::General;
    inst.student_pref.resize(n);
    for (int i = 0; i < n; i++) {
        std::vector<int> list;
        for (int s = 0; s < m; s++)
            if (peaked || rng.below(4) != 0) list.push_back(s);
        rng.shuffle(list);
        inst.student_pref[i] = std::move(list);
    }

    inst.school_pref.resize(m);
    for (int s = 0; s < m; s++) {
        std::vector<int> list;
        switch (spec.pref_mode) {
            case PrefMode::General:
                for (int i = 0; i < n; i++)
                    if (rng.below(4) != 0) list.push_back(i);
                rng.shuffle(list);
                break;
            case PrefMode::SinglePeakedTree:
                list = grow_on_tree(out.has_tree ? out.tree : inst.graph, rng);
                break;
            case PrefMode::SinglePeakedDecomposition:
                list = grow_on_bags(out.decomposition, n, rng);
                break;
        }
        inst.school_pref[s] = std::move(list);
    }

    ValidationReport report = validate_instance(inst);
    if (!report.ok())
        throw std::logic_error("generate: produced an invalid instance\n" +
                               report.to_string());
    return out;
}

GraphFamily parse_family(const std::string& name) {
    if (name == "path") return GraphFamily::Path;
    if (name == "random-tree") return GraphFamily::RandomTree;
    if (name == "partial-k-tree") return GraphFamily::PartialKTree;
    if (name == "tree-plus-chords") return GraphFamily::TreePlusChords;
    if (name == "complete") return GraphFamily::Complete;
    throw std::invalid_argument("unknown graph family: " + name);
}

PrefMode parse_pref_mode(const std::string& name) {
    if (name == "general") return PrefMode::General;
    if (name == "peaked-tree") return PrefMode::SinglePeakedTree;
    if (name == "peaked-decomposition") return PrefMode::SinglePeakedDecomposition;
    throw std::invalid_argument("unknown preference mode: " + name);
}

QuotaMode parse_quota_mode(const std::string& name) {
    if (name == "unit") return QuotaMode::Unit;
    if (name == "random") return QuotaMode::RandomBounded;
    throw std::invalid_argument("unknown quota mode: " + name);
}

} // namespace mmkit
