// gen.hpp -- seeded instance generator. Same spec and seed always produce
// the same instance, byte for byte, on every platform.
#pragma once

#include <cstdint>
#include <string>

#include "mmkit/graph.hpp"
#include "mmkit/market.hpp"

namespace mmkit {

enum class GraphFamily { Path, RandomTree, PartialKTree, TreePlusChords, Complete };

enum class PrefMode {
    General,                     // random subsets in random order, both sides
    SinglePeakedTree,            // schools: grown along the (underlying) tree
    SinglePeakedDecomposition,   // schools: grown along the bag tree
};

enum class QuotaMode { Unit, RandomBounded };

struct GeneratorSpec {
    int students = 4;
    int schools = 3;
    GraphFamily family = GraphFamily::RandomTree;
    PrefMode pref_mode = PrefMode::General;
    QuotaMode quota_mode = QuotaMode::Unit;
    int k = 2;           // PartialKTree: backbone clique size
    int degree_cap = 3;  // TreePlusChords: max degree, chords included
    int chords = 2;      // TreePlusChords: extra edges to attempt
    int max_quota = 2;   // RandomBounded: quotas drawn from [1, max_quota]
    std::uint64_t seed = 0;
};

// The instance plus whichever witness structure the family carries:
// PartialKTree ships the tree decomposition it grew, TreePlusChords ships
// the underlying tree.
struct GeneratedInstance {
    MarketInstance inst;
    TreeDecomposition decomposition;
    AcquaintanceGraph tree;
    bool has_decomposition = false;
    bool has_tree = false;
};

// Throws std::invalid_argument for contradictory specs (a peaked pref mode
// with a family that has no tree or decomposition to be peaked on, sizes
// below one, and so on).
GeneratedInstance generate(const GeneratorSpec& spec);

// parse helpers for the CLI ("path", "random-tree", ...)
GraphFamily parse_family(const std::string& name);
PrefMode parse_pref_mode(const std::string& name);
QuotaMode parse_quota_mode(const std::string& name);

} // namespace mmkit
