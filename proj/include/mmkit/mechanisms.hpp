// mechanisms.hpp -- matching mechanisms: deferred acceptance, serial
// dictatorship, and the best-to-locally-top family that trades global
// fairness for envy bounds along the acquaintance graph.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmkit/graph.hpp"
#include "mmkit/market.hpp"

namespace mmkit {

// Processing order for serial dictatorship, a permutation of the students.
struct MasterList {
    std::vector<int> order;
};

// How the B-LT mechanisms pick the next student to look at. The guarantees
// hold for any choice; the policy only pins the run down for reproducibility.
enum class SelectionPolicy { DeclaredOrder, ExplicitOrder, SeededRandom };

struct SelectionConfig {
    SelectionPolicy policy = SelectionPolicy::DeclaredOrder;
    std::vector<int> order;  // ExplicitOrder: scan order over the students
    std::uint64_t seed = 0;  // SeededRandom
};

struct TraceEvent {
    enum class Kind { MutualBest, Direct, Exhausted, AttackPair };
    Kind kind = Kind::Direct;
    int student = kNone;
    int school = kNone;          // kNone when the student ran out of seats
    int partner = kNone;         // AttackPair: the other student
    int partner_school = kNone;  // AttackPair: the partner's school
};

// What a mechanism did, in order. Replaying assignment_order() through
// serial dictatorship reproduces a B-LT run's output exactly; the B-LT
// implementations verify that on every run.
struct MechanismTrace {
    std::vector<TraceEvent> events;
    std::vector<std::string> notes;  // relaxations taken in diagnostics mode
    std::vector<int> assignment_order() const;
    std::string to_text(const MarketInstance& inst) const;
};

// Raised when a B-LT run cannot continue: no mutual attacking pair exists,
// or a certified attacker-count precondition fails. `attacks` holds the
// attacker->target edges observed among unassigned students at that point.
struct MechanismError : std::runtime_error {
    std::vector<std::pair<int, int>> attacks;
    explicit MechanismError(const std::string& msg,
                            std::vector<std::pair<int, int>> attacks_ = {})
        : std::runtime_error(msg), attacks(std::move(attacks_)) {}
};

// Round-based student-proposing deferred acceptance; schools keep the top
// quota-many proposers they have a contract with.
Matching deferred_acceptance(const MarketInstance& inst);

// Each student, in list order, takes the best remaining seat on its list.
Matching serial_dictatorship(const MarketInstance& inst, const MasterList& list,
                             MechanismTrace* trace = nullptr);

// Mutual-best pairs first; then anyone whose best remaining school ranks
// them above all unassigned neighbors; when that stalls, a pair of students
// attacking each other is settled and the sweep restarts. Attack counts are
// not policed here, but a stall (no mutual attacking pair) raises
// MechanismError.
Matching b_lt2(const MarketInstance& inst, const SelectionConfig& cfg = {},
               MechanismTrace* trace = nullptr);

// Generalization: a student may be admitted directly while up to k-1
// unassigned neighbors outrank it at its best remaining school. In certified
// mode every student left after the direct sweep must be outranked by exactly
// k unassigned neighbors, else MechanismError; with certified=false the
// mismatch is recorded as a note and the run continues.
Matching b_lt_k_plus_1(const MarketInstance& inst, int k,
                       const SelectionConfig& cfg = {},
                       MechanismTrace* trace = nullptr, bool certified = true);

// Serial dictatorship along a degeneracy ordering of the acquaintance graph
// (reverse=true processes it backwards, trading which side of the envy
// relation is bounded).
Matching sd_degeneracy(const MarketInstance& inst, bool reverse = false,
                       MechanismTrace* trace = nullptr);

// Run b_lt2 with the acquaintance graph replaced by a spanning tree of it.
Matching b_lt2_on_underlying_tree(const MarketInstance& inst,
                                  const AcquaintanceGraph& tree,
                                  const SelectionConfig& cfg = {},
                                  MechanismTrace* trace = nullptr);

// A mechanism choice plus everything it needs, so callers (the CLI, the
// strategyproofness checker) can treat mechanisms as data.
struct MechanismConfig {
    enum class Kind {
        DeferredAcceptance,
        SerialDictatorship,
        BLt2,
        BLtKPlus1,
        SdDegeneracy,
        BLt2OnTree,
    };
    Kind kind = Kind::BLt2;
    MasterList master;          // SerialDictatorship
    SelectionConfig selection;  // B-LT family
    int k = 1;                  // BLtKPlus1
    bool certified = true;      // BLtKPlus1
    bool reverse = false;       // SdDegeneracy
    AcquaintanceGraph tree;     // BLt2OnTree
};

Matching run_mechanism(const MarketInstance& inst, const MechanismConfig& cfg,
                       MechanismTrace* trace = nullptr);

} // namespace mmkit
