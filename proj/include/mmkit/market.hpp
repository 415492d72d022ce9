// market.hpp -- data model for many-to-one matching markets with an
// acquaintance graph over students: instances, matchings, validation.

#ifndef MMKIT_MARKET_HPP
#define MMKIT_MARKET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mmkit {

// Students and schools are referred to by their index in the declared order.
// kNone stands for the outside option (matched to nobody / unmatched).
constexpr int kNone = -1;
constexpr int kUnranked = 1 << 29;

struct AcquaintanceGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // canonical: first < second, sorted
    std::vector<std::vector<int>> adj;        // sorted neighbor lists

    void build_adjacency();
    bool has_edge(int a, int b) const;
    const std::vector<int>& neighbors(int v) const { return adj[v]; }
};

struct Issue {
    enum Severity { Warning, Error };
    Severity severity;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<Issue> issues;
    bool ok() const;
    void error(const std::string& where, const std::string& message);
    void warn(const std::string& where, const std::string& message);
    std::string to_string() const;
};

struct MarketInstance {
    std::vector<std::string> students;             // declared order = tie-break order
    std::vector<std::string> schools;
    std::vector<std::vector<int>> student_pref;    // acceptable schools, best first
    std::vector<std::vector<int>> school_pref;     // acceptable students, best first
    std::vector<int> quota;
    AcquaintanceGraph graph;

    // rank tables, built by finalize(); kUnranked where no contract exists
    std::vector<std::vector<int>> srank;           // srank[i][s]: rank of s for student i
    std::vector<std::vector<int>> irank;           // irank[s][i]: rank of i for school s

    int n() const { return (int)students.size(); }
    int m() const { return (int)schools.size(); }

    // Applies the mutual-listing closure (prunes one-sided listings, reported as
    // warnings) and rebuilds the rank tables. Idempotent.
    void finalize(ValidationReport* report = nullptr);

    bool has_contract(int i, int s) const {
        return srank[i][s] != kUnranked;
    }
    // Strict comparison with the incomparable-below rule: an unranked partner is
    // never preferred over anything, and nothing unranked is ever preferred.
    bool student_prefers(int i, int s, int s_other) const {
        if (s == kNone) return false;
        if (srank[i][s] == kUnranked) return false;
        if (s_other == kNone) return true;   // acceptable beats the outside option
        return srank[i][s] < srank[i][s_other];
    }
    bool school_prefers(int s, int i, int i_other) const {
        if (i == kNone) return false;
        if (irank[s][i] == kUnranked) return false;
        if (i_other == kNone) return true;
        return irank[s][i] < irank[s][i_other];
    }

    int student_index(const std::string& token) const;   // -1 when unknown
    int school_index(const std::string& token) const;
};

// Structural validation per the model invariants: referential integrity,
// duplicate-free preference lists, quotas everywhere, sane graph. Normalizes
// the instance (contract closure + rank tables) when no error was found.
ValidationReport validate_instance(MarketInstance& inst);

struct Matching {
    std::vector<int> to_school;   // per student: school index or kNone

    int size() const;                       // number of matched students
    std::vector<int> fill(const MarketInstance& inst) const;   // per-school counts
    std::vector<std::vector<int>> school_rosters(const MarketInstance& inst) const;
    bool operator==(const Matching&) const = default;
};

// Lexicographic order over assignment vectors; the canonical matching order
// used for deterministic enumeration output.
bool matching_less(const Matching& a, const Matching& b);

// Throws std::invalid_argument when y refers to unknown indices or assigns a
// pair outside the contract set.
void check_matching(const MarketInstance& inst, const Matching& y);

// True iff every school's assigned count is within its quota.
// check_matching() runs first; malformed input throws.
bool is_feasible(const MarketInstance& inst, const Matching& y);

// Shared desk-scale guard for the exhaustive engines.
struct DeskBounds {
    int max_students = 8;
    int max_schools = 8;
    int max_total_quota = 10;
    bool force = false;        // run anyway; callers surface a warning
};

// Throws std::length_error when inst exceeds bounds and force is off.
void enforce_bounds(const MarketInstance& inst, const DeskBounds& bounds,
                    const char* where = "exhaustive search");

}  // namespace mmkit

#endif
