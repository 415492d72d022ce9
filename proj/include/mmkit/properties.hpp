// properties.hpp -- what a given matching satisfies: envy (global and along
// the acquaintance graph), wastefulness, Pareto efficiency, mutually-best
// pairs, local stability. Everything works on a finalized instance and a
// matching that passes check_matching.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmkit/market.hpp"

namespace mmkit {

// i envies i' when i' holds a seat at a school i is acceptable to, i strictly
// prefers that school to its own assignment, and the school ranks i above i'.
// An unmatched i' is never envied; an unmatched i can envy at any of its
// contract schools. loc_* restricts the envying pairs to graph neighbors.
struct EnvyReport {
    std::vector<std::vector<int>> ev;       // ev[i]: students i envies
    std::vector<std::vector<int>> evr;      // evr[i]: students envying i
    std::vector<std::vector<int>> loc_ev;   // ev[i] cut to N(i)
    std::vector<std::vector<int>> loc_evr;  // evr[i] cut to N(i)
    int ef_level = 0;                       // max_i |ev[i]|
    int erf_level = 0;                      // max_i |evr[i]|
    int local_ef_level = 0;
    int local_erf_level = 0;

    bool fair() const { return ef_level == 0; }
    bool locally_envy_free() const { return local_ef_level == 0; }
    std::string to_text(const MarketInstance& inst, const Matching& y) const;
};

EnvyReport envy_report(const MarketInstance& inst, const Matching& y);
bool has_justified_envy(const MarketInstance& inst, const Matching& y);

// A matching is wasteful when some student prefers a school (among its
// contracts) to its assignment and that school has an empty seat. On a false
// return, *waste names one such (student, school) claim.
bool is_nonwasteful(const MarketInstance& inst, const Matching& y,
                    std::pair<int, int>* waste = nullptr);

// Pareto efficiency over feasible matchings: nothing feasible makes a student
// better off without making another worse off. Exponential search, guarded by
// bounds. On a false return, *dominator holds a witness (an infeasible y is
// reported inefficient with no witness).
bool is_pareto_efficient(const MarketInstance& inst, const Matching& y,
                         Matching* dominator = nullptr, const DeskBounds& bounds = {});

// (i,s) is a mutually-best pair when s is i's top contract, i is s's top
// contract, and s has a seat at all. is_mutually_best asks whether the
// matching contains every such pair.
std::vector<std::pair<int, int>> mb_pairs(const MarketInstance& inst);
bool is_mutually_best(const MarketInstance& inst, const Matching& y);

// A pair (i,s) blocks when i prefers s to its assignment and s would take i:
// either a seat is free, or i outranks the school's worst-off admit. The
// matching is locally stable when no blocking pair is visible to the student,
// i.e. no blocking (i,s) has a graph neighbor of i currently placed at s.
// On a false return, *blocking names a visible blocking pair.
bool is_locally_stable(const MarketInstance& inst, const Matching& y,
                       std::pair<int, int>* blocking = nullptr);

// One-stop summary. Stability here is fairness plus nonwastefulness (plus
// feasibility); pareto_efficient is always false for an infeasible matching.
struct PropertyReport {
    bool feasible = false;
    bool fair = false;
    bool locally_envy_free = false;
    bool nonwasteful = false;
    bool stable = false;
    bool pareto_efficient = false;
    bool mutually_best = false;
    bool locally_stable = false;
    int ef_level = 0;
    int erf_level = 0;
    int local_ef_level = 0;
    int local_erf_level = 0;
    int matched = 0;  // students with a seat

    std::string to_text() const;
    static std::string csv_header();
    std::string to_csv() const;
};

PropertyReport analyze_matching(const MarketInstance& inst, const Matching& y,
                                const DeskBounds& bounds = {});

} // namespace mmkit
