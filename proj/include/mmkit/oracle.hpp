// oracle.hpp -- brute-force ground truth at desk scale. Everything here
// enumerates, so everything here honors DeskBounds. The enumeration order is
// fixed (students in declared order; per student: unmatched first, then
// schools by index), which makes results reproducible and lists comparable.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmkit/market.hpp"
#include "mmkit/mechanisms.hpp"
#include "mmkit/properties.hpp"

namespace mmkit {

// All feasible matchings. The serial version is the reference; the parallel
// one splits on the first student's option and must produce the identical
// list (the test suite holds it to that).
std::vector<Matching> enumerate_feasible(const MarketInstance& inst,
                                         const DeskBounds& bounds = {});
std::vector<Matching> enumerate_feasible_parallel(const MarketInstance& inst,
                                                  const DeskBounds& bounds = {});

// does z make someone better off and no one worse off than y?
bool dominates(const MarketInstance& inst, const Matching& z, const Matching& y);

// pareto flags for each member of a list of feasible matchings
std::vector<char> mark_pareto(const MarketInstance& inst,
                              const std::vector<Matching>& all);
std::vector<char> mark_pareto_parallel(const MarketInstance& inst,
                                       const std::vector<Matching>& all);

// Conjunctive filter over enumerated matchings.
struct MatchingFilter {
    bool lef = false;
    bool fair = false;
    bool nonwasteful = false;
    bool pareto_efficient = false;
    bool stable = false;
    bool mutually_best = false;
    bool locally_stable = false;
    int exact_size = -1;  // -1: any number of matched students
};

std::vector<Matching> enumerate_matchings(const MarketInstance& inst,
                                          const MatchingFilter& filter = {},
                                          const DeskBounds& bounds = {});

// Is there a matching that is locally envy-free and Pareto efficient?
// Returns the first one in enumeration order, if any.
std::optional<Matching> decide_lee(const MarketInstance& inst,
                                   const DeskBounds& bounds = {});

// Order structure of a filtered set under the students' pointwise preference:
// pairs with no common upper bound inside the set, and whether the set has a
// greatest element.
struct LatticeReport {
    std::vector<Matching> set;
    std::vector<std::pair<int, int>> nojoin_pairs;  // indices into `set`
    bool has_optimum = false;
    Matching optimum;  // meaningful only when has_optimum
};

LatticeReport check_lattice_closure(const MarketInstance& inst,
                                    const MatchingFilter& filter,
                                    const DeskBounds& bounds = {});

// Do all matchings of a class place the same number of students, and do they
// fill each school identically? Checked for the locally-envy-free+efficient
// class and the locally-envy-free+nonwasteful class.
struct RuralClassStat {
    std::string label;
    int count = 0;
    std::vector<int> sizes;  // distinct matched-counts, ascending
    bool same_size = true;
    bool same_fill = true;
};

struct RuralReport {
    RuralClassStat lef_pe;
    RuralClassStat lef_nonwasteful;
};

RuralReport rural_hospitals_check(const MarketInstance& inst,
                                  const DeskBounds& bounds = {});

// A profitable lie: dropping/reordering schools on one student's list gets
// that student a school it truly prefers to its honest outcome.
struct ManipulationWitness {
    int student = kNone;
    std::vector<int> misreport;  // school indices as submitted
    int honest_school = kNone;
    int lied_school = kNone;
};

// Tries every strict order over every subset of each student's list (the
// empty list included). Runs of the mechanism that fail on a misreport are
// skipped; a failing honest run propagates. Returns the first witness found.
std::optional<ManipulationWitness> verify_strategyproofness(
    const MarketInstance& inst, const MechanismConfig& mech,
    const DeskBounds& bounds = {});

// Object-allocation feasibility: can a pick-in-order run over `source` end
// with `student` holding `school`? Decided literally, by trying every order.
// `source` must have as many schools as students, unit quotas, and complete
// preference lists on both sides.
bool sd_feasible_brute(const MarketInstance& source, int student, int school,
                       const DeskBounds& bounds = {});

// Rewrites that question as an existence question about locally envy-free
// efficient matchings: the returned market (one extra student, one extra
// school, complete contracts) admits an LEF+PE matching exactly when the
// answer above is yes.
MarketInstance reduce_sd_feasibility_to_lee(const MarketInstance& source,
                                            int student, int school);

} // namespace mmkit
