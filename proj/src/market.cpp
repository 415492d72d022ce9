#include "mmkit/market.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mmkit {

void AcquaintanceGraph::build_adjacency() {
    adj.assign(n, {});
    for (auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
}

bool AcquaintanceGraph::has_edge(int a, int b) const {
    if (a < 0 || a >= n || b < 0 || b >= n) return false;
    const auto& list = adj[a];
    return std::binary_search(list.begin(), list.end(), b);
}

bool ValidationReport::ok() const {
    for (const auto& issue : issues)
        if (issue.severity == Issue::Error) return false;
    return true;
}

void ValidationReport::error(const std::string& where, const std::string& message) {
    issues.push_back({Issue::Error, where, message});
}

void ValidationReport::warn(const std::string& where, const std::string& message) {
    issues.push_back({Issue::Warning, where, message});
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& issue : issues) {
        out << (issue.severity == Issue::Error ? "error" : "warning")
            << " [" << issue.where << "] " << issue.message << "\n";
    }
    return out.str();
}

int MarketInstance::student_index(const std::string& token) const {
    for (int i = 0; i < n(); i++)
        if (students[i] == token) return i;
    return -1;
}

int MarketInstance::school_index(const std::string& token) const {
    for (int s = 0; s < m(); s++)
        if (schools[s] == token) return s;
    return -1;
}

void MarketInstance::finalize(ValidationReport* report) {
    // Mutual-listing closure: a contract exists only when both sides list each
    // other. One-sided entries are dropped, relative order is preserved.
    std::vector<std::vector<char>> s_lists(n(), std::vector<char>(m(), 0));
    std::vector<std::vector<char>> i_lists(m(), std::vector<char>(n(), 0));
    for (int i = 0; i < n(); i++)
        for (int s : student_pref[i]) s_lists[i][s] = 1;
    for (int s = 0; s < m(); s++)
        for (int i : school_pref[s]) i_lists[s][i] = 1;

    for (int i = 0; i < n(); i++) {
        std::vector<int> kept;
        for (int s : student_pref[i]) {
            if (i_lists[s][i]) {
                kept.push_back(s);
            } else if (report) {
                report->warn("pref " + students[i],
                             "dropped " + schools[s] + ": not listed back by the school");
            }
        }
        student_pref[i] = std::move(kept);
    }
    for (int s = 0; s < m(); s++) {
        std::vector<int> kept;
        for (int i : school_pref[s]) {
            if (s_lists[i][s]) {
                kept.push_back(i);
            } else if (report) {
                report->warn("pref " + schools[s],
                             "dropped " + students[i] + ": not listed back by the student");
            }
        }
        school_pref[s] = std::move(kept);
    }

    srank.assign(n(), std::vector<int>(m(), kUnranked));
    for (int i = 0; i < n(); i++)
        for (int r = 0; r < (int)student_pref[i].size(); r++)
            srank[i][student_pref[i][r]] = r;
    irank.assign(m(), std::vector<int>(n(), kUnranked));
    for (int s = 0; s < m(); s++)
        for (int r = 0; r < (int)school_pref[s].size(); r++)
            irank[s][school_pref[s][r]] = r;

    graph.n = n();
    graph.build_adjacency();
}

namespace {

template <typename Named>
void check_pref_list(const std::vector<int>& list, int limit, const std::string& where,
                     Named name_of, ValidationReport& report) {
    std::set<int> seen;
    for (int x : list) {
        if (x < 0 || x >= limit) {
            report.error(where, "reference out of range");
            continue;
        }
        if (!seen.insert(x).second)
            report.error(where, "duplicate entry " + name_of(x));
    }
}

}  // namespace

ValidationReport validate_instance(MarketInstance& inst) {
    ValidationReport report;
    const int n = inst.n(), m = inst.m();

    if ((int)inst.student_pref.size() != n)
        report.error("pref", "expected one preference list per student");
    if ((int)inst.school_pref.size() != m)
        report.error("pref", "expected one preference list per school");
    if ((int)inst.quota.size() != m) {
        report.error("quota", "expected one quota per school");
    } else {
        for (int s = 0; s < m; s++)
            if (inst.quota[s] < 0)
                report.error("quota " + inst.schools[s], "negative quota");
    }

    {
        std::set<std::string> seen;
        for (const auto& t : inst.students)
            if (!seen.insert(t).second) report.error("students", "duplicate id " + t);
    }
    {
        std::set<std::string> seen;
        for (const auto& t : inst.schools)
            if (!seen.insert(t).second) report.error("schools", "duplicate id " + t);
    }

    // ids travel through the text format, so they must survive a round trip
    auto check_id = [&](const std::string& t, const char* where) {
        if (t.empty()) {
            report.error(where, "empty id");
            return;
        }
        for (char c : t)
            if (std::isspace((unsigned char)c) || std::strchr("=>-,{}#:", c)) {
                report.error(where, "id " + t + " contains a reserved character");
                return;
            }
    };
    for (const auto& t : inst.students) check_id(t, "students");
    for (const auto& t : inst.schools) check_id(t, "schools");
    {
        std::set<std::string> pool(inst.students.begin(), inst.students.end());
        for (const auto& t : inst.schools)
            if (pool.count(t))
                report.error("schools", "id " + t + " is already a student id");
    }

    if (report.ok()) {
        for (int i = 0; i < n; i++)
            check_pref_list(inst.student_pref[i], m, "pref " + inst.students[i],
                            [&](int s) { return inst.schools[s]; }, report);
        for (int s = 0; s < m; s++)
            check_pref_list(inst.school_pref[s], n, "pref " + inst.schools[s],
                            [&](int i) { return inst.students[i]; }, report);
    }

    std::set<std::pair<int, int>> edge_set;
    for (auto& [a, b] : inst.graph.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            report.error("edges", "edge endpoint refers to an undeclared student");
            continue;
        }
        if (a == b) {
            report.error("edges", "self-loop at " + inst.students[a]);
            continue;
        }
        auto canon = std::minmax(a, b);
        if (!edge_set.insert({canon.first, canon.second}).second)
            report.error("edges", "duplicate edge " + inst.students[canon.first] + "-" +
                                      inst.students[canon.second]);
    }

    if (report.ok()) {
        inst.graph.edges.assign(edge_set.begin(), edge_set.end());
        inst.finalize(&report);
    }
    return report;
}

int Matching::size() const {
    int count = 0;
    for (int s : to_school)
        if (s != kNone) count++;
    return count;
}

std::vector<int> Matching::fill(const MarketInstance& inst) const {
    std::vector<int> counts(inst.m(), 0);
    for (int s : to_school)
        if (s != kNone) counts[s]++;
    return counts;
}

std::vector<std::vector<int>> Matching::school_rosters(const MarketInstance& inst) const {
    std::vector<std::vector<int>> rosters(inst.m());
    for (int i = 0; i < (int)to_school.size(); i++)
        if (to_school[i] != kNone) rosters[to_school[i]].push_back(i);
    return rosters;
}

bool matching_less(const Matching& a, const Matching& b) {
    return a.to_school < b.to_school;
}

void check_matching(const MarketInstance& inst, const Matching& y) {
    if ((int)y.to_school.size() != inst.n())
        throw std::invalid_argument("matching: expected one entry per student");
    for (int i = 0; i < inst.n(); i++) {
        int s = y.to_school[i];
        if (s == kNone) continue;
        if (s < 0 || s >= inst.m())
            throw std::invalid_argument("matching: unknown school for student " +
                                        inst.students[i]);
        if (!inst.has_contract(i, s))
            throw std::invalid_argument("matching: pair " + inst.students[i] + "=" +
                                        inst.schools[s] + " is outside the contract set");
    }
}

bool is_feasible(const MarketInstance& inst, const Matching& y) {
    check_matching(inst, y);
    std::vector<int> counts = y.fill(inst);
    for (int s = 0; s < inst.m(); s++)
        if (counts[s] > inst.quota[s]) return false;
    return true;
}

void enforce_bounds(const MarketInstance& inst, const DeskBounds& bounds,
                    const char* where) {
    if (bounds.force) return;
    int total_quota = 0;
    for (int q : inst.quota) total_quota += q;
    if (inst.n() > bounds.max_students || inst.m() > bounds.max_schools ||
        total_quota > bounds.max_total_quota) {
        throw std::length_error(std::string(where) +
                                ": instance exceeds the desk-scale bounds "
                                "(pass force to override)");
    }
}

}  // namespace mmkit
