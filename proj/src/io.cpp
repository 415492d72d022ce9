// io.cpp -- line-oriented parsers and canonical serializers.

#include "mmkit/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mmkit {

namespace {

struct Line {
    int number;                       // 1-based, from the raw stream
    std::vector<std::string> tokens;
};

// Strip '#' comments, drop blank lines, split the rest on whitespace.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        number++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream split(raw);
        Line line{number, {}};
        std::string tok;
        while (split >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// " a > b > c" -> {"a","b","c"}; complains when a separator is missing or
// an entry is empty ("a > > b").
std::vector<std::string> split_ranking(const std::vector<std::string>& tokens,
                                       std::size_t from, int line) {
    std::string joined;
    for (std::size_t t = from; t < tokens.size(); t++) {
        if (t > from) joined += ' ';
        joined += tokens[t];
    }
    std::vector<std::string> out;
    if (trim(joined).empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto gt = joined.find('>', start);
        std::string piece = trim(gt == std::string::npos
                                     ? joined.substr(start)
                                     : joined.substr(start, gt - start));
        if (piece.empty())
            throw ParseError(line, "empty entry in preference list");
        if (piece.find_first_of(" \t") != std::string::npos)
            throw ParseError(line, "expected '>' between '" +
                                       piece.substr(0, piece.find_first_of(" \t")) +
                                       "' and the next entry");
        out.push_back(piece);
        if (gt == std::string::npos) break;
        start = gt + 1;
    }
    return out;
}

} // namespace

MarketInstance parse_instance(std::istream& in, ValidationReport* report) {
    auto lines = tokenize(in);
    std::size_t at = 0;
    int last_line = lines.empty() ? 1 : lines.back().number;

    auto expect_section = [&](const char* name) -> const Line& {
        if (at >= lines.size())
            throw ParseError(last_line, std::string("missing '") + name + ":' section");
        const Line& line = lines[at];
        if (line.tokens[0] != std::string(name) + ":")
            throw ParseError(line.number, std::string("expected '") + name +
                                              ":' here, got '" + line.tokens[0] + "'");
        at++;
        return line;
    };

    MarketInstance inst;
    std::map<std::string, int> student_at, school_at;

    {
        const Line& line = expect_section("students");
        for (std::size_t t = 1; t < line.tokens.size(); t++) {
            if (!student_at.emplace(line.tokens[t], (int)inst.students.size()).second)
                throw ParseError(line.number, "duplicate student id " + line.tokens[t]);
            inst.students.push_back(line.tokens[t]);
        }
    }
    {
        const Line& line = expect_section("schools");
        for (std::size_t t = 1; t < line.tokens.size(); t++) {
            if (school_at.count(line.tokens[t]) || student_at.count(line.tokens[t]))
                throw ParseError(line.number, "duplicate id " + line.tokens[t]);
            school_at.emplace(line.tokens[t], (int)inst.schools.size());
            inst.schools.push_back(line.tokens[t]);
        }
    }

    inst.quota.assign(inst.schools.size(), -1);
    {
        const Line& line = expect_section("quota");
        std::vector<char> seen(inst.schools.size(), 0);
        for (std::size_t t = 1; t < line.tokens.size(); t++) {
            const std::string& tok = line.tokens[t];
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError(line.number, "expected school=quota, got '" + tok + "'");
            std::string name = tok.substr(0, eq);
            auto it = school_at.find(name);
            if (it == school_at.end())
                throw ParseError(line.number, "quota for unknown school " + name);
            if (seen[it->second])
                throw ParseError(line.number, "quota for " + name + " given twice");
            seen[it->second] = 1;
            inst.quota[it->second] = parse_int(tok.substr(eq + 1), line.number);
        }
        for (std::size_t s = 0; s < inst.schools.size(); s++)
            if (!seen[s])
                throw ParseError(line.number, "no quota for school " + inst.schools[s]);
    }

    inst.student_pref.assign(inst.students.size(), {});
    inst.school_pref.assign(inst.schools.size(), {});
    std::vector<char> pref_seen_i(inst.students.size(), 0), pref_seen_s(inst.schools.size(), 0);
    inst.graph.n = (int)inst.students.size();
    bool edges_done = false;

    for (; at < lines.size(); at++) {
        const Line& line = lines[at];
        if (line.tokens[0] == "pref") {
            if (edges_done)
                throw ParseError(line.number, "pref line after the edges section");
            if (line.tokens.size() < 2 || line.tokens[1].back() != ':')
                throw ParseError(line.number, "expected 'pref <id>:'");
            std::string who = line.tokens[1].substr(0, line.tokens[1].size() - 1);
            auto entries = split_ranking(line.tokens, 2, line.number);
            if (auto it = student_at.find(who); it != student_at.end()) {
                if (pref_seen_i[it->second])
                    throw ParseError(line.number, "preference for " + who + " given twice");
                pref_seen_i[it->second] = 1;
                for (const auto& e : entries) {
                    auto se = school_at.find(e);
                    if (se == school_at.end())
                        throw ParseError(line.number, "unknown school " + e +
                                                          " in preference of " + who);
                    inst.student_pref[it->second].push_back(se->second);
                }
            } else if (auto st = school_at.find(who); st != school_at.end()) {
                if (pref_seen_s[st->second])
                    throw ParseError(line.number, "preference for " + who + " given twice");
                pref_seen_s[st->second] = 1;
                for (const auto& e : entries) {
                    auto ie = student_at.find(e);
                    if (ie == student_at.end())
                        throw ParseError(line.number, "unknown student " + e +
                                                          " in preference of " + who);
                    inst.school_pref[st->second].push_back(ie->second);
                }
            } else {
                throw ParseError(line.number, "preference for unknown id " + who);
            }
        } else if (line.tokens[0] == "edges:") {
            if (edges_done)
                throw ParseError(line.number, "edges section given twice");
            edges_done = true;
            for (std::size_t t = 1; t < line.tokens.size(); t++) {
                const std::string& tok = line.tokens[t];
                auto dash = tok.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                    throw ParseError(line.number, "expected i-j edge, got '" + tok + "'");
                auto a = student_at.find(tok.substr(0, dash));
                auto b = student_at.find(tok.substr(dash + 1));
                if (a == student_at.end() || b == student_at.end())
                    throw ParseError(line.number, "edge '" + tok +
                                                      "' names an unknown student");
                inst.graph.edges.emplace_back(a->second, b->second);
            }
        } else {
            throw ParseError(line.number, "unexpected line, got '" + line.tokens[0] + "'");
        }
    }

    ValidationReport local;
    ValidationReport& rep = report ? *report : local;
    rep = validate_instance(inst);
    if (!report && !rep.ok())
        throw std::invalid_argument(rep.to_string());
    return inst;
}

MarketInstance parse_instance(const std::string& text, ValidationReport* report) {
    std::istringstream in(text);
    return parse_instance(in, report);
}

MarketInstance parse_instance_file(const std::string& path, ValidationReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in, report);
}

std::string serialize_instance(const MarketInstance& inst) {
    std::ostringstream out;
    out << "students:";
    for (const auto& t : inst.students) out << ' ' << t;
    out << "\nschools:";
    for (const auto& t : inst.schools) out << ' ' << t;
    out << "\nquota:";
    for (std::size_t s = 0; s < inst.schools.size(); s++)
        out << ' ' << inst.schools[s] << '=' << inst.quota[s];
    out << '\n';
    for (std::size_t i = 0; i < inst.students.size(); i++) {
        out << "pref " << inst.students[i] << ':';
        for (std::size_t r = 0; r < inst.student_pref[i].size(); r++)
            out << (r ? " > " : " ") << inst.schools[inst.student_pref[i][r]];
        out << '\n';
    }
    for (std::size_t s = 0; s < inst.schools.size(); s++) {
        out << "pref " << inst.schools[s] << ':';
        for (std::size_t r = 0; r < inst.school_pref[s].size(); r++)
            out << (r ? " > " : " ") << inst.students[inst.school_pref[s][r]];
        out << '\n';
    }
    out << "edges:";
    for (auto& [a, b] : inst.graph.edges)
        out << ' ' << inst.students[a] << '-' << inst.students[b];
    out << '\n';
    return out.str();
}

Matching parse_matching(std::istream& in, const MarketInstance& inst) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(1, "missing 'match:' line");
    if (lines.size() > 1)
        throw ParseError(lines[1].number, "unexpected line after the matching");
    const Line& line = lines[0];
    if (line.tokens[0] != "match:")
        throw ParseError(line.number, "expected 'match:', got '" + line.tokens[0] + "'");

    Matching y;
    y.to_school.assign(inst.n(), kNone);
    std::vector<char> seen(inst.n(), 0);
    for (std::size_t t = 1; t < line.tokens.size(); t++) {
        const std::string& tok = line.tokens[t];
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
            throw ParseError(line.number, "expected student=school, got '" + tok + "'");
        int i = inst.student_index(tok.substr(0, eq));
        if (i < 0)
            throw ParseError(line.number, "unknown student " + tok.substr(0, eq));
        if (seen[i])
            throw ParseError(line.number, "student " + inst.students[i] + " listed twice");
        seen[i] = 1;
        std::string rhs = tok.substr(eq + 1);
        if (rhs == "-") continue;
        int s = inst.school_index(rhs);
        if (s < 0)
            throw ParseError(line.number, "unknown school " + rhs);
        y.to_school[i] = s;
    }
    return y;
}

Matching parse_matching(const std::string& text, const MarketInstance& inst) {
    std::istringstream in(text);
    return parse_matching(in, inst);
}

Matching parse_matching_file(const std::string& path, const MarketInstance& inst) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_matching(in, inst);
}

std::string serialize_matching(const Matching& y, const MarketInstance& inst) {
    if ((int)y.to_school.size() != inst.n())
        throw std::invalid_argument("matching does not cover the student list");
    std::ostringstream out;
    out << "match:";
    for (int i = 0; i < inst.n(); i++) {
        out << ' ' << inst.students[i] << '=';
        if (y.to_school[i] == kNone)
            out << '-';
        else
            out << inst.schools[y.to_school[i]];
    }
    out << '\n';
    return out.str();
}

TreeDecomposition parse_decomposition(std::istream& in, const MarketInstance& inst) {
    auto lines = tokenize(in);
    std::size_t at = 0;
    if (lines.empty()) throw ParseError(1, "missing 'bags:' line");

    TreeDecomposition td;
    std::map<std::string, int> bag_at;
    {
        const Line& line = lines[at++];
        if (line.tokens[0] != "bags:")
            throw ParseError(line.number, "expected 'bags:', got '" + line.tokens[0] + "'");
        for (std::size_t t = 1; t < line.tokens.size(); t++) {
            const std::string& tok = line.tokens[t];
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size() ||
                tok[eq + 1] != '{' || tok.back() != '}')
                throw ParseError(line.number,
                                 "expected name={a,b,c} with no spaces, got '" + tok + "'");
            std::string name = tok.substr(0, eq);
            if (!bag_at.emplace(name, (int)td.bags.size()).second)
                throw ParseError(line.number, "bag " + name + " given twice");
            std::string inside = tok.substr(eq + 2, tok.size() - eq - 3);
            std::vector<int> bag;
            std::size_t start = 0;
            while (!inside.empty()) {
                auto comma = inside.find(',', start);
                std::string id = inside.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                if (id.empty())
                    throw ParseError(line.number, "empty entry in bag " + name);
                int i = inst.student_index(id);
                if (i < 0)
                    throw ParseError(line.number,
                                     "unknown student " + id + " in bag " + name);
                bag.push_back(i);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            td.bags.push_back(std::move(bag));
        }
    }
    if (at < lines.size()) {
        const Line& line = lines[at++];
        if (line.tokens[0] != "tree:")
            throw ParseError(line.number, "expected 'tree:', got '" + line.tokens[0] + "'");
        for (std::size_t t = 1; t < line.tokens.size(); t++) {
            const std::string& tok = line.tokens[t];
            auto dash = tok.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                throw ParseError(line.number, "expected X-Y edge, got '" + tok + "'");
            auto a = bag_at.find(tok.substr(0, dash));
            auto b = bag_at.find(tok.substr(dash + 1));
            if (a == bag_at.end() || b == bag_at.end())
                throw ParseError(line.number, "edge '" + tok + "' names an unknown bag");
            td.tree_edges.emplace_back(a->second, b->second);
        }
    }
    if (at < lines.size())
        throw ParseError(lines[at].number, "unexpected line after the tree section");
    return td;
}

TreeDecomposition parse_decomposition(const std::string& text, const MarketInstance& inst) {
    std::istringstream in(text);
    return parse_decomposition(in, inst);
}

TreeDecomposition parse_decomposition_file(const std::string& path,
                                           const MarketInstance& inst) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_decomposition(in, inst);
}

std::string serialize_decomposition(const TreeDecomposition& td,
                                    const MarketInstance& inst) {
    std::ostringstream out;
    out << "bags:";
    for (std::size_t b = 0; b < td.bags.size(); b++) {
        out << " B" << b + 1 << "={";
        for (std::size_t k = 0; k < td.bags[b].size(); k++) {
            if (k) out << ',';
            int i = td.bags[b][k];
            if (i < 0 || i >= inst.n())
                throw std::invalid_argument("bag entry is not a student of this market");
            out << inst.students[i];
        }
        out << '}';
    }
    out << '\n';
    if (!td.tree_edges.empty()) {
        out << "tree:";
        for (auto& [a, b] : td.tree_edges)
            out << " B" << a + 1 << "-B" << b + 1;
        out << '\n';
    }
    return out.str();
}

} // namespace mmkit
