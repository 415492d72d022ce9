// io.hpp -- text formats for instances, matchings and tree decompositions.
//
// The formats are line oriented. '#' starts a comment, blank lines are
// skipped, tokens are whitespace separated. Agent ids may not contain the
// reserved characters "=>-,{}#:" (validate_instance enforces the same rule
// so every valid instance round-trips through serialize/parse).
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mmkit/graph.hpp"
#include "mmkit/market.hpp"

namespace mmkit {

// Parse failure with the 1-based line it was detected on.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Instance format, sections in this order (pref lines in any order between
// quota and edges; a missing pref line means an empty list; the edges
// section may be omitted for an edgeless graph):
//
//   students: i1 i2 i3
//   schools: s1 s2
//   quota: s1=1 s2=2
//   pref i1: s2 > s1
//   pref s1: i1 > i2 > i3
//   edges: i1-i2 i2-i3
//
// After parsing, validate_instance runs. With `report` null any validation
// error throws std::invalid_argument; otherwise the caller inspects the
// report (the returned instance is only finalized when report->ok()).
MarketInstance parse_instance(std::istream& in, ValidationReport* report = nullptr);
MarketInstance parse_instance(const std::string& text, ValidationReport* report = nullptr);
MarketInstance parse_instance_file(const std::string& path, ValidationReport* report = nullptr);
std::string serialize_instance(const MarketInstance& inst);

// Matching format, one line: "match: i1=s1 i2=- i3=s2". '-' and omission
// both mean unmatched; listing a student twice is an error.
Matching parse_matching(std::istream& in, const MarketInstance& inst);
Matching parse_matching(const std::string& text, const MarketInstance& inst);
Matching parse_matching_file(const std::string& path, const MarketInstance& inst);
std::string serialize_matching(const Matching& y, const MarketInstance& inst);

// Tree decomposition format:
//
//   bags: B1={i3,i4,i5} B2={i2,i3,i4}
//   tree: B1-B2
//
// Bag names are local to the file. "tree:" may be omitted when there are
// no bag-tree edges. Structural soundness is validate_tree_decomposition's
// job, not the parser's.
TreeDecomposition parse_decomposition(std::istream& in, const MarketInstance& inst);
TreeDecomposition parse_decomposition(const std::string& text, const MarketInstance& inst);
TreeDecomposition parse_decomposition_file(const std::string& path, const MarketInstance& inst);
std::string serialize_decomposition(const TreeDecomposition& td, const MarketInstance& inst);

} // namespace mmkit
