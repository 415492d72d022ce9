// enum_core.hpp -- DFS core shared by the serial and OpenMP enumerators.
// The two must stay byte-identical in output, so they share this walk.
#pragma once

#include <vector>

#include "mmkit/market.hpp"

namespace mmkit::detail {

// options per student in enumeration order: kNone first, then schools by index
std::vector<std::vector<int>> option_table(const MarketInstance& inst);

// extend picks for students [i, n) given current fills, appending results
void enumerate_from(const MarketInstance& inst,
                    const std::vector<std::vector<int>>& opts, int i,
                    std::vector<int>& pick, std::vector<int>& fill,
                    std::vector<Matching>& out);

} // namespace mmkit::detail
