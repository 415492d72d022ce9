// oracle_parallel.cpp -- OpenMP versions of the two heavy oracle kernels.
// Work is split along the first student's option so the concatenated result
// is the serial list, in the serial order, regardless of thread count.

#include <vector>

#include "enum_core.hpp"
#include "mmkit/oracle.hpp"

namespace mmkit {

std::vector<Matching> enumerate_feasible_parallel(const MarketInstance& inst,
                                                  const DeskBounds& bounds) {
    enforce_bounds(inst, bounds);
    const int n = inst.n();
    if (n == 0) {
        Matching empty;
        return {empty};
    }
    auto opts = detail::option_table(inst);
    const int branches = (int)opts[0].size();
    std::vector<std::vector<Matching>> buckets(branches);

#ifdef MMKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int oi = 0; oi < branches; oi++) {
        int s = opts[0][oi];
        std::vector<int> pick(n, kNone), fill(inst.m(), 0);
        if (s != kNone) {
            if (fill[s] == inst.quota[s]) continue;  // zero-quota school
            fill[s]++;
        }
        pick[0] = s;
        detail::enumerate_from(inst, opts, 1, pick, fill, buckets[oi]);
    }

    std::size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    std::vector<Matching> out;
    out.reserve(total);
    for (auto& b : buckets)
        for (auto& y : b) out.push_back(std::move(y));
    return out;
}

std::vector<char> mark_pareto_parallel(const MarketInstance& inst,
                                       const std::vector<Matching>& all) {
    const int count = (int)all.size();
    std::vector<char> pe(count, 1);

#ifdef MMKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (int a = 0; a < count; a++) {
        for (int b = 0; b < count; b++)
            if (b != a && dominates(inst, all[b], all[a])) {
                pe[a] = 0;
                break;
            }
    }
    return pe;
}

} // namespace mmkit
