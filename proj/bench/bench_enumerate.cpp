// bench_enumerate.cpp -- timing table for the enumeration kernels: the serial
// reference against its split (OpenMP when available) twin, equality checked
// on every row so a speedup can never hide a divergence.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "mmkit/gen.hpp"
#include "mmkit/market.hpp"
#include "mmkit/oracle.hpp"

using namespace mmkit;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

// tree-peaked preferences keep every list complete, so these markets sit at
// the dense end of what the desk bounds allow
MarketInstance make(int n, int m, QuotaMode qm, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.students = n;
    spec.schools = m;
    spec.family = GraphFamily::RandomTree;
    spec.pref_mode = PrefMode::SinglePeakedTree;
    spec.quota_mode = qm;
    spec.max_quota = 2;
    spec.seed = seed;
    return generate(spec).inst;
}

struct Row {
    int n, m;
    QuotaMode qm;
    std::uint64_t seed;
};

}  // namespace

int main() {
#ifdef MMKIT_HAVE_OPENMP
    std::printf("split kernels: OpenMP enabled\n");
#else
    std::printf("split kernels: OpenMP not available, split code runs serially\n");
#endif
    std::printf("%-30s %10s %10s %8s %s\n", "workload", "serial", "split", "ratio",
                "agree");

    std::vector<Row> enum_rows = {{7, 4, QuotaMode::RandomBounded, 11},
                                  {8, 5, QuotaMode::RandomBounded, 12},
                                  {8, 6, QuotaMode::Unit, 13}};
    for (const Row& r : enum_rows) {
        MarketInstance inst = make(r.n, r.m, r.qm, r.seed);
        auto t0 = std::chrono::steady_clock::now();
        auto serial = enumerate_feasible(inst);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto split = enumerate_feasible_parallel(inst);
        double tp = ms_since(t0);
        char name[64];
        std::snprintf(name, sizeof name, "enumerate n=%d m=%d (%zu found)", r.n, r.m,
                      serial.size());
        std::printf("%-30s %8.2fms %8.2fms %7.2fx %s\n", name, ts, tp,
                    tp > 0 ? ts / tp : 0.0, serial == split ? "yes" : "NO");
    }

    std::vector<Row> pareto_rows = {{6, 3, QuotaMode::RandomBounded, 21},
                                    {6, 4, QuotaMode::Unit, 22}};
    for (const Row& r : pareto_rows) {
        MarketInstance inst = make(r.n, r.m, r.qm, r.seed);
        auto all = enumerate_feasible(inst);
        auto t0 = std::chrono::steady_clock::now();
        auto serial = mark_pareto(inst, all);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto split = mark_pareto_parallel(inst, all);
        double tp = ms_since(t0);
        char name[64];
        std::snprintf(name, sizeof name, "pareto marks n=%d m=%d (%zu)", r.n, r.m,
                      all.size());
        std::printf("%-30s %8.2fms %8.2fms %7.2fx %s\n", name, ts, tp,
                    tp > 0 ? ts / tp : 0.0, serial == split ? "yes" : "NO");
    }
    return 0;
}
