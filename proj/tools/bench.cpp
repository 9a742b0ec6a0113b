// Compares the OpenMP kernels against their serial reference paths on three
// workloads: whole-graph fan detection, exhaustive search, and an extraction
// campaign. Wall times only; verdicts and results are asserted equal.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ramsey/campaign.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/search.hpp"
#include "ramsey/threads.hpp"

using namespace ramsey;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void set_threads(int k) {
#ifdef _OPENMP
    omp_set_num_threads(k);
#else
    (void)k;
#endif
}

void report(const char* name, double serial_ms, double parallel_ms, int threads) {
    std::printf("%-28s serial %9.1f ms   parallel(%d) %9.1f ms   speedup %.2fx\n", name, serial_ms,
                threads, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    int threads = configured_threads();
    std::printf("worker pool: %d thread(s)\n\n", threads);

    {
        // fan detection over every center of a large fan-free graph
        auto rep = build_symmetric_lower_bound(36);
        SimpleGraph g = rep.graph;
        SimpleGraph co = complement(g);

        auto t0 = Clock::now();
        auto s1 = find_fan_serial(g, 36);
        auto s2 = find_fan_serial(co, 36);
        double serial = ms_since(t0);

        set_threads(threads);
        t0 = Clock::now();
        auto p1 = find_fan(g, 36);
        auto p2 = find_fan(co, 36);
        double parallel = ms_since(t0);

        guarantee(s1.has_value() == p1.has_value() && s2.has_value() == p2.has_value(),
                  "serial and parallel fan scans disagree");
        report("find_fan (N=216, both views)", serial, parallel, threads);
    }

    {
        // exhaustive search: deterministic sequential order vs worker pool
        TargetSpec fan2 = parse_target("fan:2");
        SearchConfig serial_cfg;
        serial_cfg.deterministic = true;
        auto t0 = Clock::now();
        auto rs = ramsey_check(fan2, fan2, 9, serial_cfg);
        double serial = ms_since(t0);

        set_threads(threads);
        t0 = Clock::now();
        auto rp = ramsey_check(fan2, fan2, 9);
        double parallel = ms_since(t0);

        guarantee(rs.verdict == rp.verdict, "serial and parallel search verdicts disagree");
        report("search fan:2 at N=9", serial, parallel, threads);
    }

    {
        // extraction campaign: trial loop is embarrassingly parallel
        set_threads(1);
        auto t0 = Clock::now();
        auto rs = random_campaign("theorem1", 6, 0, 400, 1234);
        double serial = ms_since(t0);

        set_threads(threads);
        t0 = Clock::now();
        auto rp = random_campaign("theorem1", 6, 0, 400, 1234);
        double parallel = ms_since(t0);

        guarantee(rs.valid == rp.valid, "thread count changed campaign results");
        report("campaign theorem1 n=6 x400", serial, parallel, threads);
    }

    return 0;
}
