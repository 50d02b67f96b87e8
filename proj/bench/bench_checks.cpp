// Benchmark: the serial reference engine against the OpenMP engine on the
// axiom-check kernels, verifying along the way that both engines emit
// byte-identical reports.
//
// Usage: barycalc_bench [budget]   (default 20000 instances per sub-check)

#include "barycalc/axioms.hpp"
#include "barycalc/metric_norm.hpp"
#include "barycalc/sampler.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace barycalc;

namespace {

double time_of(const std::function<CheckReport()>& fn, CheckReport& out) {
    const auto start = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int g_mismatches = 0;

void row(const char* name, const ConvexModel& model, const Sampler& sampler,
         CheckReport (*check)(const ConvexModel&, const Sampler&, ExecMode)) {
    CheckReport serial_report, parallel_report;
    const double serial = time_of(
        [&] { return check(model, sampler, ExecMode::Serial); }, serial_report);
    const double parallel = time_of(
        [&] { return check(model, sampler, ExecMode::Parallel); }, parallel_report);
    const bool identical = serial_report.to_json().dump() == parallel_report.to_json().dump();
    if (!identical) {
        ++g_mismatches;
    }
    std::printf("%-24s %10llu inst   serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
                name, static_cast<unsigned long long>(serial_report.instances), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t budget = 20000;
    if (argc > 1) {
        budget = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
    }

#if defined(_OPENMP)
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp unavailable; parallel mode falls back to serial\n");
#endif

    const auto square = ConvexModel::hull({{Rational(0), Rational(0)},
                                           {Rational(1), Rational(0)},
                                           {Rational(1), Rational(1)},
                                           {Rational(0), Rational(1)}},
                                          Metric::l1());
    const Sampler sampler(42, dyadic_plus_thirds_grid(3), budget);

    row("convex-space-axioms", square, sampler, &check_convex_space_axioms);
    row("gamma-axioms", square, sampler, &check_gamma_axioms);
    row("metric-compatibility", square, sampler, &check_metric_axiom);
    row("uniform-on-lines", square, sampler, &check_uniform_on_lines);

    if (g_mismatches) {
        std::printf("%d engine mismatches\n", g_mismatches);
        return 1;
    }
    return 0;
}
