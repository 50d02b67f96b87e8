#pragma once

#include "barycalc/report.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace barycalc {

// Which engine evaluates a batch of check instances. Serial is the
// reference implementation; Parallel fans the same index space out across
// OpenMP threads. Instances are pure functions of their index, failures are
// merged and sorted by index afterwards, so both engines produce identical
// reports and the parallel one is byte-for-byte reproducible at any thread
// count.
enum class ExecMode { Serial, Parallel };

struct InstanceResult {
    enum class Kind { Pass, Fail, Skip };

    Kind kind = Kind::Pass;
    std::optional<Failure> failure;

    static InstanceResult pass() { return {}; }
    static InstanceResult skip() { return {Kind::Skip, std::nullopt}; }
    static InstanceResult fail(Failure f) { return {Kind::Fail, std::move(f)}; }
};

struct BatchResult {
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;
    std::vector<Failure> failures;
};

namespace detail {

template <typename Fn>
BatchResult run_batch_serial(std::uint64_t n, Fn&& fn) {
    BatchResult out;
    out.instances = n;
    for (std::uint64_t i = 0; i < n; ++i) {
        InstanceResult r = fn(i);
        if (r.kind == InstanceResult::Kind::Skip) {
            ++out.skipped;
        } else if (r.kind == InstanceResult::Kind::Fail) {
            out.failures.push_back(std::move(*r.failure));
        }
    }
    return out;
}

#if defined(_OPENMP)
template <typename Fn>
BatchResult run_batch_parallel(std::uint64_t n, Fn&& fn) {
    BatchResult out;
    out.instances = n;
    std::uint64_t skipped = 0;
    std::vector<std::vector<Failure>> per_thread;
#pragma omp parallel reduction(+ : skipped)
    {
#pragma omp single
        per_thread.resize(static_cast<std::size_t>(omp_get_num_threads()));
        std::vector<Failure>& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            InstanceResult r = fn(static_cast<std::uint64_t>(i));
            if (r.kind == InstanceResult::Kind::Skip) {
                ++skipped;
            } else if (r.kind == InstanceResult::Kind::Fail) {
                local.push_back(std::move(*r.failure));
            }
        }
    }
    out.skipped = skipped;
    for (auto& chunk : per_thread) {
        out.failures.insert(out.failures.end(), std::make_move_iterator(chunk.begin()),
                            std::make_move_iterator(chunk.end()));
    }
    std::sort(out.failures.begin(), out.failures.end(),
              [](const Failure& a, const Failure& b) { return a.instance < b.instance; });
    return out;
}
#endif

}  // namespace detail

// Evaluates fn(i) for i in [0, n). fn must be a pure function of i (any
// randomness derives from the index) and must not let exceptions escape.
template <typename Fn>
BatchResult run_batch(std::uint64_t n, ExecMode mode, Fn&& fn) {
#if defined(_OPENMP)
    if (mode == ExecMode::Parallel) {
        return detail::run_batch_parallel(n, std::forward<Fn>(fn));
    }
#else
    (void)mode;
#endif
    return detail::run_batch_serial(n, std::forward<Fn>(fn));
}

}  // namespace barycalc
