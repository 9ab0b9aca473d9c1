#ifndef HOUGHTON_PARALLEL_HPP
#define HOUGHTON_PARALLEL_HPP

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace houghton {

/// How a verification sweep runs. Serial is a genuine reference path (plain
/// loop, no OpenMP involvement), kept so tests can compare it against the
/// parallel kernels; results must agree element-for-element.
struct ExecutionPolicy {
    bool parallel = false;
    int jobs = 1;

    static ExecutionPolicy serial() { return {false, 1}; }
    static ExecutionPolicy with_jobs(int jobs)
    {
        if (jobs <= 1) return serial();
        return {true, jobs};
    }
};

inline int hardware_jobs()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Index sweep kernel. The body writes results keyed by index only, which
/// keeps every sweep deterministic regardless of scheduling.
template <class Fn>
void for_each_index(std::int64_t count, const ExecutionPolicy& policy, Fn&& body)
{
    if (!policy.parallel) {
        for (std::int64_t i = 0; i < count; ++i) body(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(policy.jobs)
    for (std::int64_t i = 0; i < count; ++i) body(i);
#else
    for (std::int64_t i = 0; i < count; ++i) body(i);
#endif
}

} // namespace houghton

#endif
