#pragma once

#include <cstdint>

namespace bp::parallel {

/// Kernel dispatch policy. Auto switches to the OpenMP path above a size
/// threshold; Serial forces the reference path (used by tests and as the
/// baseline in the kernel benchmark).
enum class Mode { Serial, Parallel, Auto };

void set_mode(Mode m);
Mode mode();

/// Thread budget: min(omp_get_max_threads(), BP_THREADS) where the env
/// var BP_THREADS, when set to a positive integer, caps parallelism.
int thread_count();

/// Elements below this run serially under Auto (fork/join overhead
/// dominates on small grids).
inline constexpr std::int64_t kAutoThreshold = 1 << 14;

bool use_parallel(std::int64_t n);

}  // namespace bp::parallel
