#include "bp/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace bp::parallel {

namespace {
std::atomic<Mode> g_mode{Mode::Auto};

int read_thread_budget() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("BP_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}
}  // namespace

void set_mode(Mode m) { g_mode.store(m, std::memory_order_relaxed); }
Mode mode() { return g_mode.load(std::memory_order_relaxed); }

int thread_count() {
    static const int n = read_thread_budget();
    return n;
}

bool use_parallel(std::int64_t n) {
    switch (mode()) {
        case Mode::Serial: return false;
        case Mode::Parallel: return thread_count() > 1;
        case Mode::Auto: return thread_count() > 1 && n >= kAutoThreshold;
    }
    return false;
}

}  // namespace bp::parallel
