// Timing harness comparing the serial reference kernels against their
// OpenMP counterparts across grid sizes. Emits a CSV so regressions in
// either path are visible; correctness of the pair is covered by the
// unit tests.

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bp/kernels.hpp"
#include "bp/parallel.hpp"

using bp::kernels::cplx;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(int reps, const std::function<void()>& fn) {
    fn();  // warm up
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "bench_kernels.csv";
    std::FILE* out = std::fopen(out_path.c_str(), "w");
    if (!out) {
        std::perror("fopen");
        return 1;
    }
    std::fprintf(out, "kernel,n,elements,serial_ms,parallel_ms,speedup\n");
    std::printf("threads: %d\n", bp::parallel::thread_count());

    std::mt19937_64 gen(42);
    std::normal_distribution<double> dist;

    for (int n : {64, 128, 256, 512, 1024}) {
        const size_t len = static_cast<size_t>(n) * n;
        std::vector<cplx> a(len), b(len), c(len);
        std::vector<double> w(len);
        for (size_t i = 0; i < len; ++i) {
            a[i] = cplx(dist(gen), dist(gen));
            b[i] = cplx(dist(gen), dist(gen));
            w[i] = dist(gen);
        }
        const int reps = n <= 256 ? 200 : 40;
        volatile double sink = 0.0;

        struct Row {
            const char* name;
            std::function<void()> serial, parallel;
        };
        const double h2 = 1.0 / (n * n);
        std::vector<Row> rows = {
            {"mul", [&] { bp::kernels::serial::mul(a, b, c); },
             [&] { bp::kernels::par::mul(a, b, c); }},
            {"mul_real", [&] { bp::kernels::serial::mul_real(a, w, c); },
             [&] { bp::kernels::par::mul_real(a, w, c); }},
            {"axpy", [&] { bp::kernels::serial::axpy(cplx{0.5, 0.1}, a, c); },
             [&] { bp::kernels::par::axpy(cplx{0.5, 0.1}, a, c); }},
            {"norm2sq", [&] { sink = bp::kernels::serial::norm2sq(a); },
             [&] { sink = bp::kernels::par::norm2sq(a); }},
            {"dotc", [&] { sink = bp::kernels::serial::dotc(a, b).real(); },
             [&] { sink = bp::kernels::par::dotc(a, b).real(); }},
            {"five_point", [&] { bp::kernels::serial::five_point(a, n, n, h2, c); },
             [&] { bp::kernels::par::five_point(a, n, n, h2, c); }},
        };
        for (const Row& r : rows) {
            const double ts = time_ms(reps, r.serial);
            const double tp = time_ms(reps, r.parallel);
            std::fprintf(out, "%s,%d,%zu,%.6f,%.6f,%.3f\n", r.name, n, len, ts, tp,
                         tp > 0.0 ? ts / tp : 0.0);
            std::printf("%-10s n=%-5d serial %8.4f ms  parallel %8.4f ms  speedup %5.2fx\n",
                        r.name, n, ts, tp, tp > 0.0 ? ts / tp : 0.0);
        }
        (void)sink;
    }
    std::fclose(out);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}
