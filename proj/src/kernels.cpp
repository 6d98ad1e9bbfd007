#include "bp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bp::kernels {

namespace serial {

void mul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void mul_real(std::span<const cplx> a, std::span<const double> b, std::span<cplx> out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void scale(std::span<const cplx> a, cplx alpha, std::span<cplx> out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i];
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
}

void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
}

double norm2sq(std::span<const cplx> a) {
    double s = 0.0;
    for (const cplx& v : a) s += v.real() * v.real() + v.imag() * v.imag();
    return s;
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double max_abs(std::span<const cplx> a) {
    double m = 0.0;
    for (const cplx& v : a) m = std::max(m, std::abs(v));
    return m;
}

void five_point(std::span<const cplx> u, int nx, int ny, double h2, std::span<cplx> out) {
    const double inv = 1.0 / h2;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const size_t k = static_cast<size_t>(i) * ny + j;
            cplx s = 4.0 * u[k];
            if (i > 0) s -= u[k - ny];
            if (i < nx - 1) s -= u[k + ny];
            if (j > 0) s -= u[k - 1];
            if (j < ny - 1) s -= u[k + 1];
            out[k] = s * inv;
        }
    }
}

}  // namespace serial

namespace par {

void mul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (std::int64_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_real(std::span<const cplx> a, std::span<const double> b, std::span<cplx> out) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (std::int64_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scale(std::span<const cplx> a, cplx alpha, std::span<cplx> out) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (std::int64_t i = 0; i < n; ++i) out[i] = alpha * a[i];
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (std::int64_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (std::int64_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

namespace {
// Fixed block partition so per-thread partials combine in a
// reproducible order for a given thread count.
struct Chunk {
    std::int64_t lo, hi;
};
inline Chunk chunk_of(std::int64_t n, int nthreads, int t) {
    const std::int64_t base = n / nthreads, rem = n % nthreads;
    const std::int64_t lo = t * base + std::min<std::int64_t>(t, rem);
    return {lo, lo + base + (t < rem ? 1 : 0)};
}
}  // namespace

double norm2sq(std::span<const cplx> a) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const int nt = parallel::thread_count();
    std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const auto [lo, hi] = chunk_of(n, nt, t);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i)
            s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
        partial[t] = s;
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const int nt = parallel::thread_count();
    std::vector<cplx> partial(nt, cplx{0.0, 0.0});
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const auto [lo, hi] = chunk_of(n, nt, t);
        cplx s{0.0, 0.0};
        for (std::int64_t i = lo; i < hi; ++i) s += std::conj(a[i]) * b[i];
        partial[t] = s;
    }
    cplx s{0.0, 0.0};
    for (const cplx& p : partial) s += p;
    return s;
}

double max_abs(std::span<const cplx> a) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const int nt = parallel::thread_count();
    std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const auto [lo, hi] = chunk_of(n, nt, t);
        double m = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) m = std::max(m, std::abs(a[i]));
        partial[t] = m;
    }
    double m = 0.0;
    for (double p : partial) m = std::max(m, p);
    return m;
}

void five_point(std::span<const cplx> u, int nx, int ny, double h2, std::span<cplx> out) {
    const double inv = 1.0 / h2;
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count())
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const size_t k = static_cast<size_t>(i) * ny + j;
            cplx s = 4.0 * u[k];
            if (i > 0) s -= u[k - ny];
            if (i < nx - 1) s -= u[k + ny];
            if (j > 0) s -= u[k - 1];
            if (j < ny - 1) s -= u[k + 1];
            out[k] = s * inv;
        }
    }
}

}  // namespace par

#define BP_DISPATCH(fn, size_expr, ...)                    \
    do {                                                   \
        if (parallel::use_parallel(size_expr))             \
            return par::fn(__VA_ARGS__);                   \
        return serial::fn(__VA_ARGS__);                    \
    } while (0)

void mul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    BP_DISPATCH(mul, static_cast<std::int64_t>(a.size()), a, b, out);
}
void mul_real(std::span<const cplx> a, std::span<const double> b, std::span<cplx> out) {
    BP_DISPATCH(mul_real, static_cast<std::int64_t>(a.size()), a, b, out);
}
void scale(std::span<const cplx> a, cplx alpha, std::span<cplx> out) {
    BP_DISPATCH(scale, static_cast<std::int64_t>(a.size()), a, alpha, out);
}
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    BP_DISPATCH(axpy, static_cast<std::int64_t>(x.size()), alpha, x, y);
}
void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    BP_DISPATCH(add, static_cast<std::int64_t>(a.size()), a, b, out);
}
void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    BP_DISPATCH(sub, static_cast<std::int64_t>(a.size()), a, b, out);
}
double norm2sq(std::span<const cplx> a) {
    if (parallel::use_parallel(static_cast<std::int64_t>(a.size()))) return par::norm2sq(a);
    return serial::norm2sq(a);
}
double norm2(std::span<const cplx> a) { return std::sqrt(norm2sq(a)); }
cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    if (parallel::use_parallel(static_cast<std::int64_t>(a.size()))) return par::dotc(a, b);
    return serial::dotc(a, b);
}
double max_abs(std::span<const cplx> a) {
    if (parallel::use_parallel(static_cast<std::int64_t>(a.size()))) return par::max_abs(a);
    return serial::max_abs(a);
}
void five_point(std::span<const cplx> u, int nx, int ny, double h2, std::span<cplx> out) {
    BP_DISPATCH(five_point, static_cast<std::int64_t>(u.size()), u, nx, ny, h2, out);
}

#undef BP_DISPATCH

}  // namespace bp::kernels
