#pragma once

#include <complex>
#include <span>

#include "bp/parallel.hpp"

namespace bp::kernels {

using cplx = std::complex<double>;

// Serial reference implementations. These are the ground truth the
// OpenMP variants are tested against, and the baseline in bench_kernels.
namespace serial {
void mul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void mul_real(std::span<const cplx> a, std::span<const double> b, std::span<cplx> out);
void scale(std::span<const cplx> a, cplx alpha, std::span<cplx> out);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);           // y += alpha*x
void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
double norm2sq(std::span<const cplx> a);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);                 // sum conj(a)*b
double max_abs(std::span<const cplx> a);
/// Five-point stencil with zero halo on an nx*ny interior block:
/// out = (4u - u_W - u_E - u_S - u_N) / h^2.
void five_point(std::span<const cplx> u, int nx, int ny, double h2, std::span<cplx> out);
}  // namespace serial

// OpenMP implementations. Reductions accumulate fixed per-thread
// partials combined in thread order, so results are reproducible for a
// fixed thread count.
namespace par {
void mul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void mul_real(std::span<const cplx> a, std::span<const double> b, std::span<cplx> out);
void scale(std::span<const cplx> a, cplx alpha, std::span<cplx> out);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
double norm2sq(std::span<const cplx> a);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
double max_abs(std::span<const cplx> a);
void five_point(std::span<const cplx> u, int nx, int ny, double h2, std::span<cplx> out);
}  // namespace par

// Dispatching entry points used throughout the library.
void mul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void mul_real(std::span<const cplx> a, std::span<const double> b, std::span<cplx> out);
void scale(std::span<const cplx> a, cplx alpha, std::span<cplx> out);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
double norm2sq(std::span<const cplx> a);
double norm2(std::span<const cplx> a);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
double max_abs(std::span<const cplx> a);
void five_point(std::span<const cplx> u, int nx, int ny, double h2, std::span<cplx> out);

}  // namespace bp::kernels
