#include "bp/transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "bp/kernels.hpp"

namespace bp {

TransformKind transform_for(Bc bc) {
    switch (bc) {
        case Bc::Periodic: return TransformKind::FFT;
        case Bc::DirichletInterior: return TransformKind::DST1;
        case Bc::Neumann: return TransformKind::DCT;
    }
    throw std::invalid_argument("unknown bc");
}

namespace {

// FFTW planning is not thread-safe; execution with the new-array
// interface is. Plans are created with FFTW_UNALIGNED so they accept any
// caller buffer.
std::mutex g_plan_mutex;

enum class PlanOp { FwdC2C, InvC2C, Dst1, Dct2, Dct3 };

using PlanKey = std::tuple<int, int, PlanOp>;

std::map<PlanKey, fftw_plan>& plan_cache() {
    static std::map<PlanKey, fftw_plan> cache;
    return cache;
}

fftw_plan get_plan(int nx, int ny, PlanOp op) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    const PlanKey key{nx, ny, op};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    fftw_plan plan = nullptr;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (op == PlanOp::FwdC2C || op == PlanOp::InvC2C) {
        std::vector<fftw_complex> buf(static_cast<size_t>(nx) * ny);
        const int sign = (op == PlanOp::FwdC2C) ? FFTW_FORWARD : FFTW_BACKWARD;
        plan = fftw_plan_dft_2d(nx, ny, buf.data(), buf.data(), sign, flags);
    } else {
        std::vector<double> buf(static_cast<size_t>(nx) * ny);
        fftw_r2r_kind kind{};
        switch (op) {
            case PlanOp::Dst1: kind = FFTW_RODFT00; break;
            case PlanOp::Dct2: kind = FFTW_REDFT10; break;
            case PlanOp::Dct3: kind = FFTW_REDFT01; break;
            default: break;
        }
        plan = fftw_plan_r2r_2d(nx, ny, buf.data(), buf.data(), kind, kind, flags);
    }
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    cache.emplace(key, plan);
    return plan;
}

void exec_c2c(int nx, int ny, PlanOp op, const cplx* in, cplx* out) {
    fftw_plan plan = get_plan(nx, ny, op);
    // in is not modified for out-of-place c2c transforms
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

// r2r transform of a complex array: real and imaginary parts transform
// independently.
void exec_r2r_complex(int nx, int ny, PlanOp op, const cplx* in, cplx* out) {
    const size_t n = static_cast<size_t>(nx) * ny;
    std::vector<double> re(n), im(n);
    for (size_t i = 0; i < n; ++i) {
        re[i] = in[i].real();
        im[i] = in[i].imag();
    }
    fftw_plan plan = get_plan(nx, ny, op);
    fftw_execute_r2r(plan, re.data(), re.data());
    fftw_execute_r2r(plan, im.data(), im.data());
    for (size_t i = 0; i < n; ++i) out[i] = cplx(re[i], im[i]);
}

void check_kind(const GridSpec& grid, TransformKind kind) {
    if (kind == TransformKind::DST1 && grid.bc == Bc::Periodic)
        throw std::invalid_argument("DST-I transform on a periodic grid");
}

}  // namespace

double inverse_scale(const GridSpec& grid, TransformKind kind) {
    switch (kind) {
        case TransformKind::FFT: return 1.0 / (static_cast<double>(grid.nx) * grid.ny);
        case TransformKind::DST1: return 4.0 / (static_cast<double>(grid.nx + 1) * (grid.ny + 1));
        case TransformKind::DCT: return 1.0 / (4.0 * static_cast<double>(grid.nx) * grid.ny);
    }
    throw std::invalid_argument("unknown transform kind");
}

std::vector<cplx> forward_transform(const ComplexField& field, TransformKind kind) {
    const GridSpec& g = field.grid;
    check_kind(g, kind);
    std::vector<cplx> out(field.size());
    switch (kind) {
        case TransformKind::FFT:
            exec_c2c(g.nx, g.ny, PlanOp::FwdC2C, field.data.data(), out.data());
            break;
        case TransformKind::DST1: {
            // FFTW RODFT00 carries a factor 2 per dimension relative to
            // our plain sine-sum convention.
            exec_r2r_complex(g.nx, g.ny, PlanOp::Dst1, field.data.data(), out.data());
            kernels::scale(out, cplx{0.25, 0.0}, out);
            break;
        }
        case TransformKind::DCT:
            exec_r2r_complex(g.nx, g.ny, PlanOp::Dct2, field.data.data(), out.data());
            break;
    }
    return out;
}

ComplexField inverse_transform(const std::vector<cplx>& modes, const GridSpec& grid,
                               TransformKind kind) {
    check_kind(grid, kind);
    if (modes.size() != static_cast<size_t>(grid.size()))
        throw std::invalid_argument("mode array does not match grid layout");
    ComplexField out(grid);
    const double s = inverse_scale(grid, kind);
    switch (kind) {
        case TransformKind::FFT:
            exec_c2c(grid.nx, grid.ny, PlanOp::InvC2C, modes.data(), out.data.data());
            break;
        case TransformKind::DST1:
            exec_r2r_complex(grid.nx, grid.ny, PlanOp::Dst1, modes.data(), out.data.data());
            kernels::scale(out.data, cplx{0.25, 0.0}, out.data);
            break;
        case TransformKind::DCT:
            exec_r2r_complex(grid.nx, grid.ny, PlanOp::Dct3, modes.data(), out.data.data());
            break;
    }
    kernels::scale(out.data, cplx{s, 0.0}, out.data);
    return out;
}

std::vector<cplx> inverse_transform_adjoint(const ComplexField& field, TransformKind kind) {
    if (kind == TransformKind::DCT)
        throw std::invalid_argument("inverse_transform_adjoint: DCT not supported");
    std::vector<cplx> out = forward_transform(field, kind);
    kernels::scale(out, cplx{inverse_scale(field.grid, kind), 0.0}, out);
    return out;
}

void clear_transform_plans() {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    for (auto& [key, plan] : plan_cache()) fftw_destroy_plan(plan);
    plan_cache().clear();
}

}  // namespace bp
