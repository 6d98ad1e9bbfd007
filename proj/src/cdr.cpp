#include "bp/cdr.hpp"

#include <cmath>
#include <stdexcept>

#include "bp/kernels.hpp"
#include "bp/samplers.hpp"
#include "bp/transforms.hpp"

namespace bp {

namespace {

SpectralSymbol cdr_symbol(const GridSpec& grid, double kappa0, double v0x, double v0y,
                          double sigma0) {
    SpectralSymbol s;
    s.kind = TransformKind::FFT;
    s.grid = grid;
    s.values.resize(static_cast<size_t>(grid.size()));
    const auto wn = wavenumbers(grid);
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j)
            s.values[static_cast<size_t>(i) * grid.ny + j] =
                cplx(kappa0 * (wn.xi_x[i] * wn.xi_x[i] + wn.xi_y[j] * wn.xi_y[j]) + sigma0,
                     v0x * wn.xi_x[i] + v0y * wn.xi_y[j]);
    return s;
}

RealField delta(const RealField& f, double background) {
    RealField d = f;
    for (double& v : d.data) v -= background;
    return d;
}

double field_mean(const RealField& f) {
    double s = 0.0;
    for (double v : f.data) s += v;
    return s / static_cast<double>(f.size());
}

}  // namespace

CdrProblem::CdrProblem(GridSpec grid, RealField kappa, RealField vx, RealField vy,
                       RealField sigma, double kappa0, double v0x, double v0y, double sigma0,
                       bool dealias)
    : Problem(grid, cdr_symbol(grid, kappa0, v0x, v0y, sigma0)),
      dkappa_(delta(kappa, kappa0)),
      dvx_(delta(vx, v0x)),
      dvy_(delta(vy, v0y)),
      dsigma_(delta(sigma, sigma0)),
      kappa0_(kappa0),
      v0x_(v0x),
      v0y_(v0y),
      sigma0_(sigma0),
      dealias_(dealias),
      wn_(wavenumbers(grid)) {
    if (grid.bc != Bc::Periodic) throw std::invalid_argument("CdrProblem: periodic grid required");
    if (sigma0 <= 0.0 && kappa0 <= 0.0)
        throw std::invalid_argument("CdrProblem: need sigma0 > 0 (zero mode) or kappa0 > 0");
}

ComplexField CdrProblem::dealias_23(ComplexField u) const {
    std::vector<cplx> modes = forward_transform(u, TransformKind::FFT);
    const int cx = grid_.nx / 3, cy = grid_.ny / 3;
    for (int i = 0; i < grid_.nx; ++i) {
        const int mi = (i < (grid_.nx + 1) / 2) ? i : grid_.nx - i;
        for (int j = 0; j < grid_.ny; ++j) {
            const int mj = (j < (grid_.ny + 1) / 2) ? j : grid_.ny - j;
            if (mi > cx || mj > cy) modes[static_cast<size_t>(i) * grid_.ny + j] = 0.0;
        }
    }
    return inverse_transform(modes, grid_, TransformKind::FFT);
}

ComplexField CdrProblem::spectral_dx(const ComplexField& u) const {
    std::vector<cplx> modes = forward_transform(u, TransformKind::FFT);
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j)
            modes[static_cast<size_t>(i) * grid_.ny + j] *= cplx(0.0, wn_.xi_x[i]);
    return inverse_transform(modes, grid_, TransformKind::FFT);
}

ComplexField CdrProblem::spectral_dy(const ComplexField& u) const {
    std::vector<cplx> modes = forward_transform(u, TransformKind::FFT);
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j)
            modes[static_cast<size_t>(i) * grid_.ny + j] *= cplx(0.0, wn_.xi_y[j]);
    return inverse_transform(modes, grid_, TransformKind::FFT);
}

ComplexField CdrProblem::apply_V(const ComplexField& u) const {
    check_grid(u);
    ComplexField filtered;
    const ComplexField& uin = dealias_ ? (filtered = dealias_23(u)) : u;

    std::vector<cplx> modes = forward_transform(uin, TransformKind::FFT);
    std::vector<cplx> mx(modes.size()), my(modes.size());
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j) {
            const size_t k = static_cast<size_t>(i) * grid_.ny + j;
            mx[k] = cplx(0.0, wn_.xi_x[i]) * modes[k];
            my[k] = cplx(0.0, wn_.xi_y[j]) * modes[k];
        }
    ComplexField ux = inverse_transform(mx, grid_, TransformKind::FFT);
    ComplexField uy = inverse_transform(my, grid_, TransformKind::FFT);

    ComplexField w1(grid_), w2(grid_);
    kernels::mul_real(ux.data, dkappa_.data, w1.data);
    kernels::mul_real(uy.data, dkappa_.data, w2.data);
    if (dealias_) {
        w1 = dealias_23(std::move(w1));
        w2 = dealias_23(std::move(w2));
    }

    // div(dkappa grad u) with a single combined inverse transform
    std::vector<cplx> m1 = forward_transform(w1, TransformKind::FFT);
    std::vector<cplx> m2 = forward_transform(w2, TransformKind::FFT);
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j) {
            const size_t k = static_cast<size_t>(i) * grid_.ny + j;
            m1[k] = cplx(0.0, wn_.xi_x[i]) * m1[k] + cplx(0.0, wn_.xi_y[j]) * m2[k];
        }
    ComplexField out = inverse_transform(m1, grid_, TransformKind::FFT);

    ComplexField conv(grid_);
    for (size_t k = 0; k < conv.size(); ++k)
        conv.data[k] = dvx_.data[k] * ux.data[k] + dvy_.data[k] * uy.data[k];
    ComplexField su(grid_);
    kernels::mul_real(uin.data, dsigma_.data, su.data);
    if (dealias_) {
        conv = dealias_23(std::move(conv));
        su = dealias_23(std::move(su));
    }

    for (size_t k = 0; k < out.size(); ++k) out.data[k] -= conv.data[k] + su.data[k];
    return out;
}

ComplexField CdrProblem::apply_V_adjoint(const ComplexField& u) const {
    check_grid(u);
    ComplexField filtered;
    const ComplexField& uin = dealias_ ? (filtered = dealias_23(u)) : u;

    std::vector<cplx> modes = forward_transform(uin, TransformKind::FFT);
    std::vector<cplx> mx(modes.size()), my(modes.size());
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j) {
            const size_t k = static_cast<size_t>(i) * grid_.ny + j;
            mx[k] = cplx(0.0, wn_.xi_x[i]) * modes[k];
            my[k] = cplx(0.0, wn_.xi_y[j]) * modes[k];
        }
    ComplexField ux = inverse_transform(mx, grid_, TransformKind::FFT);
    ComplexField uy = inverse_transform(my, grid_, TransformKind::FFT);

    // div(dkappa grad u) + div(dv u): both land in one combined inverse.
    ComplexField w1(grid_), w2(grid_);
    for (size_t k = 0; k < w1.size(); ++k) {
        w1.data[k] = dkappa_.data[k] * ux.data[k] + dvx_.data[k] * uin.data[k];
        w2.data[k] = dkappa_.data[k] * uy.data[k] + dvy_.data[k] * uin.data[k];
    }
    if (dealias_) {
        w1 = dealias_23(std::move(w1));
        w2 = dealias_23(std::move(w2));
    }
    std::vector<cplx> m1 = forward_transform(w1, TransformKind::FFT);
    std::vector<cplx> m2 = forward_transform(w2, TransformKind::FFT);
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j) {
            const size_t k = static_cast<size_t>(i) * grid_.ny + j;
            m1[k] = cplx(0.0, wn_.xi_x[i]) * m1[k] + cplx(0.0, wn_.xi_y[j]) * m2[k];
        }
    ComplexField out = inverse_transform(m1, grid_, TransformKind::FFT);

    ComplexField su(grid_);
    kernels::mul_real(uin.data, dsigma_.data, su.data);
    if (dealias_) su = dealias_23(std::move(su));
    for (size_t k = 0; k < out.size(); ++k) out.data[k] -= su.data[k];
    return out;
}

ComplexField CdrProblem::apply_A(const ComplexField& u) const {
    check_grid(u);
    ComplexField l0 = apply_Lref(u);
    ComplexField v = apply_V(u);
    kernels::sub(l0.data, v.data, l0.data);
    return l0;
}

namespace {
RealField undelta(const RealField& d, double background) {
    RealField f = d;
    for (double& v : f.data) v += background;
    return f;
}
}  // namespace

RealField CdrProblem::kappa_field() const { return undelta(dkappa_, kappa0_); }
RealField CdrProblem::vx_field() const { return undelta(dvx_, v0x_); }
RealField CdrProblem::vy_field() const { return undelta(dvy_, v0y_); }
RealField CdrProblem::sigma_field() const { return undelta(dsigma_, sigma0_); }

std::map<std::string, std::string> CdrProblem::metadata() const {
    auto m = Problem::metadata();
    m["kappa0"] = std::to_string(kappa0_);
    m["sigma0"] = std::to_string(sigma0_);
    m["v0x"] = std::to_string(v0x_);
    m["v0y"] = std::to_string(v0y_);
    return m;
}

std::shared_ptr<CdrProblem> make_cdr(const GridSpec& grid, const RealField& kappa,
                                     const RealField& vx, const RealField& vy,
                                     const RealField& sigma, const CdrOptions& opts) {
    const double kappa0 = std::isnan(opts.kappa0) ? field_mean(kappa) : opts.kappa0;
    const double sigma0 = std::isnan(opts.sigma0) ? field_mean(sigma) : opts.sigma0;
    return std::make_shared<CdrProblem>(grid, kappa, vx, vy, sigma, kappa0, field_mean(vx),
                                        field_mean(vy), sigma0, opts.dealias);
}

std::shared_ptr<CdrProblem> make_random_cdr(int n, RngState& rng, const CdrOptions& opts) {
    const GridSpec grid = make_grid(n, n, 1.0, 1.0, Bc::Periodic);

    RngState rk = rng.split("kappa"), rp = rng.split("psi"), rs = rng.split("sigma");
    RealField kappa = sample_grf(grid, 0.2, 1.0, 0.15, rk);
    for (double& v : kappa.data) v = std::max(v, 0.05);

    RealField psi = sample_grf(grid, 0.25, 0.0, 1.0, rp);
    auto [vx, vy] = stream_velocity(psi);
    double vmax = 0.0;
    for (size_t i = 0; i < vx.size(); ++i)
        vmax = std::max(vmax, std::hypot(vx.data[i], vy.data[i]));
    const double vscale = vmax > 0.0 ? 2.0 / vmax : 0.0;
    for (double& v : vx.data) v *= vscale;
    for (double& v : vy.data) v *= vscale;

    RealField sigma = sample_grf(grid, 0.2, 4.0, 0.5, rs);
    for (double& v : sigma.data) v = std::max(v, 0.1);

    return make_cdr(grid, kappa, vx, vy, sigma, opts);
}

}  // namespace bp
