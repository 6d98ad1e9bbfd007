#include "bp/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bp/transforms.hpp"

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_periodic(const GridSpec& g, const char* what) {
    if (g.bc != Bc::Periodic) throw std::invalid_argument(std::string(what) + ": periodic grid required");
}
}  // namespace

RealField sample_grf(const GridSpec& grid, double correlation_length, double mean, double std,
                     RngState& rng) {
    require_periodic(grid, "sample_grf");
    if (correlation_length <= 0.0) throw std::invalid_argument("sample_grf: correlation_length must be > 0");
    if (std < 0.0) throw std::invalid_argument("sample_grf: std must be >= 0");

    RealField out(grid);
    if (std == 0.0) {
        std::fill(out.data.begin(), out.data.end(), mean);
        return out;
    }

    ComplexField noise(grid);
    for (cplx& v : noise.data) v = cplx(rng.normal(), 0.0);

    std::vector<cplx> modes = forward_transform(noise, TransformKind::FFT);
    const auto wn = wavenumbers(grid);
    const double l2 = correlation_length * correlation_length;
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            const double k2 = wn.xi_x[i] * wn.xi_x[i] + wn.xi_y[j] * wn.xi_y[j];
            modes[static_cast<size_t>(i) * grid.ny + j] *= std::exp(-0.25 * l2 * k2);
        }
    }
    ComplexField shaped = inverse_transform(modes, grid, TransformKind::FFT);

    // Renormalize the sample to the requested moments.
    double m = 0.0;
    for (const cplx& v : shaped.data) m += v.real();
    m /= static_cast<double>(shaped.size());
    double var = 0.0;
    for (const cplx& v : shaped.data) var += (v.real() - m) * (v.real() - m);
    var /= static_cast<double>(shaped.size());
    const double sd = std::sqrt(var);
    if (sd < 1e-300) {
        std::fill(out.data.begin(), out.data.end(), mean);
        return out;
    }
    for (size_t i = 0; i < out.size(); ++i)
        out.data[i] = mean + (shaped.data[i].real() - m) / sd * std;
    return out;
}

std::pair<RealField, RealField> stream_velocity(const RealField& psi) {
    require_periodic(psi.grid, "stream_velocity");
    const GridSpec& g = psi.grid;
    std::vector<cplx> modes = forward_transform(to_complex(psi), TransformKind::FFT);
    const auto wn = wavenumbers(g);

    std::vector<cplx> dx(modes.size()), dy(modes.size());
    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            const size_t k = static_cast<size_t>(i) * g.ny + j;
            dx[k] = cplx(0.0, wn.xi_x[i]) * modes[k];
            dy[k] = cplx(0.0, wn.xi_y[j]) * modes[k];
        }
    }
    ComplexField ddx = inverse_transform(dx, g, TransformKind::FFT);
    ComplexField ddy = inverse_transform(dy, g, TransformKind::FFT);
    return {real_part(ddy), [&] {
                RealField vy = real_part(ddx);
                for (double& v : vy.data) v = -v;
                return vy;
            }()};
}

RealField gaussian_bump(const GridSpec& grid, double cx, double cy, double width,
                        double amplitude) {
    if (width <= 0.0) throw std::invalid_argument("gaussian_bump: width must be > 0");
    RealField out(grid);
    const bool wrap = grid.bc == Bc::Periodic;
    for (int i = 0; i < grid.nx; ++i) {
        double dx = grid.x(i) - cx;
        if (wrap) {
            dx = std::remainder(dx, grid.lx);
        }
        for (int j = 0; j < grid.ny; ++j) {
            double dy = grid.y(j) - cy;
            if (wrap) {
                dy = std::remainder(dy, grid.ly);
            }
            out.at(i, j) = amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * width * width));
        }
    }
    return out;
}

RealField sine_noise(const GridSpec& grid, int modes, double coeff_std, double alpha,
                     RngState& rng) {
    if (grid.bc != Bc::DirichletInterior)
        throw std::invalid_argument("sine_noise: DirichletInterior grid required");
    std::vector<double> coeff(static_cast<size_t>(modes) * modes);
    for (double& c : coeff) c = coeff_std * rng.normal();

    RealField out(grid);
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix) / grid.lx;
        for (int iy = 0; iy < grid.ny; ++iy) {
            const double y = grid.y(iy) / grid.ly;
            double s = 0.0;
            for (int i = 1; i <= modes; ++i)
                for (int j = 1; j <= modes; ++j)
                    s += coeff[static_cast<size_t>(i - 1) * modes + (j - 1)] *
                         std::sin(i * kPi * x) * std::sin(j * kPi * y);
            out.at(ix, iy) = alpha * s;
        }
    }
    return out;
}

RealField sponge_profile(const GridSpec& grid, int layer_points, double strength) {
    if (strength < 0.0) throw std::invalid_argument("sponge_profile: strength must be >= 0");
    if (2 * layer_points >= std::min(grid.nx, grid.ny))
        throw std::invalid_argument("sponge_profile: layer too wide for the grid");
    RealField out(grid);
    if (layer_points == 0) return out;

    auto ramp = [layer_points](int dist) {
        if (dist >= layer_points) return 0.0;
        const double t = static_cast<double>(layer_points - dist) / layer_points;
        return t * t;
    };
    for (int i = 0; i < grid.nx; ++i) {
        const double qx = ramp(std::min(i, grid.nx - 1 - i));
        for (int j = 0; j < grid.ny; ++j) {
            const double qy = ramp(std::min(j, grid.ny - 1 - j));
            out.at(i, j) = strength * std::max(qx, qy);
        }
    }
    return out;
}

RealField layered_medium(const GridSpec& grid, int n_layers, double vmin, double vmax,
                         double blend_width, RngState& rng) {
    if (n_layers < 2) throw std::invalid_argument("layered_medium: need at least 2 layers");
    if (vmin <= 0.0 || vmax < vmin) throw std::invalid_argument("layered_medium: bad value range");

    // Layer interfaces stacked in y with mild sinusoidal curvature;
    // sigmoid blending keeps the medium smooth at blend_width scale.
    // Layer values ramp monotonically from vmin to vmax (velocity
    // increasing with depth); instances of a family differ in interface
    // geometry, not in the value profile.
    std::vector<double> depth(n_layers - 1), amp(n_layers - 1), phase(n_layers - 1);
    std::vector<double> value(n_layers);
    for (int l = 0; l + 1 < n_layers; ++l) {
        depth[l] = grid.ly * (l + 1.0 + 0.3 * (rng.uniform() - 0.5)) / n_layers;
        amp[l] = 0.08 * grid.ly * rng.uniform();
        phase[l] = 2.0 * kPi * rng.uniform();
    }
    for (int l = 0; l < n_layers; ++l)
        value[l] = vmin + (vmax - vmin) * l / (n_layers - 1.0);

    RealField out(grid);
    const double bw = std::max(blend_width, 1e-6 * grid.ly);
    for (int i = 0; i < grid.nx; ++i) {
        const double x = grid.x(i);
        for (int j = 0; j < grid.ny; ++j) {
            const double y = grid.y(j);
            double v = value[0];
            for (int l = 0; l + 1 < n_layers; ++l) {
                const double iface = depth[l] + amp[l] * std::sin(2.0 * kPi * x / grid.lx + phase[l]);
                const double s = 1.0 / (1.0 + std::exp(-(y - iface) / bw));
                v = v * (1.0 - s) + value[l + 1] * s;
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

}  // namespace bp
