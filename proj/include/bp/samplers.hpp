#pragma once

#include <utility>

#include "bp/field.hpp"
#include "bp/grid.hpp"
#include "bp/rng.hpp"

namespace bp {

/// Gaussian random field with squared-exponential spectrum: white noise
/// shaped by exp(-l^2 |xi|^2 / 4) in Fourier space, then renormalized to
/// the requested mean and std. Periodic grids only.
RealField sample_grf(const GridSpec& grid, double correlation_length, double mean, double std,
                     RngState& rng);

/// Divergence-free velocity from a stream function: v = (d psi/dy,
/// -d psi/dx), derivatives spectral. Periodic grids only.
std::pair<RealField, RealField> stream_velocity(const RealField& psi);

/// amplitude * exp(-((x-cx)^2 + (y-cy)^2) / (2 width^2)), distances
/// wrapped on periodic grids.
RealField gaussian_bump(const GridSpec& grid, double cx, double cy, double width,
                        double amplitude);

/// Low-frequency sine-series noise on a Dirichlet-interior grid:
/// alpha * sum_{i,j=1..modes} c_ij sin(i pi x / lx) sin(j pi y / ly),
/// c_ij ~ N(0, coeff_std^2). Vanishes on the boundary by construction.
RealField sine_noise(const GridSpec& grid, int modes, double coeff_std, double alpha,
                     RngState& rng);

/// Quadratic damping ramp: 0 in the interior, rising across
/// `layer_points` cells to `strength` at the boundary, C1 at the seam.
RealField sponge_profile(const GridSpec& grid, int layer_points, double strength);

/// Piecewise-layered medium with sigmoid-blended interfaces, values in
/// [vmin, vmax]. Synthetic stand-in family for contrast/ppw sweeps.
RealField layered_medium(const GridSpec& grid, int n_layers, double vmin, double vmax,
                         double blend_width, RngState& rng);

}  // namespace bp
