#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bp {

/// Boundary condition / transform family of a uniform 2-D grid.
enum class Bc { Periodic, DirichletInterior, Neumann };

/// Uniform 2-D grid. For DirichletInterior the nx*ny points are the
/// interior nodes of an (nx+1)x(ny+1)-cell box, h = lx/(nx+1); for
/// Periodic and Neumann h = lx/nx (Neumann points sit at cell centers).
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double lx = 1.0;
    double ly = 1.0;
    Bc bc = Bc::Periodic;

    int size() const { return nx * ny; }
    double hx() const { return bc == Bc::DirichletInterior ? lx / (nx + 1) : lx / nx; }
    double hy() const { return bc == Bc::DirichletInterior ? ly / (ny + 1) : ly / ny; }

    /// Physical x-coordinate of grid index ix (column-independent).
    double x(int ix) const {
        switch (bc) {
            case Bc::DirichletInterior: return (ix + 1) * hx();
            case Bc::Neumann: return (ix + 0.5) * hx();
            default: return ix * hx();
        }
    }
    double y(int iy) const {
        switch (bc) {
            case Bc::DirichletInterior: return (iy + 1) * hy();
            case Bc::Neumann: return (iy + 0.5) * hy();
            default: return iy * hy();
        }
    }

    bool operator==(const GridSpec&) const = default;
};

inline void validate(const GridSpec& g) {
    // >= 2 so that the tiny Dirichlet grids used by the dense
    // eigen-decomposition cross-checks (N = 3) stay constructible.
    if (g.nx < 2 || g.ny < 2) throw std::invalid_argument("GridSpec: nx,ny must be >= 2");
    if (g.lx <= 0.0 || g.ly <= 0.0) throw std::invalid_argument("GridSpec: lx,ly must be > 0");
}

inline GridSpec make_grid(int nx, int ny, double lx, double ly, Bc bc) {
    GridSpec g{nx, ny, lx, ly, bc};
    validate(g);
    return g;
}

/// Per-mode physical wavenumbers, one array per direction.
/// Periodic: xi_n = 2*pi*n/L with n in standard FFT order
/// {0,...,N/2-1,-N/2,...,-1}. DirichletInterior: xi_p = p*pi/L, p = 1..N.
/// Neumann: xi_k = k*pi/L, k = 0..N-1.
struct WavenumberGrid {
    std::vector<double> xi_x;
    std::vector<double> xi_y;
};

inline std::vector<double> wavenumbers_1d(int n, double len, Bc bc) {
    std::vector<double> xi(n);
    const double pi = 3.14159265358979323846;
    switch (bc) {
        case Bc::Periodic:
            for (int i = 0; i < n; ++i) {
                int m = (i < (n + 1) / 2) ? i : i - n;
                xi[i] = 2.0 * pi * m / len;
            }
            break;
        case Bc::DirichletInterior:
            for (int i = 0; i < n; ++i) xi[i] = (i + 1) * pi / len;
            break;
        case Bc::Neumann:
            for (int i = 0; i < n; ++i) xi[i] = i * pi / len;
            break;
    }
    return xi;
}

inline WavenumberGrid wavenumbers(const GridSpec& g) {
    return {wavenumbers_1d(g.nx, g.lx, g.bc), wavenumbers_1d(g.ny, g.ly, g.bc)};
}

inline std::string bc_name(Bc bc) {
    switch (bc) {
        case Bc::Periodic: return "periodic";
        case Bc::DirichletInterior: return "dirichlet";
        case Bc::Neumann: return "neumann";
    }
    return "?";
}

}  // namespace bp
