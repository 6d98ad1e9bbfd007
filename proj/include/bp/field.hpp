#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bp/grid.hpp"

namespace bp {

using cplx = std::complex<double>;

/// Complex scalar field on a uniform grid, row-major with x as the slow
/// index: data[ix*ny + iy].
struct ComplexField {
    GridSpec grid;
    std::vector<cplx> data;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g) : grid(g), data(static_cast<size_t>(g.size())) {}

    cplx& at(int ix, int iy) { return data[static_cast<size_t>(ix) * grid.ny + iy]; }
    const cplx& at(int ix, int iy) const { return data[static_cast<size_t>(ix) * grid.ny + iy]; }
    size_t size() const { return data.size(); }
};

struct RealField {
    GridSpec grid;
    std::vector<double> data;

    RealField() = default;
    explicit RealField(const GridSpec& g) : grid(g), data(static_cast<size_t>(g.size())) {}

    double& at(int ix, int iy) { return data[static_cast<size_t>(ix) * grid.ny + iy]; }
    const double& at(int ix, int iy) const { return data[static_cast<size_t>(ix) * grid.ny + iy]; }
    size_t size() const { return data.size(); }
};

ComplexField to_complex(const RealField& f);
RealField real_part(const ComplexField& f);

bool all_finite(const ComplexField& f);
bool all_finite(const RealField& f);

// Flat binary format: 16-byte header (magic "BPFD", u32 nx, u32 ny,
// u32 dtype: 0 = real64, 1 = complex128) followed by row-major
// little-endian values.
void save_field(const std::string& path, const RealField& f);
void save_field(const std::string& path, const ComplexField& f);
RealField load_real_field(const std::string& path, Bc bc = Bc::Periodic, double lx = 1.0,
                          double ly = 1.0);
ComplexField load_complex_field(const std::string& path, Bc bc = Bc::Periodic, double lx = 1.0,
                                double ly = 1.0);

/// Raw complex array I/O in the same container format (used for
/// correction-map parameters, which share the field layout).
void save_complex_array(const std::string& path, int nx, int ny, std::span<const cplx> values);
std::vector<cplx> load_complex_array(const std::string& path, int& nx, int& ny);

void export_csv(const std::string& path, const ComplexField& f);
void export_csv(const std::string& path, const RealField& f);

}  // namespace bp
