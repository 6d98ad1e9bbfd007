#include "bp/field.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace bp {

ComplexField to_complex(const RealField& f) {
    ComplexField out(f.grid);
    for (size_t i = 0; i < f.size(); ++i) out.data[i] = cplx(f.data[i], 0.0);
    return out;
}

RealField real_part(const ComplexField& f) {
    RealField out(f.grid);
    for (size_t i = 0; i < f.size(); ++i) out.data[i] = f.data[i].real();
    return out;
}

bool all_finite(const ComplexField& f) {
    for (const cplx& v : f.data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool all_finite(const RealField& f) {
    for (double v : f.data)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {

constexpr char kMagic[4] = {'B', 'P', 'F', 'D'};
constexpr uint32_t kDtypeReal64 = 0;
constexpr uint32_t kDtypeComplex128 = 1;

void write_header(std::ofstream& out, uint32_t nx, uint32_t ny, uint32_t dtype) {
    out.write(kMagic, 4);
    out.write(reinterpret_cast<const char*>(&nx), 4);
    out.write(reinterpret_cast<const char*>(&ny), 4);
    out.write(reinterpret_cast<const char*>(&dtype), 4);
}

void read_header(std::ifstream& in, uint32_t& nx, uint32_t& ny, uint32_t& dtype) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("field file: bad magic");
    in.read(reinterpret_cast<char*>(&nx), 4);
    in.read(reinterpret_cast<char*>(&ny), 4);
    in.read(reinterpret_cast<char*>(&dtype), 4);
    if (!in) throw std::runtime_error("field file: truncated header");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

}  // namespace

void save_field(const std::string& path, const RealField& f) {
    auto out = open_out(path);
    write_header(out, static_cast<uint32_t>(f.grid.nx), static_cast<uint32_t>(f.grid.ny),
                 kDtypeReal64);
    out.write(reinterpret_cast<const char*>(f.data.data()),
              static_cast<std::streamsize>(f.data.size() * sizeof(double)));
}

void save_field(const std::string& path, const ComplexField& f) {
    auto out = open_out(path);
    write_header(out, static_cast<uint32_t>(f.grid.nx), static_cast<uint32_t>(f.grid.ny),
                 kDtypeComplex128);
    out.write(reinterpret_cast<const char*>(f.data.data()),
              static_cast<std::streamsize>(f.data.size() * sizeof(cplx)));
}

RealField load_real_field(const std::string& path, Bc bc, double lx, double ly) {
    auto in = open_in(path);
    uint32_t nx, ny, dtype;
    read_header(in, nx, ny, dtype);
    if (dtype != kDtypeReal64) throw std::runtime_error("field file: expected real64");
    RealField f(make_grid(static_cast<int>(nx), static_cast<int>(ny), lx, ly, bc));
    in.read(reinterpret_cast<char*>(f.data.data()),
            static_cast<std::streamsize>(f.data.size() * sizeof(double)));
    if (!in) throw std::runtime_error("field file: truncated payload");
    return f;
}

ComplexField load_complex_field(const std::string& path, Bc bc, double lx, double ly) {
    auto in = open_in(path);
    uint32_t nx, ny, dtype;
    read_header(in, nx, ny, dtype);
    if (dtype != kDtypeComplex128) throw std::runtime_error("field file: expected complex128");
    ComplexField f(make_grid(static_cast<int>(nx), static_cast<int>(ny), lx, ly, bc));
    in.read(reinterpret_cast<char*>(f.data.data()),
            static_cast<std::streamsize>(f.data.size() * sizeof(cplx)));
    if (!in) throw std::runtime_error("field file: truncated payload");
    return f;
}

void save_complex_array(const std::string& path, int nx, int ny, std::span<const cplx> values) {
    if (values.size() != static_cast<size_t>(nx) * static_cast<size_t>(ny))
        throw std::invalid_argument("save_complex_array: size mismatch");
    auto out = open_out(path);
    write_header(out, static_cast<uint32_t>(nx), static_cast<uint32_t>(ny), kDtypeComplex128);
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(cplx)));
}

std::vector<cplx> load_complex_array(const std::string& path, int& nx, int& ny) {
    auto in = open_in(path);
    uint32_t unx, uny, dtype;
    read_header(in, unx, uny, dtype);
    if (dtype != kDtypeComplex128) throw std::runtime_error("field file: expected complex128");
    nx = static_cast<int>(unx);
    ny = static_cast<int>(uny);
    std::vector<cplx> v(static_cast<size_t>(unx) * uny);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(cplx)));
    if (!in) throw std::runtime_error("field file: truncated payload");
    return v;
}

namespace {
void write_csv_header(std::ofstream& out, bool complex_vals) {
    out << (complex_vals ? "ix,iy,re,im\n" : "ix,iy,value\n");
}
}  // namespace

void export_csv(const std::string& path, const ComplexField& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    write_csv_header(out, true);
    for (int i = 0; i < f.grid.nx; ++i)
        for (int j = 0; j < f.grid.ny; ++j)
            out << i << ',' << j << ',' << f.at(i, j).real() << ',' << f.at(i, j).imag() << '\n';
}

void export_csv(const std::string& path, const RealField& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    write_csv_header(out, false);
    for (int i = 0; i < f.grid.nx; ++i)
        for (int j = 0; j < f.grid.ny; ++j) out << i << ',' << j << ',' << f.at(i, j) << '\n';
}

}  // namespace bp
