#include "bp/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "bp/kernels.hpp"

namespace bp {

namespace {

void check_layout(const ComplexField& field, const SpectralSymbol& symbol) {
    if (field.size() != symbol.size())
        throw std::invalid_argument("apply_symbol: field/symbol layout mismatch");
    if (transform_for(field.grid.bc) != symbol.kind)
        throw std::invalid_argument("apply_symbol: symbol kind does not match grid bc");
}

ComplexField apply_impl(const ComplexField& field, const SpectralSymbol& symbol, SymbolOp op,
                        bool conjugate) {
    check_layout(field, symbol);
    std::vector<cplx> modes = forward_transform(field, symbol.kind);
    if (op == SymbolOp::Divide) {
        double mn = std::abs(symbol.values[0]), mx = mn;
        for (const cplx& v : symbol.values) {
            const double a = std::abs(v);
            mn = std::min(mn, a);
            mx = std::max(mx, a);
        }
        if (mn < kSymbolDivGuard * mx)
            throw std::runtime_error("apply_symbol: near-zero symbol entry under division");
        for (size_t i = 0; i < modes.size(); ++i)
            modes[i] /= conjugate ? std::conj(symbol.values[i]) : symbol.values[i];
    } else {
        for (size_t i = 0; i < modes.size(); ++i)
            modes[i] *= conjugate ? std::conj(symbol.values[i]) : symbol.values[i];
    }
    return inverse_transform(modes, field.grid, symbol.kind);
}

}  // namespace

ComplexField apply_symbol(const ComplexField& field, const SpectralSymbol& symbol, SymbolOp op) {
    return apply_impl(field, symbol, op, false);
}

ComplexField apply_symbol_adjoint(const ComplexField& field, const SpectralSymbol& symbol,
                                  SymbolOp op) {
    return apply_impl(field, symbol, op, true);
}

SpectralSymbol laplacian_symbol(const GridSpec& grid) {
    validate(grid);
    SpectralSymbol s;
    s.kind = transform_for(grid.bc);
    s.grid = grid;
    s.values.resize(static_cast<size_t>(grid.size()));

    const double pi = 3.14159265358979323846;
    switch (grid.bc) {
        case Bc::Periodic: {
            const auto wn = wavenumbers(grid);
            for (int i = 0; i < grid.nx; ++i)
                for (int j = 0; j < grid.ny; ++j)
                    s.values[static_cast<size_t>(i) * grid.ny + j] =
                        wn.xi_x[i] * wn.xi_x[i] + wn.xi_y[j] * wn.xi_y[j];
            break;
        }
        case Bc::DirichletInterior: {
            const double ax = 4.0 / (grid.hx() * grid.hx());
            const double ay = 4.0 / (grid.hy() * grid.hy());
            for (int p = 0; p < grid.nx; ++p) {
                const double sx = std::sin((p + 1) * pi / (2.0 * (grid.nx + 1)));
                for (int q = 0; q < grid.ny; ++q) {
                    const double sy = std::sin((q + 1) * pi / (2.0 * (grid.ny + 1)));
                    s.values[static_cast<size_t>(p) * grid.ny + q] = ax * sx * sx + ay * sy * sy;
                }
            }
            break;
        }
        case Bc::Neumann: {
            const double ax = 4.0 / (grid.hx() * grid.hx());
            const double ay = 4.0 / (grid.hy() * grid.hy());
            for (int p = 0; p < grid.nx; ++p) {
                const double sx = std::sin(p * pi / (2.0 * grid.nx));
                for (int q = 0; q < grid.ny; ++q) {
                    const double sy = std::sin(q * pi / (2.0 * grid.ny));
                    s.values[static_cast<size_t>(p) * grid.ny + q] = ax * sx * sx + ay * sy * sy;
                }
            }
            break;
        }
    }
    return s;
}

SpectralSymbol shift_symbol(SpectralSymbol s, cplx c) {
    for (cplx& v : s.values) v += c;
    return s;
}

void check_invertible(const SpectralSymbol& s) {
    double mn = std::abs(s.values[0]), mx = mn;
    for (const cplx& v : s.values) {
        const double a = std::abs(v);
        mn = std::min(mn, a);
        mx = std::max(mx, a);
    }
    if (mn < kSymbolDivGuard * mx)
        throw std::runtime_error("symbol has a (near-)zero entry; reference operator not invertible");
}

}  // namespace bp
