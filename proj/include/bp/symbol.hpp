#pragma once

#include <vector>

#include "bp/field.hpp"
#include "bp/grid.hpp"
#include "bp/transforms.hpp"

namespace bp {

/// Per-mode complex multiplier diagonalizing a reference operator in the
/// basis of `kind`. Layout matches the transform's mode array (nx*ny).
struct SpectralSymbol {
    std::vector<cplx> values;
    TransformKind kind = TransformKind::FFT;
    GridSpec grid;

    size_t size() const { return values.size(); }
};

/// Relative floor below which division by a symbol is refused: an entry
/// this small signals an undamped resonance (misconfigured shift), not a
/// usable Green operator.
inline constexpr double kSymbolDivGuard = 1e-14;

enum class SymbolOp { Multiply, Divide };

/// out = inverse(values (*|/) forward(field)). Division realizes the
/// Green operator of the reference operator the symbol diagonalizes.
ComplexField apply_symbol(const ComplexField& field, const SpectralSymbol& symbol,
                          SymbolOp op = SymbolOp::Multiply);

/// Same with every symbol entry conjugated (adjoint of the reference
/// operator / Green operator under the fixed normalizations).
ComplexField apply_symbol_adjoint(const ComplexField& field, const SpectralSymbol& symbol,
                                  SymbolOp op);

/// Negative-Laplacian symbol for the grid's boundary condition:
/// Periodic -> |xi|^2 (spectral); DirichletInterior -> five-point FDM
/// eigenvalues (4/h^2)[sin^2(p pi/(2(n+1))) + ...]; Neumann -> DCT-II
/// five-point eigenvalues (4/h^2) sin^2(k pi/(2n)).
SpectralSymbol laplacian_symbol(const GridSpec& grid);

/// Constant shift: symbol + c on every mode.
SpectralSymbol shift_symbol(SpectralSymbol s, cplx c);

void check_invertible(const SpectralSymbol& s);

}  // namespace bp
