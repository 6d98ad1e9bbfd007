#pragma once

#include <vector>

#include "bp/field.hpp"
#include "bp/grid.hpp"

namespace bp {

enum class TransformKind { FFT, DST1, DCT };

/// Transform kind matching a grid's boundary condition.
TransformKind transform_for(Bc bc);

// Normalization conventions (fixed once, everything composes against
// them):
//   FFT  — forward is the unnormalized DFT, inverse carries 1/(nx*ny).
//   DST1 — forward is Y_pq = sum_ij X_ij sin(pi(i+1)(p+1)/(nx+1))
//          sin(pi(j+1)(q+1)/(ny+1)); the transform is its own inverse up
//          to the factor 2/(n+1) per dimension, which the inverse carries.
//   DCT  — forward is the unnormalized DCT-II, inverse is DCT-III with
//          1/(2n) per dimension.
// Mode layouts equal the grid layout (nx*ny, row-major); FFT frequencies
// are stored in standard non-shifted order.

/// Forward transform of a field into its mode array.
std::vector<cplx> forward_transform(const ComplexField& field, TransformKind kind);

/// Inverse transform of a mode array back to a field on `grid`.
ComplexField inverse_transform(const std::vector<cplx>& modes, const GridSpec& grid,
                               TransformKind kind);

/// Adjoint of the inverse transform (FFT and DST1 only): for the
/// conventions above this equals the forward transform scaled by the
/// inverse's normalization factor. Needed by loss gradients.
std::vector<cplx> inverse_transform_adjoint(const ComplexField& field, TransformKind kind);

/// Scale factor the inverse transform carries (product over dimensions).
double inverse_scale(const GridSpec& grid, TransformKind kind);

/// Release cached FFTW plans (optional, e.g. at shutdown).
void clear_transform_plans();

}  // namespace bp
