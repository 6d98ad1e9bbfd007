#pragma once

#include <optional>
#include <string>
#include <variant>

#include "bp/dense.hpp"
#include "bp/problem.hpp"

namespace bp {

/// Residual metric an optimal-scalar correction minimizes.
enum class OptMetric { Euclidean, REta };

/// Fixed complex relaxation gamma (classical CBS coefficient).
struct ScalarMap {
    cplx gamma{1.0, 0.0};
};

/// Per-step closed-form least-squares scalar in the chosen metric.
struct OptimalScalarMap {
    OptMetric metric = OptMetric::Euclidean;
};

/// Learnable diagonal multiplier in the problem's transform basis; the
/// desk-scale stand-in for a neural correction operator. m == 1 is the
/// identity (plain preconditioned Richardson).
struct FourierDiagMap {
    std::vector<cplx> m;
    TransformKind kind = TransformKind::FFT;
    GridSpec grid;
};

/// Dense exact inverse (oracle), at most kDenseCap unknowns.
struct DenseExactMap {
    DenseMatrix matrix;
    GridSpec grid;
};

using CorrectionMap = std::variant<ScalarMap, OptimalScalarMap, FourierDiagMap, DenseExactMap>;

/// Per-step data an OptimalScalar correction needs: the problem (for
/// operator actions) and, for the Euclidean metric, the current
/// unpreconditioned residual f - A u.
struct CorrectionContext {
    const Problem* problem = nullptr;
    const ComplexField* euclid_residual = nullptr;
    /// Set when the last optimal-scalar evaluation hit a zero
    /// denominator (stagnation).
    mutable bool stagnated = false;
};

/// Closed-form least-squares scalar: argmin_g ||r - g*w||_2 =
/// <w, r> / <w, w>. Returns 0 and sets *stagnated on zero denominator.
cplx optimal_scalar(const ComplexField& r, const ComplexField& w, bool* stagnated = nullptr);

/// Apply the correction map to x. Every variant is linear in x.
ComplexField apply_correction(const CorrectionMap& map, const ComplexField& x,
                              const CorrectionContext& ctx);

FourierDiagMap make_identity_fourier_diag(const Problem& p);
DenseExactMap make_dense_exact_inverse(const Problem& p);       // A^{-1}
DenseExactMap make_dense_exact_born_inverse(const Problem& p);  // (I - G V)^{-1}

void save_map(const std::string& path, const FourierDiagMap& map);
FourierDiagMap load_map(const std::string& path, const Problem& p);

std::string map_kind_name(const CorrectionMap& map);

}  // namespace bp
