#include "bp/correction.hpp"

#include <stdexcept>

#include "bp/kernels.hpp"
#include "bp/transforms.hpp"

namespace bp {

cplx optimal_scalar(const ComplexField& r, const ComplexField& w, bool* stagnated) {
    const double denom = kernels::norm2sq(w.data);
    if (stagnated) *stagnated = false;
    if (denom <= 0.0 || !std::isfinite(denom)) {
        if (stagnated) *stagnated = true;
        return cplx{0.0, 0.0};
    }
    return kernels::dotc(w.data, r.data) / denom;
}

namespace {

ComplexField apply_optimal_scalar(const OptimalScalarMap& map, const ComplexField& x,
                                  const CorrectionContext& ctx) {
    if (!ctx.problem)
        throw std::invalid_argument("OptimalScalar correction needs a problem in the context");
    const Problem& p = *ctx.problem;

    cplx gamma{0.0, 0.0};
    bool stag = false;
    if (map.metric == OptMetric::Euclidean) {
        // minimize ||r - g A x||_2 with r the unpreconditioned residual
        if (!ctx.euclid_residual)
            throw std::invalid_argument(
                "OptimalScalar(Euclidean) needs the unpreconditioned residual in the context");
        ComplexField w = p.apply_A(x);
        gamma = optimal_scalar(*ctx.euclid_residual, w, &stag);
    } else {
        // minimize ||x - g (I - G V) x||_2, x being the preconditioned residual
        ComplexField gv = p.apply_G(p.apply_V(x));
        ComplexField w = x;
        kernels::sub(w.data, gv.data, w.data);
        gamma = optimal_scalar(x, w, &stag);
    }
    ctx.stagnated = stag;
    ComplexField out(x.grid);
    kernels::scale(x.data, gamma, out.data);
    return out;
}

}  // namespace

ComplexField apply_correction(const CorrectionMap& map, const ComplexField& x,
                              const CorrectionContext& ctx) {
    return std::visit(
        [&](const auto& m) -> ComplexField {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ScalarMap>) {
                ComplexField out(x.grid);
                kernels::scale(x.data, m.gamma, out.data);
                return out;
            } else if constexpr (std::is_same_v<T, OptimalScalarMap>) {
                return apply_optimal_scalar(m, x, ctx);
            } else if constexpr (std::is_same_v<T, FourierDiagMap>) {
                if (m.m.size() != x.size())
                    throw std::invalid_argument("FourierDiag correction: shape mismatch");
                std::vector<cplx> modes = forward_transform(x, m.kind);
                kernels::mul(modes, m.m, modes);
                return inverse_transform(modes, x.grid, m.kind);
            } else {
                if (m.matrix.cols() != static_cast<Eigen::Index>(x.size()))
                    throw std::invalid_argument("DenseExact correction: shape mismatch");
                return to_field(m.matrix * to_vector(x), x.grid);
            }
        },
        map);
}

FourierDiagMap make_identity_fourier_diag(const Problem& p) {
    FourierDiagMap m;
    m.kind = p.kind();
    m.grid = p.grid();
    m.m.assign(static_cast<size_t>(p.grid().size()), cplx{1.0, 0.0});
    return m;
}

DenseExactMap make_dense_exact_inverse(const Problem& p) {
    DenseMatrix A = assemble_dense(p);
    return {A.partialPivLu().inverse(), p.grid()};
}

DenseExactMap make_dense_exact_born_inverse(const Problem& p) {
    DenseMatrix B = assemble_dense_born(p);
    return {B.partialPivLu().inverse(), p.grid()};
}

void save_map(const std::string& path, const FourierDiagMap& map) {
    save_complex_array(path, map.grid.nx, map.grid.ny, map.m);
}

FourierDiagMap load_map(const std::string& path, const Problem& p) {
    int nx = 0, ny = 0;
    std::vector<cplx> values = load_complex_array(path, nx, ny);
    if (nx != p.grid().nx || ny != p.grid().ny)
        throw std::runtime_error("load_map: map layout does not match problem grid");
    FourierDiagMap m;
    m.kind = p.kind();
    m.grid = p.grid();
    m.m = std::move(values);
    return m;
}

std::string map_kind_name(const CorrectionMap& map) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ScalarMap>) return "scalar";
            else if constexpr (std::is_same_v<T, OptimalScalarMap>)
                return m.metric == OptMetric::Euclidean ? "optimal_scalar_l2"
                                                        : "optimal_scalar_reta";
            else if constexpr (std::is_same_v<T, FourierDiagMap>) return "fourier_diag";
            else return "dense_exact";
        },
        map);
}

}  // namespace bp
