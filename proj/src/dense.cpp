#include "bp/dense.hpp"

#include <stdexcept>

namespace bp {

DenseVector to_vector(const ComplexField& f) {
    DenseVector v(static_cast<Eigen::Index>(f.size()));
    for (size_t i = 0; i < f.size(); ++i) v[static_cast<Eigen::Index>(i)] = f.data[i];
    return v;
}

ComplexField to_field(const DenseVector& v, const GridSpec& grid) {
    if (v.size() != grid.size()) throw std::invalid_argument("to_field: size mismatch");
    ComplexField f(grid);
    for (Eigen::Index i = 0; i < v.size(); ++i) f.data[static_cast<size_t>(i)] = v[i];
    return f;
}

DenseMatrix assemble_dense_op(const GridSpec& grid,
                              const std::function<ComplexField(const ComplexField&)>& op) {
    const int n = grid.size();
    if (n > kDenseCap) throw std::invalid_argument("assemble_dense: exceeds dense size cap");
    DenseMatrix M(n, n);
    ComplexField e(grid);
    for (int j = 0; j < n; ++j) {
        std::fill(e.data.begin(), e.data.end(), cplx{0.0, 0.0});
        e.data[static_cast<size_t>(j)] = 1.0;
        const ComplexField col = op(e);
        for (int i = 0; i < n; ++i) M(i, j) = col.data[static_cast<size_t>(i)];
    }
    return M;
}

DenseMatrix assemble_dense(const Problem& p) {
    return assemble_dense_op(p.grid(), [&p](const ComplexField& e) { return p.apply_A(e); });
}

DenseMatrix assemble_dense_G(const Problem& p) {
    return assemble_dense_op(p.grid(), [&p](const ComplexField& e) { return p.apply_G(e); });
}

DenseMatrix assemble_dense_born(const Problem& p) {
    return assemble_dense_op(p.grid(), [&p](const ComplexField& e) {
        ComplexField gv = p.apply_G(p.apply_V(e));
        ComplexField out = e;
        for (size_t i = 0; i < out.size(); ++i) out.data[i] -= gv.data[i];
        return out;
    });
}

DenseVector dense_solve(const DenseMatrix& A, const DenseVector& b) {
    return Eigen::PartialPivLU<DenseMatrix>(A).solve(b);
}

std::pair<double, double> dense_extremal_singular_values(const DenseMatrix& M) {
    DenseMatrix H = M.adjoint() * M;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(H);
    const auto& ev = es.eigenvalues();
    const double lo = std::sqrt(std::max(0.0, ev.minCoeff()));
    const double hi = std::sqrt(std::max(0.0, ev.maxCoeff()));
    return {hi, lo};
}

}  // namespace bp
