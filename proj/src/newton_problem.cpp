#include "bp/newton_problem.hpp"

#include <stdexcept>

#include "bp/kernels.hpp"

namespace bp {

namespace {

double spatial_mean(const RealField& f) {
    double s = 0.0;
    for (double v : f.data) s += v;
    return s / static_cast<double>(f.size());
}

SpectralSymbol jacobian_ref_symbol(const GridSpec& grid, double ubar, double alpha) {
    return shift_symbol(laplacian_symbol(grid), cplx(-2.0 * ubar + alpha, 0.0));
}

}  // namespace

NewtonJacobianProblem::NewtonJacobianProblem(GridSpec grid, RealField u_current, double alpha)
    : Problem(grid, jacobian_ref_symbol(grid, spatial_mean(u_current), alpha)),
      u_current_(std::move(u_current)),
      ubar_(spatial_mean(u_current_)),
      alpha_(alpha) {
    if (grid.bc != Bc::DirichletInterior)
        throw std::invalid_argument("NewtonJacobianProblem: DirichletInterior grid required");
    if (alpha < 0.0) throw std::invalid_argument("NewtonJacobianProblem: alpha must be >= 0");
    if (!(u_current_.grid == grid))
        throw std::invalid_argument("NewtonJacobianProblem: state grid mismatch");
    v_coeff_.resize(u_current_.size());
    for (size_t i = 0; i < v_coeff_.size(); ++i)
        v_coeff_[i] = 2.0 * (u_current_.data[i] - ubar_) + alpha_;
}

ComplexField NewtonJacobianProblem::apply_A(const ComplexField& u) const {
    check_grid(u);
    ComplexField out(grid_);
    kernels::five_point(u.data, grid_.nx, grid_.ny, grid_.hx() * grid_.hx(), out.data);
    for (size_t i = 0; i < u.size(); ++i) out.data[i] -= 2.0 * u_current_.data[i] * u.data[i];
    return out;
}

ComplexField NewtonJacobianProblem::apply_V(const ComplexField& u) const {
    check_grid(u);
    ComplexField out(grid_);
    kernels::mul_real(u.data, v_coeff_, out.data);
    return out;
}

ComplexField NewtonJacobianProblem::apply_V_adjoint(const ComplexField& u) const {
    return apply_V(u);  // real diagonal
}

std::map<std::string, std::string> NewtonJacobianProblem::metadata() const {
    auto m = Problem::metadata();
    m["ubar"] = std::to_string(ubar_);
    m["alpha"] = std::to_string(alpha_);
    return m;
}

std::shared_ptr<NewtonJacobianProblem> make_newton_jacobian(const RealField& u_current,
                                                            double alpha) {
    return std::make_shared<NewtonJacobianProblem>(u_current.grid, u_current, alpha);
}

GridSpec newton_grid(int n) { return make_grid(n, n, 1.0, 1.0, Bc::DirichletInterior); }

}  // namespace bp
