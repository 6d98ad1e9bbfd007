#pragma once

#include "bp/problem.hpp"

namespace bp {

/// Linearized Newton system for -Lap u - u^2 = f on the unit square with
/// homogeneous Dirichlet boundaries, five-point FDM on N x N interior
/// nodes: J = L_D - 2 diag(u_current). The reference replaces the
/// reaction term by its spatial mean, J0 = L_D - 2 ubar + alpha, which
/// the 2-D DST-I diagonalizes with entries
/// (4/h^2)[sin^2(p pi h/2) + sin^2(q pi h/2)] - 2 ubar + alpha.
class NewtonJacobianProblem : public Problem {
  public:
    NewtonJacobianProblem(GridSpec grid, RealField u_current, double alpha = 0.0);

    std::string family() const override { return "newton"; }

    ComplexField apply_A(const ComplexField& u) const override;
    ComplexField apply_V(const ComplexField& u) const override;
    ComplexField apply_V_adjoint(const ComplexField& u) const override;
    ComplexField apply_A_adjoint(const ComplexField& u) const override { return apply_A(u); }

    double ubar() const { return ubar_; }
    double alpha() const { return alpha_; }
    const RealField& u_current() const { return u_current_; }

    std::map<std::string, std::string> metadata() const override;

  private:
    RealField u_current_;
    double ubar_;
    double alpha_;
    std::vector<double> v_coeff_;  // 2(u_current - ubar) + alpha, real diagonal
};

std::shared_ptr<NewtonJacobianProblem> make_newton_jacobian(const RealField& u_current,
                                                            double alpha = 0.0);

/// Interior grid of the Newton benchmark: N x N points on (0,1)^2,
/// h = 1/(N+1).
GridSpec newton_grid(int n);

}  // namespace bp
