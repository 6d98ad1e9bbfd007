#pragma once

#include <string>
#include <vector>

#include "bp/iterate.hpp"
#include "bp/newton_problem.hpp"
#include "bp/train.hpp"

namespace bp {

/// Outer Newton configuration for -Lap u - u^2 = -s sin(pi x) sin(pi y)
/// on the unit square (five-point FDM, homogeneous Dirichlet). No
/// globalization: raw Newton from perturbed starts, so distinct branches
/// stay reachable.
struct NewtonConfig {
    double s = 1600.0;
    double outer_tol = 1e-8;   // on ||F_nl(u)||_2
    int max_outer = 25;
    double alpha = 0.0;        // reference-Jacobian shift
    bool oracle = false;       // sparse direct inner solves
    IterationConfig inner{IterFormat::NPBS, 1e-4, 2000};
    CorrectionMap inner_map = OptimalScalarMap{OptMetric::Euclidean};
};

struct NewtonTrace {
    std::vector<double> outer_residual;   // ||F_nl||, entry 0 = initial
    std::vector<int> inner_iters;         // 0 for oracle steps
    std::vector<double> inner_final_rel;
    std::vector<RealField> states;        // u^(m) along the trajectory
    RealField u;
    bool converged = false;
    std::string failure;
};

/// f(x,y) = -s sin(pi x / lx) sin(pi y / ly) on the interior grid.
RealField newton_source(const GridSpec& grid, double s);

/// F_nl(u) = L_D u - u^2 - f.
RealField nonlinear_residual(const RealField& u, double s);

struct NewtonStepResult {
    RealField u_next;
    IterationTrace inner_trace;  // empty for oracle solves
    std::shared_ptr<NewtonJacobianProblem> problem;
};

/// One Newton update: solve J delta = -F_nl(u) (preconditioned
/// iteration, or sparse LU in oracle mode) and return u + delta.
NewtonStepResult newton_step(const RealField& u, const NewtonConfig& cfg);

NewtonTrace solve_newton(const RealField& u0, const NewtonConfig& cfg);

/// Direct sparse solve of J(u) delta = rhs (the oracle path).
RealField sparse_jacobian_solve(const RealField& u, const RealField& rhs, double s);

/// Replay set for training inner maps: one Jacobian problem per
/// harvested state, probed with the state's physical inner residual
/// -F_nl(u_m).
std::vector<TrainSample> harvest_newton_replay(const std::vector<RealField>& states, double s,
                                               double alpha);

void write_newton_csv(const std::string& path, const NewtonTrace& trace);

}  // namespace bp
