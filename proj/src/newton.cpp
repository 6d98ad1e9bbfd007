#include "bp/newton.hpp"

#include <Eigen/Sparse>

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "bp/kernels.hpp"

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;

double norm2(const RealField& f) {
    double s = 0.0;
    for (double v : f.data) s += v * v;
    return std::sqrt(s);
}
}  // namespace

RealField newton_source(const GridSpec& grid, double s) {
    RealField f(grid);
    for (int i = 0; i < grid.nx; ++i) {
        const double sx = std::sin(kPi * grid.x(i) / grid.lx);
        for (int j = 0; j < grid.ny; ++j)
            f.at(i, j) = -s * sx * std::sin(kPi * grid.y(j) / grid.ly);
    }
    return f;
}

RealField nonlinear_residual(const RealField& u, double s) {
    if (u.grid.bc != Bc::DirichletInterior)
        throw std::invalid_argument("nonlinear_residual: DirichletInterior grid required");
    const GridSpec& g = u.grid;
    ComplexField uc = to_complex(u);
    ComplexField lap(g);
    kernels::five_point(uc.data, g.nx, g.ny, g.hx() * g.hx(), lap.data);
    RealField f = newton_source(g, s);
    RealField out(g);
    for (size_t k = 0; k < out.size(); ++k)
        out.data[k] = lap.data[k].real() - u.data[k] * u.data[k] - f.data[k];
    return out;
}

RealField sparse_jacobian_solve(const RealField& u, const RealField& rhs, double /*s*/) {
    const GridSpec& g = u.grid;
    const int nx = g.nx, ny = g.ny, n = g.size();
    const double ih2 = 1.0 / (g.hx() * g.hx());

    Eigen::SparseMatrix<double> J(n, n);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(5) * n);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const int k = i * ny + j;
            trip.emplace_back(k, k, 4.0 * ih2 - 2.0 * u.data[static_cast<size_t>(k)]);
            if (i > 0) trip.emplace_back(k, k - ny, -ih2);
            if (i < nx - 1) trip.emplace_back(k, k + ny, -ih2);
            if (j > 0) trip.emplace_back(k, k - 1, -ih2);
            if (j < ny - 1) trip.emplace_back(k, k + 1, -ih2);
        }
    }
    J.setFromTriplets(trip.begin(), trip.end());

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(J);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("sparse_jacobian_solve: factorization failed");
    Eigen::VectorXd b(n);
    for (int k = 0; k < n; ++k) b[k] = rhs.data[static_cast<size_t>(k)];
    Eigen::VectorXd x = lu.solve(b);

    RealField out(g);
    for (int k = 0; k < n; ++k) out.data[static_cast<size_t>(k)] = x[k];
    return out;
}

NewtonStepResult newton_step(const RealField& u, const NewtonConfig& cfg) {
    RealField F = nonlinear_residual(u, cfg.s);
    RealField rhs(u.grid);
    for (size_t k = 0; k < rhs.size(); ++k) rhs.data[k] = -F.data[k];

    NewtonStepResult res;
    res.problem = std::make_shared<NewtonJacobianProblem>(u.grid, u, cfg.alpha);

    if (cfg.oracle) {
        RealField delta = sparse_jacobian_solve(u, rhs, cfg.s);
        res.u_next = u;
        for (size_t k = 0; k < delta.size(); ++k) res.u_next.data[k] += delta.data[k];
        return res;
    }

    RunResult inner = run(*res.problem, cfg.inner_map, to_complex(rhs), cfg.inner);
    if (inner.trace.terminated == Termination::Diverged)
        throw std::runtime_error("newton_step: inner solver diverged");
    res.inner_trace = std::move(inner.trace);
    res.u_next = u;
    for (size_t k = 0; k < res.u_next.size(); ++k)
        res.u_next.data[k] += inner.u.data[k].real();
    return res;
}

NewtonTrace solve_newton(const RealField& u0, const NewtonConfig& cfg) {
    if (cfg.s == 0.0) throw std::invalid_argument("solve_newton: s must be nonzero");
    if (cfg.outer_tol <= 0.0) throw std::invalid_argument("solve_newton: outer_tol must be > 0");

    NewtonTrace tr;
    tr.u = u0;
    tr.states.push_back(u0);
    tr.outer_residual.push_back(norm2(nonlinear_residual(tr.u, cfg.s)));

    for (int m = 0; m < cfg.max_outer; ++m) {
        if (tr.outer_residual.back() <= cfg.outer_tol) {
            tr.converged = true;
            return tr;
        }
        NewtonStepResult step;
        try {
            step = newton_step(tr.u, cfg);
        } catch (const std::exception& e) {
            tr.failure = e.what();
            return tr;
        }
        tr.u = std::move(step.u_next);
        tr.states.push_back(tr.u);
        tr.inner_iters.push_back(step.inner_trace.iters);
        tr.inner_final_rel.push_back(
            step.inner_trace.res_l2_rel.empty() ? 0.0 : step.inner_trace.res_l2_rel.back());
        const double fn = norm2(nonlinear_residual(tr.u, cfg.s));
        tr.outer_residual.push_back(fn);
        if (!std::isfinite(fn)) {
            tr.failure = "non-finite outer residual";
            return tr;
        }
    }
    tr.converged = tr.outer_residual.back() <= cfg.outer_tol;
    return tr;
}

std::vector<TrainSample> harvest_newton_replay(const std::vector<RealField>& states, double s,
                                               double alpha) {
    std::vector<TrainSample> replay;
    replay.reserve(states.size());
    for (const RealField& u : states) {
        TrainSample sample;
        sample.problem = std::make_shared<NewtonJacobianProblem>(u.grid, u, alpha);
        RealField F = nonlinear_residual(u, s);
        ComplexField probe(u.grid);
        for (size_t k = 0; k < probe.size(); ++k) probe.data[k] = cplx(-F.data[k], 0.0);
        const double pn = kernels::norm2(probe.data);
        if (pn <= 0.0) continue;  // exact root: nothing to replay
        sample.probe = std::move(probe);
        replay.push_back(std::move(sample));
    }
    return replay;
}

void write_newton_csv(const std::string& path, const NewtonTrace& trace) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "outer_step,F_nl_norm,inner_iters,inner_final_rel\n";
    for (size_t m = 0; m < trace.outer_residual.size(); ++m) {
        out << m << ',' << trace.outer_residual[m] << ',';
        if (m == 0)
            out << 0 << ',' << 0.0;
        else
            out << trace.inner_iters[m - 1] << ',' << trace.inner_final_rel[m - 1];
        out << '\n';
    }
}

}  // namespace bp
