#include "bp/iterate.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "bp/kernels.hpp"
#include "bp/rng.hpp"

namespace bp {

namespace {
constexpr double kDivergenceThreshold = 1e8;
constexpr double kStagnationTol = 1e-14;
constexpr int kStagnationWindow = 20;
}  // namespace

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::Converged: return "converged";
        case Termination::MaxIters: return "max_iters";
        case Termination::Diverged: return "diverged";
        case Termination::Stagnated: return "stagnated";
    }
    return "?";
}

std::string format_name(IterFormat f) {
    switch (f) {
        case IterFormat::Direct: return "direct";
        case IterFormat::CBS: return "cbs";
        case IterFormat::NPBS: return "npbs";
    }
    return "?";
}

IterFormat parse_format(const std::string& name) {
    if (name == "direct") return IterFormat::Direct;
    if (name == "cbs") return IterFormat::CBS;
    if (name == "npbs") return IterFormat::NPBS;
    throw std::invalid_argument("unknown iteration format: " + name);
}

ComplexField residual(const Problem& p, const ComplexField& u, const ComplexField& f) {
    ComplexField au = p.apply_A(u);
    ComplexField r(f.grid);
    kernels::sub(f.data, au.data, r.data);
    return r;
}

double norm_Reta(const Problem& p, const ComplexField& x) {
    return kernels::norm2(p.apply_G(x).data);
}

ComplexField step_direct(const Problem& p, const CorrectionMap& map, const ComplexField& u,
                         const ComplexField& f) {
    ComplexField r = residual(p, u, f);
    CorrectionContext ctx{&p, &r};
    ComplexField du = apply_correction(map, r, ctx);
    ComplexField out = u;
    kernels::add(out.data, du.data, out.data);
    return out;
}

ComplexField step_cbs(const Problem& p, const CorrectionMap& map, const ComplexField& u,
                      const ComplexField& f) {
    ComplexField r = residual(p, u, f);
    ComplexField rbs = p.apply_G(r);
    CorrectionContext ctx{&p, &r};
    ComplexField du = apply_correction(map, rbs, ctx);
    ComplexField out = u;
    kernels::add(out.data, du.data, out.data);
    return out;
}

ComplexField step_npbs(const Problem& p, const CorrectionMap& map, const ComplexField& u,
                       const ComplexField& f) {
    ComplexField rbs = p.born_residual(u, f);
    ComplexField r = residual(p, u, f);  // stopping metric / Euclidean context
    CorrectionContext ctx{&p, &r};
    ComplexField du = apply_correction(map, rbs, ctx);
    ComplexField out = u;
    kernels::add(out.data, du.data, out.data);
    return out;
}

RunResult run(const Problem& p, const CorrectionMap& map, const ComplexField& f,
              const IterationConfig& config, const ComplexField* u0) {
    if (!(config.rtol > 0.0 && config.rtol < 1.0))
        throw std::invalid_argument("run: rtol must lie in (0,1)");
    if (config.max_iters < 1) throw std::invalid_argument("run: max_iters must be >= 1");
    const double fnorm = kernels::norm2(f.data);
    if (fnorm <= 0.0) throw std::invalid_argument("run: zero source");

    RunResult res;
    res.u = u0 ? *u0 : ComplexField(p.grid());
    if (u0 && !(u0->grid == p.grid())) throw std::invalid_argument("run: u0 grid mismatch");

    IterationTrace& tr = res.trace;
    tr.fnorm_l2 = fnorm;
    tr.fnorm_reta = norm_Reta(p, f);
    tr.terminated = Termination::MaxIters;

    auto record = [&](const ComplexField& r, const ComplexField& gr) {
        tr.res_l2_rel.push_back(kernels::norm2(r.data) / tr.fnorm_l2);
        tr.res_reta_rel.push_back(kernels::norm2(gr.data) / tr.fnorm_reta);
    };

    ComplexField r = residual(p, res.u, f);
    ComplexField gr = p.apply_G(r);
    record(r, gr);
    if (tr.res_l2_rel.back() <= config.rtol) {
        tr.terminated = Termination::Converged;
        return res;
    }

    for (int it = 0; it < config.max_iters; ++it) {
        CorrectionContext ctx{&p, &r};
        ComplexField direction(p.grid());
        switch (config.format) {
            case IterFormat::Direct: direction = r; break;
            case IterFormat::CBS: direction = gr; break;
            case IterFormat::NPBS: direction = p.born_residual(res.u, f); break;
        }
        ComplexField du = apply_correction(map, direction, ctx);
        kernels::add(res.u.data, du.data, res.u.data);
        tr.iters = it + 1;

        r = residual(p, res.u, f);
        gr = p.apply_G(r);
        record(r, gr);

        const double rel = tr.res_l2_rel.back();
        if (!std::isfinite(rel) || rel > kDivergenceThreshold) {
            tr.terminated = Termination::Diverged;
            return res;
        }
        if (rel <= config.rtol) {
            tr.terminated = Termination::Converged;
            return res;
        }
        const int n = static_cast<int>(tr.res_l2_rel.size());
        if (n > kStagnationWindow) {
            const double past = tr.res_l2_rel[static_cast<size_t>(n - 1 - kStagnationWindow)];
            if (std::abs(past - rel) < kStagnationTol * std::max(1.0, past)) {
                tr.terminated = Termination::Stagnated;
                return res;
            }
        }
    }
    return res;
}

void write_trace_csv(const std::string& path, const IterationTrace& trace) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "step,res_l2_rel,res_Reta_rel\n";
    for (size_t i = 0; i < trace.res_l2_rel.size(); ++i)
        out << i << ',' << trace.res_l2_rel[i] << ',' << trace.res_reta_rel[i] << '\n';
}

SpectralDiagnostics spectral_diagnostics(const Problem& p, const DiagnosticsOptions& opts) {
    SpectralDiagnostics d;

    // Power iteration on (GV)^*(GV) for ||GV||_2.
    RngState rng(opts.seed);
    ComplexField v(p.grid());
    for (cplx& x : v.data) x = cplx(rng.normal(), rng.normal());
    double nv = kernels::norm2(v.data);
    for (cplx& x : v.data) x /= nv;

    double lambda = 0.0;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        ComplexField gv = p.apply_G(p.apply_V(v));
        ComplexField w = p.apply_V_adjoint(p.apply_G_adjoint(gv));
        const double lambda_new = kernels::dotc(v.data, w.data).real();
        const double nw = kernels::norm2(w.data);
        d.sweeps = sweep + 1;
        if (nw == 0.0) {  // V = 0
            lambda = 0.0;
            d.rho_converged = true;
            break;
        }
        for (size_t i = 0; i < w.size(); ++i) v.data[i] = w.data[i] / nw;
        if (sweep > 0 && std::abs(lambda_new - lambda) <= opts.tol * std::max(1.0, lambda_new)) {
            lambda = lambda_new;
            d.rho_converged = true;
            break;
        }
        lambda = lambda_new;
    }
    d.rho_power = std::sqrt(std::max(0.0, lambda));
    d.rho_est = d.rho_power;

    if (opts.dense && p.grid().size() <= kDenseCap) {
        d.dense_checked = true;
        DenseMatrix B = assemble_dense_born(p);

        DenseMatrix GV = DenseMatrix::Identity(B.rows(), B.cols()) - B;
        d.gv_norm_dense = dense_extremal_singular_values(GV).first;
        d.rho_est = std::max(d.rho_est, d.gv_norm_dense);

        Eigen::ComplexEigenSolver<DenseMatrix> es(B, false);
        const auto& ev = es.eigenvalues();
        double max_dist = 0.0;
        for (Eigen::Index i = 0; i < ev.size(); ++i)
            max_dist = std::max(max_dist, std::abs(ev[i] - cplx{1.0, 0.0}));
        d.max_eig_dist = max_dist;
        d.disk_ok = max_dist <= d.rho_est + 1e-8;

        const auto [smax, smin] = dense_extremal_singular_values(B);
        d.kappa = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
        if (d.rho_est < 1.0) {
            d.kappa_bound = (1.0 + d.rho_est) / (1.0 - d.rho_est);
            d.kappa_ok = d.kappa <= d.kappa_bound * (1.0 + 1e-6);
        } else {
            d.kappa_bound = std::numeric_limits<double>::infinity();
            d.kappa_ok = true;  // bound not applicable
        }
    }
    return d;
}

}  // namespace bp
