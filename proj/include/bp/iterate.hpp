#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bp/correction.hpp"
#include "bp/problem.hpp"

namespace bp {

enum class IterFormat { Direct, CBS, NPBS };

struct IterationConfig {
    IterFormat format = IterFormat::NPBS;
    double rtol = 1e-6;
    int max_iters = 1000;
};

enum class Termination { Converged, MaxIters, Diverged, Stagnated };

/// Per-step relative residual norms (both metrics always recorded, so
/// metric behavior can be compared without reruns); entry 0 is the
/// initial residual.
struct IterationTrace {
    std::vector<double> res_l2_rel;
    std::vector<double> res_reta_rel;
    int iters = 0;
    Termination terminated = Termination::MaxIters;
    double fnorm_l2 = 0.0;
    double fnorm_reta = 0.0;
};

std::string termination_name(Termination t);
std::string format_name(IterFormat f);
IterFormat parse_format(const std::string& name);

/// f - A u.
ComplexField residual(const Problem& p, const ComplexField& u, const ComplexField& f);

/// Riesz-map norm ||x||_{R_eta} = ||G x||_2 (the metric itself is never
/// materialized).
double norm_Reta(const Problem& p, const ComplexField& x);

// Single steps. Direct corrects the raw residual; CBS applies the map to
// the left-preconditioned residual G(f - A u) (differential form); NPBS
// applies it to the Born residual G(V u + f) - u (integral form, one
// Green application). CBS and NPBS trajectories coincide through the key
// identity, which the tests pin down.
ComplexField step_direct(const Problem& p, const CorrectionMap& map, const ComplexField& u,
                         const ComplexField& f);
ComplexField step_cbs(const Problem& p, const CorrectionMap& map, const ComplexField& u,
                      const ComplexField& f);
ComplexField step_npbs(const Problem& p, const CorrectionMap& map, const ComplexField& u,
                       const ComplexField& f);

struct RunResult {
    ComplexField u;
    IterationTrace trace;
};

/// Iterate from u0 (default 0) until the relative Euclidean residual
/// drops below rtol, max_iters is hit, values go non-finite / above the
/// divergence threshold, or the residual stagnates (relative change
/// below 1e-14 over 20 steps).
RunResult run(const Problem& p, const CorrectionMap& map, const ComplexField& f,
              const IterationConfig& config, const ComplexField* u0 = nullptr);

void write_trace_csv(const std::string& path, const IterationTrace& trace);

struct SpectralDiagnostics {
    double rho_est = 0.0;        // best ||G V||_2 estimate (dense-exact when available)
    double rho_power = 0.0;      // raw power-iteration estimate
    bool rho_converged = false;
    int sweeps = 0;
    bool dense_checked = false;
    double gv_norm_dense = 0.0;  // exact ||G V||_2 on the dense path
    double max_eig_dist = 0.0;   // max |eig(I-GV) - 1| on the dense path
    bool disk_ok = false;        // eigenvalues of I - GV inside |z-1| <= rho
    double kappa = 0.0;          // kappa_2(I - GV), dense path only
    double kappa_bound = 0.0;    // (1+rho)/(1-rho), when rho < 1
    bool kappa_ok = false;
};

struct DiagnosticsOptions {
    int max_sweeps = 500;
    double tol = 1e-12;
    bool dense = true;          // dense eigen-checks when size permits
    uint64_t seed = 7;
};

/// rho via power iteration on (GV)^*(GV); at <= kDenseCap unknowns also
/// dense eigenvalue/conditioning checks of I - GV against the
/// disk and kappa bounds.
SpectralDiagnostics spectral_diagnostics(const Problem& p, const DiagnosticsOptions& opts = {});

}  // namespace bp
