#pragma once

#include <limits>

#include "bp/problem.hpp"
#include "bp/rng.hpp"

namespace bp {

/// Convection-diffusion-reaction on a periodic grid:
///   A u = -div(kappa grad u) + v . grad u + sigma u,
/// split against the constant-coefficient reference
///   L0 = -kappa0 Lap + v0 . grad + sigma0 (Fourier symbol
///   kappa0 |xi|^2 + i v0.xi + sigma0), so
///   V u = div(dkappa grad u) - dv . grad u - dsigma u
/// with spectral derivatives and pointwise products. apply_A is realized
/// as L0 u - V u, making the splitting exact by construction.
class CdrProblem : public Problem {
  public:
    CdrProblem(GridSpec grid, RealField kappa, RealField vx, RealField vy, RealField sigma,
               double kappa0, double v0x, double v0y, double sigma0, bool dealias = false);

    std::string family() const override { return "cdr"; }

    ComplexField apply_A(const ComplexField& u) const override;
    ComplexField apply_V(const ComplexField& u) const override;
    ComplexField apply_V_adjoint(const ComplexField& u) const override;

    double kappa0() const { return kappa0_; }
    double sigma0() const { return sigma0_; }
    std::pair<double, double> v0() const { return {v0x_, v0y_}; }
    bool dealias() const { return dealias_; }

    // Full coefficient fields (background + deviation), for serialization.
    RealField kappa_field() const;
    RealField vx_field() const;
    RealField vy_field() const;
    RealField sigma_field() const;

    std::map<std::string, std::string> metadata() const override;

  private:
    ComplexField spectral_dx(const ComplexField& u) const;
    ComplexField spectral_dy(const ComplexField& u) const;
    ComplexField dealias_23(ComplexField u) const;

    RealField dkappa_, dvx_, dvy_, dsigma_;
    double kappa0_, v0x_, v0y_, sigma0_;
    bool dealias_;
    WavenumberGrid wn_;
};

struct CdrOptions {
    /// Background constants; NaN derives them as the field means.
    double kappa0 = std::numeric_limits<double>::quiet_NaN();
    double sigma0 = std::numeric_limits<double>::quiet_NaN();
    bool dealias = false;
};

std::shared_ptr<CdrProblem> make_cdr(const GridSpec& grid, const RealField& kappa,
                                     const RealField& vx, const RealField& vy,
                                     const RealField& sigma, const CdrOptions& opts = {});

/// Synthetic CDR instance: GRF diffusion, stream-function velocity,
/// GRF reaction, matching the paper's data recipe at toy scale.
std::shared_ptr<CdrProblem> make_random_cdr(int n, RngState& rng, const CdrOptions& opts = {});

}  // namespace bp
