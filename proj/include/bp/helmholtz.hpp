#pragma once

#include <limits>

#include "bp/problem.hpp"
#include "bp/rng.hpp"

namespace bp {

/// Heterogeneous Helmholtz on a periodic grid, pseudospectral:
/// A u = -Lap u - k2(x) u with the spectral Laplacian, split against the
/// shifted reference L_eta = -Lap - (k0^2 + i eta), so
/// V u = (k2(x) - k0^2 - i eta) u is a pointwise multiplier. Sponge
/// damping, when present, is already folded into k2 (k^2 -> k^2(1+i d)).
class HelmholtzProblem : public Problem {
  public:
    HelmholtzProblem(GridSpec grid, ComplexField k2, double k0, double eta);

    std::string family() const override { return "helmholtz"; }

    ComplexField apply_A(const ComplexField& u) const override;
    ComplexField apply_V(const ComplexField& u) const override;
    ComplexField apply_V_adjoint(const ComplexField& u) const override;
    ComplexField apply_A_adjoint(const ComplexField& u) const override;

    double k0() const { return k0_; }
    double eta() const { return eta_; }
    const ComplexField& k2() const { return k2_; }

    std::map<std::string, std::string> metadata() const override;

  private:
    ComplexField k2_;
    double k0_;
    double eta_;
    SpectralSymbol lap_;          // |xi|^2
    std::vector<cplx> v_coeff_;   // k2 - (k0^2 + i eta)
};

struct HelmholtzOptions {
    /// eta = eta_factor * max|k2 - k0^2|, floored at eta_floor to stay
    /// positive for (near-)homogeneous media.
    double eta_factor = 1.05;
    double eta_floor = 1e-3;
    /// Overrides; NaN means "derive from the medium" (k0^2 = mean k2,
    /// eta from the rule above).
    double k0_sq = std::numeric_limits<double>::quiet_NaN();
    double eta = std::numeric_limits<double>::quiet_NaN();
    /// Absorbing layer folded into k2; -1 = auto (nx/8, the proportional
    /// analogue of a 32-point layer on a 256-point grid). A lossless
    /// periodic medium is near-resonant and the Born splitting does not
    /// contract there, so the synthetic family keeps damping on.
    int sponge_points = -1;
    double sponge_strength = 1.0;
};

/// Assemble a Helmholtz problem from a real squared-wavenumber medium,
/// folding optional sponge damping into k2 and deriving k0/eta defaults.
std::shared_ptr<HelmholtzProblem> make_helmholtz(const GridSpec& grid, const RealField& k2,
                                                 const HelmholtzOptions& opts = {});

/// Synthetic layered-medium instance for contrast/ppw sweeps. ppw is the
/// points-per-wavelength at the largest wavenumber in the medium;
/// contrast is the wavenumber ratio between the fastest and slowest
/// layer.
std::shared_ptr<HelmholtzProblem> make_layered_helmholtz(int n, double ppw, double contrast,
                                                         RngState& rng,
                                                         const HelmholtzOptions& opts = {});

}  // namespace bp
