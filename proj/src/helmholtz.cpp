#include "bp/helmholtz.hpp"

#include <cmath>
#include <stdexcept>

#include "bp/kernels.hpp"
#include "bp/samplers.hpp"

namespace bp {

HelmholtzProblem::HelmholtzProblem(GridSpec grid, ComplexField k2, double k0, double eta)
    : Problem(grid, shift_symbol(laplacian_symbol(grid), -cplx(k0 * k0, eta))),
      k2_(std::move(k2)),
      k0_(k0),
      eta_(eta) {
    if (grid.bc != Bc::Periodic)
        throw std::invalid_argument("HelmholtzProblem: periodic grid required");
    if (eta <= 0.0) throw std::invalid_argument("HelmholtzProblem: eta must be > 0");
    if (!(k2_.grid == grid)) throw std::invalid_argument("HelmholtzProblem: k2 grid mismatch");
    if (!all_finite(k2_)) throw std::invalid_argument("HelmholtzProblem: k2 not finite");
    lap_ = laplacian_symbol(grid);
    v_coeff_.resize(k2_.size());
    const cplx shift(k0 * k0, eta);
    for (size_t i = 0; i < k2_.size(); ++i) v_coeff_[i] = k2_.data[i] - shift;
}

ComplexField HelmholtzProblem::apply_A(const ComplexField& u) const {
    check_grid(u);
    ComplexField lap = apply_symbol(u, lap_, SymbolOp::Multiply);
    for (size_t i = 0; i < u.size(); ++i) lap.data[i] -= k2_.data[i] * u.data[i];
    return lap;
}

ComplexField HelmholtzProblem::apply_V(const ComplexField& u) const {
    check_grid(u);
    ComplexField out(grid_);
    kernels::mul(u.data, v_coeff_, out.data);
    return out;
}

ComplexField HelmholtzProblem::apply_V_adjoint(const ComplexField& u) const {
    check_grid(u);
    ComplexField out(grid_);
    for (size_t i = 0; i < u.size(); ++i) out.data[i] = std::conj(v_coeff_[i]) * u.data[i];
    return out;
}

ComplexField HelmholtzProblem::apply_A_adjoint(const ComplexField& u) const {
    check_grid(u);
    ComplexField lap = apply_symbol(u, lap_, SymbolOp::Multiply);  // |xi|^2 is real
    for (size_t i = 0; i < u.size(); ++i) lap.data[i] -= std::conj(k2_.data[i]) * u.data[i];
    return lap;
}

std::map<std::string, std::string> HelmholtzProblem::metadata() const {
    auto m = Problem::metadata();
    m["k0"] = std::to_string(k0_);
    m["eta"] = std::to_string(eta_);
    return m;
}

std::shared_ptr<HelmholtzProblem> make_helmholtz(const GridSpec& grid, const RealField& k2,
                                                 const HelmholtzOptions& opts) {
    if (!(k2.grid == grid)) throw std::invalid_argument("make_helmholtz: k2 grid mismatch");

    ComplexField k2c = to_complex(k2);
    const int layer = opts.sponge_points < 0 ? grid.nx / 8 : opts.sponge_points;
    if (layer > 0 && opts.sponge_strength > 0.0) {
        RealField d = sponge_profile(grid, layer, opts.sponge_strength);
        for (size_t i = 0; i < k2c.size(); ++i)
            k2c.data[i] = k2.data[i] * cplx(1.0, d.data[i]);
    }

    double k0_sq = opts.k0_sq;
    if (std::isnan(k0_sq)) {
        double s = 0.0;
        for (double v : k2.data) s += v;
        k0_sq = s / static_cast<double>(k2.size());
    }
    double eta = opts.eta;
    if (std::isnan(eta)) {
        double dev = 0.0;
        for (const cplx& v : k2c.data) dev = std::max(dev, std::abs(v - k0_sq));
        eta = std::max(opts.eta_factor * dev, opts.eta_floor);
    }
    return std::make_shared<HelmholtzProblem>(grid, std::move(k2c), std::sqrt(k0_sq), eta);
}

std::shared_ptr<HelmholtzProblem> make_layered_helmholtz(int n, double ppw, double contrast,
                                                         RngState& rng,
                                                         const HelmholtzOptions& opts) {
    if (ppw <= 2.0) throw std::invalid_argument("make_layered_helmholtz: ppw must exceed 2");
    if (contrast < 1.0) throw std::invalid_argument("make_layered_helmholtz: contrast must be >= 1");
    const GridSpec grid = make_grid(n, n, 1.0, 1.0, Bc::Periodic);
    const double k_max = 2.0 * 3.14159265358979323846 / (ppw * grid.hx());
    const double k_min = k_max / contrast;

    RealField k = layered_medium(grid, 4, k_min, k_max, 0.02 * grid.ly, rng);
    RealField k2(grid);
    for (size_t i = 0; i < k.size(); ++i) k2.data[i] = k.data[i] * k.data[i];
    return make_helmholtz(grid, k2, opts);
}

}  // namespace bp
