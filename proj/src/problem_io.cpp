#include "bp/problem_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "bp/cdr.hpp"
#include "bp/config.hpp"
#include "bp/helmholtz.hpp"
#include "bp/newton_problem.hpp"

namespace fs = std::filesystem;

namespace bp {

std::string save_problem(const std::string& dir, const std::string& stem, const Problem& p) {
    fs::create_directories(dir);
    const std::string manifest_path = (fs::path(dir) / (stem + ".problem")).string();
    std::ofstream out(manifest_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + manifest_path);

    out.precision(17);
    const GridSpec& g = p.grid();
    out << "family = " << p.family() << "\n";
    out << "nx = " << g.nx << "\nny = " << g.ny << "\n";
    out << "lx = " << g.lx << "\nly = " << g.ly << "\n";

    if (const auto* h = dynamic_cast<const HelmholtzProblem*>(&p)) {
        out << "k0 = " << h->k0() << "\neta = " << h->eta() << "\n";
        const std::string f = stem + "_k2.bpfd";
        save_field((fs::path(dir) / f).string(), h->k2());
        out << "k2_file = " << f << "\n";
    } else if (const auto* c = dynamic_cast<const CdrProblem*>(&p)) {
        out << "kappa0 = " << c->kappa0() << "\nsigma0 = " << c->sigma0() << "\n";
        out << "v0x = " << c->v0().first << "\nv0y = " << c->v0().second << "\n";
        out << "dealias = " << (c->dealias() ? "true" : "false") << "\n";
        const struct {
            const char* key;
            RealField field;
        } fields[] = {{"kappa_file", c->kappa_field()},
                      {"vx_file", c->vx_field()},
                      {"vy_file", c->vy_field()},
                      {"sigma_file", c->sigma_field()}};
        for (const auto& fd : fields) {
            const std::string f = stem + "_" + std::string(fd.key).substr(0, 5) + ".bpfd";
            save_field((fs::path(dir) / f).string(), fd.field);
            out << fd.key << " = " << f << "\n";
        }
    } else if (const auto* nj = dynamic_cast<const NewtonJacobianProblem*>(&p)) {
        out << "alpha = " << nj->alpha() << "\n";
        const std::string f = stem + "_state.bpfd";
        save_field((fs::path(dir) / f).string(), nj->u_current());
        out << "state_file = " << f << "\n";
    } else {
        throw std::invalid_argument("save_problem: unknown problem family " + p.family());
    }
    return manifest_path;
}

ProblemPtr load_problem(const std::string& manifest_path) {
    const Config cfg = Config::parse_file(manifest_path);
    const fs::path dir = fs::path(manifest_path).parent_path();
    const std::string family = cfg.get("", "family");
    const int nx = cfg.get_int("", "nx", 0), ny = cfg.get_int("", "ny", 0);
    const double lx = cfg.get_double("", "lx", 1.0), ly = cfg.get_double("", "ly", 1.0);

    auto file = [&](const std::string& key) { return (dir / cfg.get("", key)).string(); };

    if (family == "helmholtz") {
        ComplexField k2 = load_complex_field(file("k2_file"), Bc::Periodic, lx, ly);
        const double k0 = std::stod(cfg.get("", "k0"));
        const double eta = std::stod(cfg.get("", "eta"));
        return std::make_shared<HelmholtzProblem>(make_grid(nx, ny, lx, ly, Bc::Periodic),
                                                  std::move(k2), k0, eta);
    }
    if (family == "cdr") {
        RealField kappa = load_real_field(file("kappa_file"), Bc::Periodic, lx, ly);
        RealField vx = load_real_field(file("vx_file"), Bc::Periodic, lx, ly);
        RealField vy = load_real_field(file("vy_file"), Bc::Periodic, lx, ly);
        RealField sigma = load_real_field(file("sigma_file"), Bc::Periodic, lx, ly);
        return std::make_shared<CdrProblem>(
            make_grid(nx, ny, lx, ly, Bc::Periodic), std::move(kappa), std::move(vx),
            std::move(vy), std::move(sigma), std::stod(cfg.get("", "kappa0")),
            std::stod(cfg.get("", "v0x")), std::stod(cfg.get("", "v0y")),
            std::stod(cfg.get("", "sigma0")), cfg.get_bool("", "dealias", false));
    }
    if (family == "newton") {
        RealField u = load_real_field(file("state_file"), Bc::DirichletInterior, lx, ly);
        return std::make_shared<NewtonJacobianProblem>(make_grid(nx, ny, lx, ly,
                                                                 Bc::DirichletInterior),
                                                       std::move(u),
                                                       std::stod(cfg.get("", "alpha")));
    }
    throw std::runtime_error("load_problem: unknown family " + family);
}

}  // namespace bp
