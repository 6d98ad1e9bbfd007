// Command-line front end: verification suites, solver runs, map
// training, and benchmark sweeps. All randomness flows from a single
// --seed, split deterministically per sample, so identical invocations
// produce identical CSV bodies.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bp/bench.hpp"
#include "bp/cdr.hpp"
#include "bp/config.hpp"
#include "bp/helmholtz.hpp"
#include "bp/iterate.hpp"
#include "bp/newton.hpp"
#include "bp/problem_io.hpp"
#include "bp/samplers.hpp"
#include "bp/train.hpp"
#include "bp/verify.hpp"

namespace fs = std::filesystem;
using namespace bp;

namespace {

std::string now_string() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&t));
    return buf;
}

void emit_manifest(const std::string& out_dir, const std::string& command,
                   const std::string& config_path, uint64_t seed) {
    fs::create_directories(out_dir);
    RunManifest m{command, config_path, seed, out_dir, kToolVersion, now_string()};
    write_manifest((fs::path(out_dir) / "manifest.txt").string(), m);
}

// Problem construction shared by solve/train: either a synthetic
// instance from [problem] parameters or a saved manifest.
BenchInstance instance_from_config(const Config& cfg, uint64_t seed) {
    if (cfg.has("problem", "manifest")) {
        BenchInstance inst;
        inst.problem = load_problem(cfg.get("problem", "manifest"));
        RngState rng(seed);
        RngState rs = rng.split("source");
        const GridSpec& g = inst.problem->grid();
        const double cx = rs.uniform() * g.lx, cy = rs.uniform() * g.ly;
        inst.source = to_complex(
            gaussian_bump(g, cx, cy, (0.05 + 0.10 * rs.uniform()) * g.lx, 1.0));
        return inst;
    }
    const std::string family = cfg.get_or("problem", "family", "helmholtz");
    const int n = cfg.get_int("problem", "n", 64);
    const double ppw = cfg.get_double("problem", "ppw", 12.0);
    const double contrast = cfg.get_double("problem", "contrast", 2.0);
    return make_bench_instance(family, n, ppw, contrast, seed, nullptr);
}

CorrectionMap map_from_config(const Config& cfg, const Problem& p) {
    const std::string spec = cfg.get_or("solve", "map", "optimal_scalar");
    if (spec == "optimal_scalar") return OptimalScalarMap{OptMetric::Euclidean};
    if (spec == "optimal_scalar_reta") return OptimalScalarMap{OptMetric::REta};
    if (spec == "scalar")
        return ScalarMap{cplx(cfg.get_double("solve", "gamma_re", 1.0),
                              cfg.get_double("solve", "gamma_im", 0.0))};
    return load_map(spec, p);  // path to a trained map file
}

int cmd_verify(const std::string& suite, uint64_t seed, const std::string& out_dir) {
    emit_manifest(out_dir, "verify", "", seed);
    std::vector<std::string> suites =
        suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
    bool ok = true;
    for (const std::string& s : suites) {
        const VerifyReport rep = run_verify_suite(s, seed);
        print_report(std::cout, rep);
        write_report_csv((fs::path(out_dir) / ("verify_" + s + ".csv")).string(), rep);
        ok = ok && rep.all_passed();
    }
    std::cout << (ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_solve(const std::string& config_path, uint64_t seed, const std::string& out_dir,
              const std::string& map_override) {
    const Config cfg = Config::parse_file(config_path);
    emit_manifest(out_dir, "solve", config_path, seed);

    if (cfg.get_or("problem", "family", "helmholtz") == "newton_outer") {
        // outer Newton run: oracle or preconditioned inner solves
        const int n = cfg.get_int("problem", "n", 63);
        NewtonConfig nc;
        nc.s = cfg.get_double("problem", "s", 1600.0);
        nc.outer_tol = cfg.get_double("solve", "outer_tol", 1e-8);
        nc.max_outer = cfg.get_int("solve", "max_outer", 25);
        nc.oracle = cfg.get_bool("solve", "oracle", false);
        nc.inner.rtol = cfg.get_double("solve", "inner_rtol", 1e-4);
        nc.inner.max_iters = cfg.get_int("solve", "inner_max_iters", 2000);
        if (!map_override.empty()) {
            RealField dummy(newton_grid(n));
            auto proto = make_newton_jacobian(dummy);
            nc.inner_map = load_map(map_override, *proto);
        }

        RngState rng(seed);
        RngState rs = rng.split("start");
        RealField u0 = sine_noise(newton_grid(n), 4, 0.1, cfg.get_double("problem", "alpha0", 4.0), rs);
        const NewtonTrace tr = solve_newton(u0, nc);
        write_newton_csv((fs::path(out_dir) / "newton.csv").string(), tr);
        save_field((fs::path(out_dir) / "solution.bpfd").string(), tr.u);
        std::cout << "newton outer steps: " << tr.outer_residual.size() - 1
                  << "  final ||F||: " << tr.outer_residual.back()
                  << (tr.converged ? "  (converged)" : "  (not converged)") << "\n";
        return 0;
    }

    BenchInstance inst = instance_from_config(cfg, seed);
    IterationConfig ic;
    ic.format = parse_format(cfg.get_or("solve", "format", "npbs"));
    ic.rtol = cfg.get_double("solve", "rtol", 1e-6);
    ic.max_iters = cfg.get_int("solve", "max_iters", 5000);

    CorrectionMap map = map_override.empty() ? map_from_config(cfg, *inst.problem)
                                             : CorrectionMap{load_map(map_override, *inst.problem)};

    const RunResult rr = run(*inst.problem, map, inst.source, ic);
    write_trace_csv((fs::path(out_dir) / "trace.csv").string(), rr.trace);
    save_field((fs::path(out_dir) / "solution.bpfd").string(), rr.u);
    save_problem(out_dir, "instance", *inst.problem);
    std::cout << "format " << format_name(ic.format) << "  map " << map_kind_name(map)
              << "  iters " << rr.trace.iters << "  final rel res "
              << rr.trace.res_l2_rel.back() << "  (" << termination_name(rr.trace.terminated)
              << ")\n";
    return 0;
}

int cmd_train(const std::string& config_path, uint64_t seed, const std::string& out_dir) {
    const Config cfg = Config::parse_file(config_path);
    emit_manifest(out_dir, "train", config_path, seed);

    const std::string family = cfg.get_or("train", "family", "helmholtz");
    const LossKind kind = parse_loss(cfg.get_or("train", "loss", "bs_reta"));
    TrainConfig tc;
    tc.epochs = cfg.get_int("train", "epochs", 400);
    tc.batch = cfg.get_int("train", "batch", 32);
    tc.step_size = cfg.get_double("train", "step_size", 1.0);
    tc.step_decay = cfg.get_double("train", "step_decay", 0.5);
    tc.seed = seed;

    std::vector<ProblemPtr> problems;
    ProbeDistribution dist;
    RngState rng(seed);

    if (family == "newton") {
        // replay set harvested from oracle trajectories
        const int n = cfg.get_int("train", "n", 63);
        const double s = cfg.get_double("train", "s", 1600.0);
        const int starts = cfg.get_int("train", "starts", 3);
        NewtonConfig nc;
        nc.s = s;
        nc.oracle = true;

        const NewtonTrace ref = solve_newton(RealField(newton_grid(n)), nc);
        std::vector<RealField> states;
        for (int k = 0; k < starts; ++k) {
            RngState rs = rng.split("start").split(static_cast<uint64_t>(k));
            RealField u0 = ref.u;
            RealField noise = sine_noise(newton_grid(n), 4, 0.1, 4.0, rs);
            for (size_t i = 0; i < u0.size(); ++i) u0.data[i] += noise.data[i];
            const NewtonTrace tr = solve_newton(u0, nc);
            states.insert(states.end(), tr.states.begin(), tr.states.end());
        }
        dist.kind = ProbeDistribution::Kind::ResidualReplay;
        dist.replay = harvest_newton_replay(states, s, 0.0);
    } else {
        const int n = cfg.get_int("train", "n", 64);
        const int instances = cfg.get_int("train", "instances", 4);
        const double ppw = cfg.get_double("train", "ppw", 12.0);
        const double contrast = cfg.get_double("train", "contrast", 2.0);
        FamilyFreeze freeze;
        for (int i = 0; i < instances; ++i) {
            BenchInstance inst = make_bench_instance(
                family, n, ppw, contrast, rng.split("train").split(static_cast<uint64_t>(i)).seed,
                &freeze);
            problems.push_back(inst.problem);
        }
    }

    std::vector<TrainLogEntry> log;
    const FourierDiagMap map = train_map(kind, problems, dist, tc, &log);
    save_map((fs::path(out_dir) / ("map_" + loss_name(kind) + ".bpfd")).string(), map);
    write_train_log_csv((fs::path(out_dir) / "train_log.csv").string(), log);
    std::cout << "trained " << loss_name(kind) << " map (" << family << "), "
              << (log.empty() ? 0.0 : log.back().loss) << " final surrogate loss, "
              << log.size() << " accepted steps\n";
    return 0;
}

int cmd_bench(const std::string& config_path, uint64_t seed, const std::string& out_dir) {
    const Config cfg = Config::parse_file(config_path);
    emit_manifest(out_dir, "bench", config_path, seed);

    SweepConfig sc;
    sc.family = cfg.get_or("bench", "family", "helmholtz");
    sc.n = cfg.get_int("bench", "n", 64);
    if (cfg.has("bench", "ppw")) sc.ppw = cfg.get_double_list("bench", "ppw");
    if (cfg.has("bench", "contrast")) sc.contrast = cfg.get_double_list("bench", "contrast");
    if (cfg.has("bench", "rtol")) sc.rtol = cfg.get_double_list("bench", "rtol");
    if (cfg.has("bench", "methods")) sc.methods = cfg.get_list("bench", "methods");
    sc.samples = cfg.get_int("bench", "samples", 20);
    sc.train_instances = cfg.get_int("bench", "train_instances", 4);
    sc.train.epochs = cfg.get_int("bench", "epochs", 400);
    sc.train.batch = cfg.get_int("bench", "batch", 32);
    sc.max_iters = cfg.get_int("bench", "max_iters", 20000);
    sc.seed = seed;

    const std::vector<BenchRow> rows = run_sweep(sc, &std::cerr);
    write_bench_csv((fs::path(out_dir) / "bench.csv").string(), rows);
    std::cout << "bench: " << rows.size() << " cells written\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral Born-series preconditioning toolkit"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    std::string out_dir = "out";
    std::string config_path;
    std::string suite = "all";
    std::string map_file;

    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("suite", suite, "identity|spectral|riesz|gradient|transforms|all");
    verify->add_option("--seed", seed);
    verify->add_option("--out", out_dir);

    auto* solve = app.add_subcommand("solve", "run one solver instance");
    solve->add_option("--config", config_path)->required();
    solve->add_option("--seed", seed);
    solve->add_option("--out", out_dir);
    solve->add_option("--map", map_file, "trained map file");

    auto* train = app.add_subcommand("train", "train a correction map");
    train->add_option("--config", config_path)->required();
    train->add_option("--seed", seed);
    train->add_option("--out", out_dir);

    auto* bench = app.add_subcommand("bench", "run a benchmark sweep");
    bench->add_option("--config", config_path)->required();
    bench->add_option("--seed", seed);
    bench->add_option("--out", out_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(suite, seed, out_dir);
        if (solve->parsed()) return cmd_solve(config_path, seed, out_dir, map_file);
        if (train->parsed()) return cmd_train(config_path, seed, out_dir);
        if (bench->parsed()) return cmd_bench(config_path, seed, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
