#include "bp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "bp/cdr.hpp"
#include "bp/helmholtz.hpp"
#include "bp/kernels.hpp"
#include "bp/samplers.hpp"

namespace bp {

BenchMethod parse_method(const std::string& name) {
    if (name == "cbs") return {name, IterFormat::CBS, std::nullopt};
    if (name == "direct_dir") return {name, IterFormat::Direct, LossKind::Dir};
    if (name == "npbs_bs_l2") return {name, IterFormat::NPBS, LossKind::BsL2};
    if (name == "npbs_bs_reta") return {name, IterFormat::NPBS, LossKind::BsReta};
    throw std::invalid_argument("unknown bench method: " + name);
}

BenchInstance make_bench_instance(const std::string& family, int n, double ppw, double contrast,
                                  uint64_t seed, FamilyFreeze* freeze) {
    RngState rng(seed);
    BenchInstance inst;
    if (family == "helmholtz") {
        HelmholtzOptions opts;
        if (freeze && freeze->set) {
            opts.k0_sq = freeze->k0_sq;
            opts.eta = freeze->eta;
        }
        RngState rm = rng.split("medium");
        auto p = make_layered_helmholtz(n, ppw, contrast, rm, opts);
        if (freeze && !freeze->set) {
            freeze->k0_sq = p->k0() * p->k0();
            freeze->eta = p->eta();
            freeze->set = true;
        }
        inst.problem = p;
    } else if (family == "cdr") {
        CdrOptions opts;
        if (freeze && freeze->set) {
            opts.kappa0 = freeze->kappa0;
            opts.sigma0 = freeze->sigma0;
        }
        RngState rm = rng.split("medium");
        auto p = make_random_cdr(n, rm, opts);
        if (freeze && !freeze->set) {
            freeze->kappa0 = p->kappa0();
            freeze->sigma0 = p->sigma0();
            freeze->set = true;
        }
        inst.problem = p;
    } else {
        throw std::invalid_argument("unknown bench family: " + family);
    }

    const GridSpec& g = inst.problem->grid();
    RngState rs = rng.split("source");
    const double cx = rs.uniform() * g.lx;
    const double cy = rs.uniform() * g.ly;
    const double width = (0.05 + 0.10 * rs.uniform()) * g.lx;
    inst.source = to_complex(gaussian_bump(g, cx, cy, width, 1.0));
    return inst;
}

namespace {

struct SampleOutcome {
    int iters = 0;
    double final_res = 0.0;
    bool converged = false;
};

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::vector<BenchRow> run_sweep(const SweepConfig& cfg, std::ostream* progress) {
    std::vector<BenchRow> rows;
    RngState root(cfg.seed);

    std::vector<BenchMethod> methods;
    methods.reserve(cfg.methods.size());
    for (const std::string& m : cfg.methods) methods.push_back(parse_method(m));

    // cdr has no ppw/contrast axes; collapse them to a single cell
    const std::vector<double> ppws = cfg.family == "helmholtz" ? cfg.ppw : std::vector<double>{0.0};
    const std::vector<double> contrasts =
        cfg.family == "helmholtz" ? cfg.contrast : std::vector<double>{0.0};

    for (double ppw : ppws) {
        for (double contrast : contrasts) {
            const std::string cell_tag = cfg.family + "/" + std::to_string(ppw) + "/" +
                                         std::to_string(contrast);
            RngState cell_rng = root.split(cell_tag);

            // Freeze the reference operator on the first training instance,
            // then train one map per required loss kind on the training set.
            FamilyFreeze freeze;
            std::vector<ProblemPtr> train_problems;
            for (int i = 0; i < cfg.train_instances; ++i) {
                BenchInstance ti = make_bench_instance(
                    cfg.family, cfg.n, ppw, contrast,
                    cell_rng.split("train").split(static_cast<uint64_t>(i)).seed, &freeze);
                train_problems.push_back(ti.problem);
            }

            std::map<LossKind, FourierDiagMap> trained;
            for (const BenchMethod& m : methods) {
                if (!m.loss || trained.count(*m.loss)) continue;
                TrainConfig tc = cfg.train;
                tc.seed = cell_rng.split("train-seed").seed;
                ProbeDistribution dist;
                trained.emplace(*m.loss, train_map(*m.loss, train_problems, dist, tc));
                if (progress)
                    *progress << "cell " << cell_tag << ": trained " << loss_name(*m.loss)
                              << " map\n";
            }

            // Evaluation instances are shared across methods and rtols.
            std::vector<BenchInstance> evals;
            for (int i = 0; i < cfg.samples; ++i)
                evals.push_back(make_bench_instance(
                    cfg.family, cfg.n, ppw, contrast,
                    cell_rng.split("eval").split(static_cast<uint64_t>(i)).seed, &freeze));

            for (double rtol : cfg.rtol) {
                std::map<std::string, std::vector<SampleOutcome>> outcomes;
                for (const BenchMethod& m : methods) {
                    std::vector<SampleOutcome> per_sample(static_cast<size_t>(cfg.samples));
                    CorrectionMap map = m.loss ? CorrectionMap{trained.at(*m.loss)}
                                               : CorrectionMap{OptimalScalarMap{OptMetric::Euclidean}};
                    IterationConfig ic{m.format, rtol, cfg.max_iters};
#pragma omp parallel for schedule(dynamic) num_threads(parallel::thread_count())
                    for (int i = 0; i < cfg.samples; ++i) {
                        const RunResult rr =
                            run(*evals[static_cast<size_t>(i)].problem, map,
                                evals[static_cast<size_t>(i)].source, ic);
                        per_sample[static_cast<size_t>(i)] = {
                            rr.trace.iters, rr.trace.res_l2_rel.back(),
                            rr.trace.terminated == Termination::Converged};
                    }
                    outcomes[m.name] = std::move(per_sample);
                    if (progress) *progress << "cell " << cell_tag << " rtol " << rtol << ": ran "
                                            << m.name << "\n";
                }

                double ratio = 0.0;
                if (outcomes.count("direct_dir") && outcomes.count("npbs_bs_reta")) {
                    double a = 0.0, b = 0.0;
                    for (const auto& s : outcomes["direct_dir"]) a += s.iters;
                    for (const auto& s : outcomes["npbs_bs_reta"]) b += s.iters;
                    if (b > 0.0) ratio = a / b;
                }

                for (const BenchMethod& m : methods) {
                    const auto& samples = outcomes[m.name];
                    BenchRow row;
                    row.family = cfg.family;
                    row.n = cfg.n;
                    row.ppw = ppw;
                    row.contrast = contrast;
                    row.rtol = rtol;
                    row.method = m.name;
                    row.samples = cfg.samples;
                    std::vector<double> iters;
                    double sum_it = 0.0, sum_res = 0.0;
                    int mn = cfg.max_iters + 1, mx = 0;
                    for (const auto& s : samples) {
                        iters.push_back(s.iters);
                        sum_it += s.iters;
                        sum_res += s.final_res;
                        mn = std::min(mn, s.iters);
                        mx = std::max(mx, s.iters);
                        row.converged += s.converged ? 1 : 0;
                    }
                    row.avg_iters = sum_it / samples.size();
                    row.median_iters = median_of(iters);
                    row.min_iters = mn;
                    row.max_iters = mx;
                    row.avg_final_res = sum_res / samples.size();
                    row.ratio = ratio;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "family,n,ppw,contrast,rtol,method,samples,converged,avg_iters,median_iters,"
           "min_iters,max_iters,avg_final_res,ratio_direct_over_npbs_reta\n";
    for (const auto& r : rows)
        out << r.family << ',' << r.n << ',' << r.ppw << ',' << r.contrast << ',' << r.rtol << ','
            << r.method << ',' << r.samples << ',' << r.converged << ',' << r.avg_iters << ','
            << r.median_iters << ',' << r.min_iters << ',' << r.max_iters << ','
            << r.avg_final_res << ',' << r.ratio << '\n';
}

}  // namespace bp
