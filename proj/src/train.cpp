#include "bp/train.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "bp/kernels.hpp"
#include "bp/transforms.hpp"

namespace bp {

std::string loss_name(LossKind k) {
    switch (k) {
        case LossKind::Dir: return "dir";
        case LossKind::BsL2: return "bs_l2";
        case LossKind::BsReta: return "bs_reta";
    }
    return "?";
}

LossKind parse_loss(const std::string& name) {
    if (name == "dir") return LossKind::Dir;
    if (name == "bs_l2") return LossKind::BsL2;
    if (name == "bs_reta") return LossKind::BsReta;
    throw std::invalid_argument("unknown loss kind: " + name);
}

std::vector<TrainSample> make_training_batch(const std::vector<ProblemPtr>& problems,
                                             const ProbeDistribution& dist, int batch,
                                             RngState& rng) {
    if (batch < 1) throw std::invalid_argument("make_training_batch: batch must be >= 1");
    std::vector<TrainSample> out;
    out.reserve(static_cast<size_t>(batch));
    if (dist.kind == ProbeDistribution::Kind::ResidualReplay) {
        if (dist.replay.empty())
            throw std::invalid_argument("make_training_batch: empty replay buffer");
        for (int i = 0; i < batch; ++i) {
            const size_t idx = static_cast<size_t>(rng.uniform() * dist.replay.size());
            out.push_back(dist.replay[std::min(idx, dist.replay.size() - 1)]);
        }
        return out;
    }
    if (problems.empty()) throw std::invalid_argument("make_training_batch: no problems");
    for (int i = 0; i < batch; ++i) {
        const ProblemPtr& p = problems[static_cast<size_t>(i) % problems.size()];
        ComplexField probe(p->grid());
        for (cplx& v : probe.data) v = cplx(rng.normal(), rng.normal());
        out.push_back({p, std::move(probe)});
    }
    return out;
}

namespace {

struct ProbeTerm {
    ComplexField err;   // residual of the learned action
    double denom_sq;    // squared denominator of the ratio
};

// Per-probe residual of the learned action for one loss kind.
ProbeTerm loss_term(LossKind kind, const Problem& p, const CorrectionMap& map,
                    const ComplexField& r) {
    const double rsq = kernels::norm2sq(r.data);
    if (rsq <= 0.0) throw std::invalid_argument("loss: zero probe");
    CorrectionContext ctx{&p, &r};

    switch (kind) {
        case LossKind::Dir: {
            ComplexField e = p.apply_A(apply_correction(map, r, ctx));
            kernels::sub(e.data, r.data, e.data);
            return {std::move(e), rsq};
        }
        case LossKind::BsL2: {
            ComplexField y = p.apply_G(r);
            ComplexField e = p.apply_A(apply_correction(map, y, ctx));
            kernels::sub(e.data, r.data, e.data);
            return {std::move(e), rsq};
        }
        case LossKind::BsReta: {
            ComplexField y = p.apply_G(r);
            const double ysq = kernels::norm2sq(y.data);
            if (ysq <= 0.0) throw std::invalid_argument("loss: zero preconditioned probe");
            ComplexField z = apply_correction(map, y, ctx);
            ComplexField gv = p.apply_G(p.apply_V(z));
            ComplexField e = z;
            kernels::sub(e.data, gv.data, e.data);  // (I - GV) z
            kernels::sub(e.data, y.data, e.data);
            return {std::move(e), ysq};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

double eval_loss(LossKind kind, const Problem& p, const CorrectionMap& map,
                 std::span<const ComplexField> probes) {
    if (probes.empty()) throw std::invalid_argument("eval_loss: empty probe set");
    double acc = 0.0;
    for (const ComplexField& r : probes) {
        ProbeTerm t = loss_term(kind, p, map, r);
        acc += std::sqrt(kernels::norm2sq(t.err.data) / t.denom_sq);
    }
    return acc / static_cast<double>(probes.size());
}

double eval_loss_riesz_form(const Problem& p, const CorrectionMap& map,
                            std::span<const ComplexField> probes) {
    if (probes.empty()) throw std::invalid_argument("eval_loss_riesz_form: empty probe set");
    double acc = 0.0;
    for (const ComplexField& r : probes) {
        CorrectionContext ctx{&p, &r};
        ComplexField y = p.apply_G(r);
        const double yn = kernels::norm2(y.data);
        if (yn <= 0.0) throw std::invalid_argument("loss: zero preconditioned probe");
        ComplexField e = p.apply_A(apply_correction(map, y, ctx));
        kernels::sub(e.data, r.data, e.data);
        acc += kernels::norm2(p.apply_G(e).data) / yn;
    }
    return acc / static_cast<double>(probes.size());
}

double eval_loss(LossKind kind, std::span<const TrainSample> samples, const CorrectionMap& map) {
    if (samples.empty()) throw std::invalid_argument("eval_loss: empty sample set");
    double acc = 0.0;
    for (const TrainSample& s : samples) {
        ProbeTerm t = loss_term(kind, *s.problem, map, s.probe);
        acc += std::sqrt(kernels::norm2sq(t.err.data) / t.denom_sq);
    }
    return acc / static_cast<double>(samples.size());
}

double eval_loss_squared(LossKind kind, std::span<const TrainSample> samples,
                         const FourierDiagMap& map) {
    if (samples.empty()) throw std::invalid_argument("eval_loss_squared: empty sample set");
    double acc = 0.0;
    for (const TrainSample& s : samples) {
        ProbeTerm t = loss_term(kind, *s.problem, CorrectionMap{map}, s.probe);
        acc += kernels::norm2sq(t.err.data) / t.denom_sq;
    }
    return acc / static_cast<double>(samples.size());
}

namespace {

// Gradient of ||Op(T^{-1}(m . T x)) - t||^2 / d with respect to m-bar:
//   g = diag(conj(T x)) . T^{-H} . Op^H e / d,
// with T^{-H} the adjoint of the inverse transform. Gradients over the
// real parameterization (Re m, Im m) are (2 Re g, 2 Im g).
void accumulate_gradient(LossKind kind, const Problem& p, const FourierDiagMap& map,
                         const ComplexField& r, std::vector<cplx>& g) {
    const GridSpec& grid = p.grid();
    ComplexField input(grid);
    switch (kind) {
        case LossKind::Dir: input = r; break;
        default: input = p.apply_G(r); break;
    }
    std::vector<cplx> modes = forward_transform(input, map.kind);

    ProbeTerm t = loss_term(kind, p, CorrectionMap{map}, r);

    ComplexField w(grid);
    if (kind == LossKind::BsReta) {
        // Op = I - GV, Op^H = I - V^H G^H
        ComplexField vh = p.apply_V_adjoint(p.apply_G_adjoint(t.err));
        w = t.err;
        kernels::sub(w.data, vh.data, w.data);
    } else {
        w = p.apply_A_adjoint(t.err);
    }
    std::vector<cplx> v = inverse_transform_adjoint(w, map.kind);
    const double inv_d = 1.0 / t.denom_sq;
    for (size_t k = 0; k < g.size(); ++k) g[k] += std::conj(modes[k]) * v[k] * inv_d;
}

}  // namespace

std::vector<double> loss_gradient(LossKind kind, std::span<const TrainSample> samples,
                                  const FourierDiagMap& map) {
    if (samples.empty()) throw std::invalid_argument("loss_gradient: empty sample set");
    const size_t n = map.m.size();
    std::vector<cplx> g(n, cplx{0.0, 0.0});
    for (const TrainSample& s : samples) accumulate_gradient(kind, *s.problem, map, s.probe, g);
    const double scale = 2.0 / static_cast<double>(samples.size());
    std::vector<double> grad(2 * n);
    for (size_t k = 0; k < n; ++k) {
        grad[k] = scale * g[k].real();
        grad[n + k] = scale * g[k].imag();
    }
    return grad;
}

std::vector<double> loss_gradient(LossKind kind, const Problem& p, const FourierDiagMap& map,
                                  std::span<const ComplexField> probes) {
    if (probes.empty()) throw std::invalid_argument("loss_gradient: zero probes batch");
    std::vector<TrainSample> samples;
    samples.reserve(probes.size());
    for (const ComplexField& r : probes) {
        // non-owning alias; the caller keeps p alive for the call
        TrainSample s;
        s.problem = ProblemPtr(&p, [](const Problem*) {});
        s.probe = r;
        samples.push_back(std::move(s));
    }
    return loss_gradient(kind, samples, map);
}

FourierDiagMap train_map(LossKind kind, const std::vector<ProblemPtr>& problems,
                         const ProbeDistribution& dist, const TrainConfig& cfg,
                         std::vector<TrainLogEntry>* log) {
    if (cfg.epochs < 0 || cfg.batch < 1 || cfg.step_size <= 0.0)
        throw std::invalid_argument("train_map: invalid config");
    if (problems.empty() && dist.kind == ProbeDistribution::Kind::ComplexWhiteNoise)
        throw std::invalid_argument("train_map: no problems to sample");

    const Problem& proto = dist.kind == ProbeDistribution::Kind::ResidualReplay && !dist.replay.empty()
                               ? *dist.replay.front().problem
                               : *problems.front();
    FourierDiagMap map = make_identity_fourier_diag(proto);
    if (cfg.epochs == 0) return map;

    RngState rng(cfg.seed);
    const std::vector<TrainSample> batch = make_training_batch(problems, dist, cfg.batch, rng);

    const size_t n = map.m.size();
    double loss = eval_loss_squared(kind, batch, map);
    if (!std::isfinite(loss)) throw std::runtime_error("train_map: non-finite initial loss");
    double step = cfg.step_size;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const std::vector<double> grad = loss_gradient(kind, batch, map);
        double gnorm_sq = 0.0;
        for (double g : grad) gnorm_sq += g * g;
        if (gnorm_sq == 0.0) break;

        FourierDiagMap trial = map;
        double trial_loss = 0.0;
        bool accepted = false;
        for (int back = 0; back < 60; ++back) {
            for (size_t k = 0; k < n; ++k)
                trial.m[k] = map.m[k] - step * cplx(grad[k], grad[n + k]);
            trial_loss = eval_loss_squared(kind, batch, trial);
            if (!std::isfinite(trial_loss))
                throw std::runtime_error("train_map: non-finite loss at epoch " +
                                         std::to_string(epoch));
            if (trial_loss <= loss) {
                accepted = true;
                break;
            }
            step *= cfg.step_decay;
            if (step < 1e-18) break;
        }
        if (!accepted) break;  // plateau: no descent direction at machine step
        map = std::move(trial);
        loss = trial_loss;
        if (log) log->push_back({epoch, loss, step});
    }
    return map;
}

void write_train_log_csv(const std::string& path, const std::vector<TrainLogEntry>& log) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "step,loss,step_size\n";
    for (const auto& e : log) out << e.step << ',' << e.loss << ',' << e.step_size << '\n';
}

}  // namespace bp
