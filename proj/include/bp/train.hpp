#pragma once

#include <span>
#include <vector>

#include "bp/correction.hpp"
#include "bp/problem.hpp"
#include "bp/rng.hpp"

namespace bp {

/// The three training objectives. Dir measures the raw residual of the
/// learned inverse action; BsL2 feeds preconditioned inputs G r but
/// keeps the Euclidean residual metric; BsReta measures the residual of
/// the preconditioned system itself (integral form (I-GV) M(Gr) - Gr).
enum class LossKind { Dir, BsL2, BsReta };

std::string loss_name(LossKind k);
LossKind parse_loss(const std::string& name);

/// A probe paired with the system it was drawn for (Newton replay sets
/// carry per-state problems; single-problem training repeats one).
struct TrainSample {
    ProblemPtr problem;
    ComplexField probe;
};

struct ProbeDistribution {
    enum class Kind { ComplexWhiteNoise, ResidualReplay };
    Kind kind = Kind::ComplexWhiteNoise;
    std::vector<TrainSample> replay;  // required non-empty for ResidualReplay
};

std::vector<TrainSample> make_training_batch(const std::vector<ProblemPtr>& problems,
                                             const ProbeDistribution& dist, int batch,
                                             RngState& rng);

/// Mean over probes of the per-probe relative residual (the displayed,
/// unsquared ratio).
double eval_loss(LossKind kind, const Problem& p, const CorrectionMap& map,
                 std::span<const ComplexField> probes);

/// BsReta evaluated through the Riesz form ||G(A M(Gr) - r)|| / ||Gr||;
/// must agree with eval_loss(BsReta, ...) on identical probes.
double eval_loss_riesz_form(const Problem& p, const CorrectionMap& map,
                            std::span<const ComplexField> probes);

double eval_loss(LossKind kind, std::span<const TrainSample> samples, const CorrectionMap& map);

/// Training surrogate: mean over probes of the squared relative
/// residual (same minimizers per probe, smooth at zero).
double eval_loss_squared(LossKind kind, std::span<const TrainSample> samples,
                         const FourierDiagMap& map);

/// Gradient of the squared surrogate with respect to (Re m, Im m),
/// flattened [d/dRe..., d/dIm...]; length 2 * n_modes.
std::vector<double> loss_gradient(LossKind kind, const Problem& p, const FourierDiagMap& map,
                                  std::span<const ComplexField> probes);
std::vector<double> loss_gradient(LossKind kind, std::span<const TrainSample> samples,
                                  const FourierDiagMap& map);

struct TrainConfig {
    int epochs = 200;
    int batch = 32;
    double step_size = 1.0;
    double step_decay = 0.5;  // backtracking factor on loss increase
    uint64_t seed = 0;
};

struct TrainLogEntry {
    int step;
    double loss;       // squared surrogate after the accepted update
    double step_size;
};

/// Full-batch gradient descent from the identity map on a fixed batch
/// drawn from the distribution; the step size is halved (step_decay)
/// whenever a step would increase the loss, so the recorded loss curve
/// is non-increasing. Deterministic in config.seed.
FourierDiagMap train_map(LossKind kind, const std::vector<ProblemPtr>& problems,
                         const ProbeDistribution& dist, const TrainConfig& cfg,
                         std::vector<TrainLogEntry>* log = nullptr);

void write_train_log_csv(const std::string& path, const std::vector<TrainLogEntry>& log);

}  // namespace bp
