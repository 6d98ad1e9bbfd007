#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bp/iterate.hpp"
#include "bp/train.hpp"

namespace bp {

/// One solver configuration in a sweep. Method names:
///   cbs          — CBS with the per-step optimal scalar (classical baseline)
///   direct_dir   — direct iteration, FourierDiag trained on the Dir loss
///   npbs_bs_l2   — NPBS, FourierDiag trained on the BsL2 loss
///   npbs_bs_reta — NPBS, FourierDiag trained on the BsReta loss
struct BenchMethod {
    std::string name;
    IterFormat format = IterFormat::CBS;
    std::optional<LossKind> loss;  // set for trained-map methods
};

BenchMethod parse_method(const std::string& name);

struct SweepConfig {
    std::string family = "helmholtz";  // helmholtz | cdr
    int n = 64;
    std::vector<double> ppw = {12.0};      // helmholtz cells
    std::vector<double> contrast = {2.0};  // helmholtz cells
    std::vector<double> rtol = {1e-6};
    std::vector<std::string> methods = {"cbs", "direct_dir", "npbs_bs_l2", "npbs_bs_reta"};
    int samples = 20;
    int train_instances = 4;
    TrainConfig train{400, 32, 1.0, 0.5, 0};
    int max_iters = 20000;
    uint64_t seed = 0;
};

struct BenchRow {
    std::string family;
    int n = 0;
    double ppw = 0.0;
    double contrast = 0.0;
    double rtol = 0.0;
    std::string method;
    int samples = 0;
    int converged = 0;
    double avg_iters = 0.0;
    double median_iters = 0.0;
    int min_iters = 0;
    int max_iters = 0;
    double avg_final_res = 0.0;
    double ratio = 0.0;  // direct_dir iters / npbs_bs_reta iters, per cell
};

/// A problem instance paired with its source, reproducible from the
/// sweep seed. The reference operator (k0/eta, or the CDR backgrounds)
/// is frozen across a cell so trained maps and evaluation instances
/// share one Green operator family.
struct BenchInstance {
    ProblemPtr problem;
    ComplexField source;
};

struct FamilyFreeze {
    double k0_sq = 0.0, eta = 0.0;                      // helmholtz
    double kappa0 = 0.0, sigma0 = 0.0;                  // cdr
    bool set = false;
};

BenchInstance make_bench_instance(const std::string& family, int n, double ppw, double contrast,
                                  uint64_t seed, FamilyFreeze* freeze);

std::vector<BenchRow> run_sweep(const SweepConfig& cfg, std::ostream* progress = nullptr);

void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows);

}  // namespace bp
