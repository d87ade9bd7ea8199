#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "fraclab/noise.hpp"
#include "fraclab/objectives.hpp"
#include "fraclab/rng.hpp"

namespace fraclab {

// Noise family driving the optimizer: exact fBM increments for H in (0,1),
// or the H-to-0 limit realized as differences of i.i.d. standard normals.
struct PerturbationKind {
    enum class Type { kFractional, kAntiWhite };
    Type type = Type::kFractional;
    std::optional<HurstParameter> h;

    static PerturbationKind fractional(HurstParameter hurst) {
        return PerturbationKind{Type::kFractional, hurst};
    }
    static PerturbationKind anti_white() {
        return PerturbationKind{Type::kAntiWhite, std::nullopt};
    }
};

struct RunConfig {
    double eta = 0.0;
    double sigma = 0.0;
    std::size_t steps = 1;
    Eigen::VectorXd init;
    // If set, the effective noise scale is sigma * steps^-H, equalizing the
    // total injected variance across Hurst parameters (AntiWhite uses H = 0,
    // i.e. no rescaling).
    bool normalize_variance = false;
    // Sweeps over high-dimensional landscapes can drop per-step states and
    // keep only the loss series.
    bool record_states = true;

    void validate(const Objective& obj) const;
};

// Optimizer run record. iterates has steps_taken+1 rows when states are
// recorded (empty otherwise); losses always has steps_taken+1 entries. A run
// that produced a non-finite iterate halts early with diverged = true and the
// series truncated at the last finite iterate.
struct Trajectory {
    Eigen::MatrixXd iterates;
    std::vector<double> losses;
    bool diverged = false;
    std::size_t steps_taken = 0;
};

// x_{n+1} = x_n - eta * grad f(x_n) + perturbation_n, with
//   Fractional(H): perturbation = sigma_eff * eta^H * xi_n per coordinate,
//                  (xi_n) unit-spacing fGN, independent across coordinates
//                  (self-similarity realizes fBM increments at spacing eta);
//   AntiWhite:     perturbation = sigma_eff * (zeta_{n+1} - zeta_n),
//                  zeta i.i.d. standard normal per coordinate (zeta_0 drawn
//                  too, so the first perturbation is already a difference).
//
// FpgdRunner precomputes the fGN sampler once; run() is pure given its seed
// (coordinate j draws from seed.substream(j)).
class FpgdRunner {
public:
    FpgdRunner(Objective obj, RunConfig cfg, PerturbationKind kind,
               FgnMethod method = FgnMethod::kCirculant);
    Trajectory run(const SeedStream& seed) const;

    const Objective& objective() const { return obj_; }
    const RunConfig& config() const { return cfg_; }
    double effective_sigma() const { return sigma_eff_; }

private:
    Objective obj_;
    RunConfig cfg_;
    PerturbationKind kind_;
    double sigma_eff_ = 0.0;
    double step_scale_ = 1.0;  // eta^H for fractional noise
    std::unique_ptr<FgnSampler> sampler_;
};

Trajectory run_fpgd(const Objective& obj, const RunConfig& cfg,
                    const PerturbationKind& kind, const SeedStream& seed);

// PGD is fPGD at H = 1/2 (bit-identical under the same seed).
Trajectory run_pgd(const Objective& obj, const RunConfig& cfg, const SeedStream& seed);

// Anti-PGD is the AntiWhite case.
Trajectory run_anti_pgd(const Objective& obj, const RunConfig& cfg,
                        const SeedStream& seed);

}  // namespace fraclab
