#include "fraclab/optim.hpp"

#include <cmath>

namespace fraclab {

void RunConfig::validate(const Objective& obj) const {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw ConfigError("RunConfig: eta must be finite and positive");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("RunConfig: sigma must be finite and >= 0");
    }
    if (steps < 1) throw ConfigError("RunConfig: steps must be >= 1");
    if (init.size() != obj.dim) {
        throw ConfigError("RunConfig: init dimension " + std::to_string(init.size()) +
                          " does not match objective dimension " + std::to_string(obj.dim));
    }
}

FpgdRunner::FpgdRunner(Objective obj, RunConfig cfg, PerturbationKind kind,
                       FgnMethod method)
    : obj_(std::move(obj)), cfg_(std::move(cfg)), kind_(kind) {
    cfg_.validate(obj_);
    const double H = kind_.type == PerturbationKind::Type::kFractional
                         ? kind_.h.value().value()
                         : 0.0;
    sigma_eff_ = cfg_.normalize_variance
                     ? cfg_.sigma * std::pow(static_cast<double>(cfg_.steps), -H)
                     : cfg_.sigma;
    if (kind_.type == PerturbationKind::Type::kFractional) {
        step_scale_ = std::pow(cfg_.eta, H);
        if (sigma_eff_ > 0.0) {
            sampler_ = std::make_unique<FgnSampler>(cfg_.steps, kind_.h.value(), method);
        }
    }
}

Trajectory FpgdRunner::run(const SeedStream& seed) const {
    const int d = obj_.dim;
    const std::size_t n = cfg_.steps;

    // Pre-sample the whole noise sequence per coordinate; exact joint law.
    Eigen::MatrixXd pert;  // d x n
    if (sigma_eff_ > 0.0) {
        pert.resize(d, static_cast<Eigen::Index>(n));
        if (kind_.type == PerturbationKind::Type::kFractional) {
            std::vector<double> buf(n);
            const double scale = sigma_eff_ * step_scale_;
            for (int j = 0; j < d; ++j) {
                sampler_->sample_into(seed.substream(static_cast<std::uint64_t>(j)), buf);
                for (std::size_t k = 0; k < n; ++k) {
                    pert(j, static_cast<Eigen::Index>(k)) = scale * buf[k];
                }
            }
        } else {
            for (int j = 0; j < d; ++j) {
                RandomStream rng(seed.substream(static_cast<std::uint64_t>(j)));
                double prev = rng.normal();  // zeta_0
                for (std::size_t k = 0; k < n; ++k) {
                    const double next = rng.normal();
                    pert(j, static_cast<Eigen::Index>(k)) = sigma_eff_ * (next - prev);
                    prev = next;
                }
            }
        }
    }

    Trajectory traj;
    traj.losses.reserve(n + 1);
    if (cfg_.record_states) {
        traj.iterates.resize(static_cast<Eigen::Index>(n + 1), d);
    }
    Eigen::VectorXd x = cfg_.init;
    traj.losses.push_back(obj_.value(x));
    if (cfg_.record_states) traj.iterates.row(0) = x.transpose();

    std::size_t taken = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::VectorXd next = x - cfg_.eta * obj_.gradient(x);
        if (sigma_eff_ > 0.0) next += pert.col(static_cast<Eigen::Index>(k));
        if (!next.allFinite()) {
            traj.diverged = true;
            break;
        }
        x = std::move(next);
        ++taken;
        traj.losses.push_back(obj_.value(x));
        if (cfg_.record_states) {
            traj.iterates.row(static_cast<Eigen::Index>(taken)) = x.transpose();
        }
    }
    traj.steps_taken = taken;
    if (cfg_.record_states && taken < n) {
        traj.iterates.conservativeResize(static_cast<Eigen::Index>(taken + 1), d);
    }
    return traj;
}

Trajectory run_fpgd(const Objective& obj, const RunConfig& cfg,
                    const PerturbationKind& kind, const SeedStream& seed) {
    return FpgdRunner(obj, cfg, kind).run(seed);
}

Trajectory run_pgd(const Objective& obj, const RunConfig& cfg, const SeedStream& seed) {
    return run_fpgd(obj, cfg, PerturbationKind::fractional(HurstParameter(0.5)), seed);
}

Trajectory run_anti_pgd(const Objective& obj, const RunConfig& cfg,
                        const SeedStream& seed) {
    return run_fpgd(obj, cfg, PerturbationKind::anti_white(), seed);
}

}  // namespace fraclab
