#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "fraclab/noise.hpp"
#include "fraclab/rng.hpp"

namespace fraclab {

// Linear SDE dX = drift * X dt + sigma dB^H, X_0 = init, simulated on a
// uniform grid of `steps` Euler-Maruyama steps over [0, horizon]. Each
// coordinate is driven by an independent fBM.
//
// Sign convention: the drift matrix enters as written (dX = A X dt). The
// scalar helper stores beta with dX = beta X dt; the mean-reverting process
// with rate beta > 0 is obtained by passing -beta.
struct FouSystem {
    Eigen::MatrixXd drift;
    double sigma = 1.0;
    Eigen::VectorXd init;
    double horizon = 1.0;
    std::size_t steps = 1;
    HurstParameter h;

    static FouSystem scalar(double beta, double sigma, double x0, double horizon,
                            std::size_t steps, HurstParameter h);
    void validate() const;
    Eigen::Index dim() const { return drift.rows(); }
};

struct PathMatrix {
    Eigen::VectorXd times;   // length steps+1, uniform, times[0]=0, times[n]=horizon
    Eigen::MatrixXd states;  // (steps+1) x d
};

// Reusable simulator: the fGN sampler for (steps, H) is built once and shared
// across replicates; run() is pure given its seed (coordinate j draws from
// seed.substream(j)).
class FouSimulator {
public:
    FouSimulator(FouSystem system, FgnMethod method = FgnMethod::kCirculant);
    PathMatrix run(const SeedStream& seed) const;
    const FouSystem& system() const { return system_; }

private:
    FouSystem system_;
    FgnSampler sampler_;
};

PathMatrix simulate_fou(const FouSystem& system, const SeedStream& seed,
                        FgnMethod method = FgnMethod::kCirculant);

// The two-integral variance expression
//   sigma^2 H [ e^{-2 beta t} I(+beta) + e^{-2 beta s} I(-beta) ],
//   I(b) = integral_0^{t-s} z^{2H-1} e^{b z} dz,
// evaluated by adaptive quadrature after the substitution z = u^{1/(2H)},
// which removes the z^{2H-1} endpoint singularity. Absolute tolerance 1e-10.
//
// At s = 0 this is exactly Var[X_t] for dX = -beta X dt + sigma dB^H, X_0=0
// (so the oracle pairs with simulate_fou via drift = -beta), and it satisfies
// the identity F(t,s) = e^{-2 beta s} F(t-s, 0).
double fou_increment_variance(double t, double s, double beta, double sigma,
                              HurstParameter h);

// Subtracts the noise-free (sigma = 0) trajectory of the same system,
// computed by re-running the same discrete recursion.
PathMatrix centered_path(const PathMatrix& path, const FouSystem& system);

}  // namespace fraclab
