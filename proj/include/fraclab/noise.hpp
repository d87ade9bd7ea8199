#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/rng.hpp"

namespace fraclab {

// Hurst exponent, strictly inside (0, 1).
class HurstParameter {
public:
    explicit HurstParameter(double h) : h_(h) {
        if (!(h > 0.0) || !(h < 1.0)) {
            throw ConfigError("Hurst parameter must lie strictly in (0,1), got " +
                              std::to_string(h));
        }
    }
    double value() const { return h_; }

private:
    double h_;
};

// Unit-spacing fractional Gaussian noise draws (fBM increments, variance 1).
struct FgnSequence {
    HurstParameter h;
    std::vector<double> values;
};

// fBM sampled on the grid {k*dt}, values[0] == 0.
struct FbmPath {
    HurstParameter h;
    double dt;
    std::vector<double> values;
};

// Covariance of fBM: (t^2H + s^2H - |t-s|^2H) / 2.
double fbm_cov(double t, double s, HurstParameter h);

// Autocovariance of unit-spacing fGN at lag k >= 0:
// (|k+1|^2H - 2|k|^2H + |k-1|^2H) / 2; equals 1 at k = 0.
double fgn_autocov(std::int64_t k, HurstParameter h);

enum class FgnMethod { kCholesky, kCirculant };

// Exact fGN sampler. Construction precomputes the expensive part (Cholesky
// factor of the Toeplitz covariance, or the circulant embedding spectrum);
// sample() is then cheap and pure given its seed, so one sampler can serve
// many replicates concurrently.
//
// Cholesky is the dense reference method, capped at `cholesky_cap` points.
// Circulant embedding pads to the next power of two >= 2n; the embedding of
// fGN is nonnegative definite, so eigenvalues below -1e-10 (relative to the
// largest) indicate a real failure and raise, while tiny negatives are
// clamped to zero.
class FgnSampler {
public:
    FgnSampler(std::size_t n, HurstParameter h, FgnMethod method,
               std::size_t cholesky_cap = 4096);

    FgnSequence sample(const SeedStream& seed) const;
    void sample_into(const SeedStream& seed, std::span<double> out) const;

    std::size_t size() const { return n_; }
    HurstParameter hurst() const { return h_; }
    FgnMethod method() const { return method_; }

private:
    std::size_t n_;
    HurstParameter h_;
    FgnMethod method_;
    Eigen::MatrixXd chol_;               // lower factor (Cholesky method)
    std::vector<double> sqrt_lambda_;    // circulant spectrum, sqrt(lambda_k)
    std::size_t embed_size_ = 0;
};

// One-shot convenience wrapper around FgnSampler.
FgnSequence sample_fgn(std::size_t n, HurstParameter h, const SeedStream& seed,
                       FgnMethod method);

// Cumulates unit-spacing fGN and rescales by dt^H (self-similarity), so the
// result is distributed as fBM on the grid {k*dt}.
FbmPath fgn_to_path(const FgnSequence& fgn, double dt);

}  // namespace fraclab
