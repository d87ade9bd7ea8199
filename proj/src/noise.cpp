#include "fraclab/noise.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>

namespace fraclab {

double fbm_cov(double t, double s, HurstParameter h) {
    const double twoH = 2.0 * h.value();
    using std::abs;
    using std::pow;
    return 0.5 * (pow(abs(t), twoH) + pow(abs(s), twoH) - pow(abs(t - s), twoH));
}

double fgn_autocov(std::int64_t k, HurstParameter h) {
    if (k < 0) throw ConfigError("fgn_autocov: lag must be >= 0");
    if (k == 0) return 1.0;
    const double twoH = 2.0 * h.value();
    const double kd = static_cast<double>(k);
    return 0.5 * (std::pow(kd + 1.0, twoH) - 2.0 * std::pow(kd, twoH) +
                  std::pow(kd - 1.0, twoH));
}

namespace {

std::size_t next_pow2(std::size_t x) {
    std::size_t p = 1;
    while (p < x) p <<= 1;
    return p;
}

}  // namespace

FgnSampler::FgnSampler(std::size_t n, HurstParameter h, FgnMethod method,
                       std::size_t cholesky_cap)
    : n_(n), h_(h), method_(method) {
    if (n < 1) throw ConfigError("FgnSampler: n must be >= 1");

    if (method == FgnMethod::kCholesky) {
        if (n > cholesky_cap) {
            throw ConfigError("FgnSampler: cholesky method capped at n <= " +
                              std::to_string(cholesky_cap) + ", got " + std::to_string(n));
        }
        Eigen::MatrixXd cov(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const double g = fgn_autocov(static_cast<std::int64_t>(i - j), h);
                cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g;
                cov(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = g;
            }
        }
        Eigen::LLT<Eigen::MatrixXd> llt(cov);
        if (llt.info() != Eigen::Success) {
            throw NumericalError(
                "FgnSampler: fGN Toeplitz covariance numerically non-positive-definite "
                "at n=" + std::to_string(n) + ", H=" + std::to_string(h.value()));
        }
        chol_ = llt.matrixL();
        return;
    }

    // Circulant embedding, padded to a power of two. First row of the
    // embedding: c_j = gamma(min(j, M-j)).
    const std::size_t M = next_pow2(2 * n);
    embed_size_ = M;
    std::vector<std::complex<double>> c(M);
    for (std::size_t j = 0; j < M; ++j) {
        const std::size_t lag = std::min(j, M - j);
        c[j] = fgn_autocov(static_cast<std::int64_t>(lag), h);
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> lam(M);
    fft.fwd(lam, c);

    double max_l = 0.0;
    double min_l = 0.0;
    for (const auto& l : lam) {
        max_l = std::max(max_l, l.real());
        min_l = std::min(min_l, l.real());
    }
    if (min_l < -1e-10 * max_l) {
        throw NumericalError(
            "FgnSampler: circulant embedding produced eigenvalue " + std::to_string(min_l) +
            " below tolerance (max " + std::to_string(max_l) + ")");
    }
    sqrt_lambda_.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        sqrt_lambda_[k] = std::sqrt(std::max(lam[k].real(), 0.0));
    }
}

void FgnSampler::sample_into(const SeedStream& seed, std::span<double> out) const {
    if (out.size() != n_) throw ConfigError("FgnSampler: output span size mismatch");
    RandomStream rng(seed);

    if (method_ == FgnMethod::kCholesky) {
        Eigen::VectorXd z(static_cast<Eigen::Index>(n_));
        for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
        Eigen::VectorXd x = chol_.triangularView<Eigen::Lower>() * z;
        for (std::size_t i = 0; i < n_; ++i) out[i] = x(static_cast<Eigen::Index>(i));
        return;
    }

    // Hermitian-symmetric spectral noise, one forward FFT. Draw order is
    // fixed: g0, g_{M/2}, then (re, im) pairs for k = 1..M/2-1.
    const std::size_t M = embed_size_;
    const std::size_t half = M / 2;
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(M));
    const double inv_sqrt_2m = 1.0 / std::sqrt(2.0 * static_cast<double>(M));
    std::vector<std::complex<double>> w(M);
    w[0] = sqrt_lambda_[0] * inv_sqrt_m * rng.normal();
    w[half] = sqrt_lambda_[half] * inv_sqrt_m * rng.normal();
    for (std::size_t k = 1; k < half; ++k) {
        const double re = rng.normal();
        const double im = rng.normal();
        const std::complex<double> v(re, im);
        w[k] = sqrt_lambda_[k] * inv_sqrt_2m * v;
        w[M - k] = std::conj(w[k]);
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> y(M);
    fft.fwd(y, w);
    for (std::size_t i = 0; i < n_; ++i) out[i] = y[i].real();
}

FgnSequence FgnSampler::sample(const SeedStream& seed) const {
    FgnSequence seq{h_, std::vector<double>(n_)};
    sample_into(seed, seq.values);
    return seq;
}

FgnSequence sample_fgn(std::size_t n, HurstParameter h, const SeedStream& seed,
                       FgnMethod method) {
    return FgnSampler(n, h, method).sample(seed);
}

FbmPath fgn_to_path(const FgnSequence& fgn, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("fgn_to_path: dt must be finite and positive");
    }
    const double scale = std::pow(dt, fgn.h.value());
    FbmPath path{fgn.h, dt, std::vector<double>(fgn.values.size() + 1)};
    path.values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < fgn.values.size(); ++k) {
        acc += fgn.values[k];
        path.values[k + 1] = scale * acc;
    }
    return path;
}

}  // namespace fraclab
