#include "fraclab/fou.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <string>

namespace fraclab {

FouSystem FouSystem::scalar(double beta, double sigma, double x0, double horizon,
                            std::size_t steps, HurstParameter h) {
    FouSystem s{Eigen::MatrixXd::Constant(1, 1, beta), sigma,
                Eigen::VectorXd::Constant(1, x0), horizon, steps, h};
    s.validate();
    return s;
}

void FouSystem::validate() const {
    if (drift.rows() != drift.cols() || drift.rows() < 1) {
        throw ConfigError("FouSystem: drift must be a square matrix");
    }
    if (!drift.allFinite()) throw ConfigError("FouSystem: drift entries must be finite");
    if (init.size() != drift.rows()) {
        throw ConfigError("FouSystem: init dimension does not match drift");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("FouSystem: sigma must be finite and >= 0");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw ConfigError("FouSystem: horizon must be finite and positive");
    }
    if (steps < 1) throw ConfigError("FouSystem: steps must be >= 1");
}

FouSimulator::FouSimulator(FouSystem system, FgnMethod method)
    : system_(std::move(system)), sampler_(system_.steps, system_.h, method) {
    system_.validate();
}

PathMatrix FouSimulator::run(const SeedStream& seed) const {
    const auto& sys = system_;
    const Eigen::Index d = sys.dim();
    const std::size_t n = sys.steps;
    const double dt = sys.horizon / static_cast<double>(n);
    const double noise_scale = sys.sigma * std::pow(dt, sys.h.value());

    // Per-coordinate independent fBM increments.
    Eigen::MatrixXd incr(d, static_cast<Eigen::Index>(n));
    std::vector<double> buf(n);
    for (Eigen::Index j = 0; j < d; ++j) {
        sampler_.sample_into(seed.substream(static_cast<std::uint64_t>(j)), buf);
        for (std::size_t k = 0; k < n; ++k) {
            incr(j, static_cast<Eigen::Index>(k)) = noise_scale * buf[k];
        }
    }

    PathMatrix out;
    out.times.resize(static_cast<Eigen::Index>(n + 1));
    out.states.resize(static_cast<Eigen::Index>(n + 1), d);
    Eigen::VectorXd x = sys.init;
    out.times(0) = 0.0;
    out.states.row(0) = x.transpose();
    for (std::size_t k = 0; k < n; ++k) {
        x += dt * (sys.drift * x) + incr.col(static_cast<Eigen::Index>(k));
        if (!x.allFinite()) {
            throw NumericalError("simulate_fou: state became non-finite at step " +
                                 std::to_string(k + 1) + " (divergence)");
        }
        out.times(static_cast<Eigen::Index>(k + 1)) = static_cast<double>(k + 1) * dt;
        out.states.row(static_cast<Eigen::Index>(k + 1)) = x.transpose();
    }
    out.times(static_cast<Eigen::Index>(n)) = sys.horizon;
    return out;
}

PathMatrix simulate_fou(const FouSystem& system, const SeedStream& seed, FgnMethod method) {
    return FouSimulator(system, method).run(seed);
}

double fou_increment_variance(double t, double s, double beta, double sigma,
                              HurstParameter h) {
    if (!(s >= 0.0) || !(t >= s)) {
        throw ConfigError("fou_increment_variance: need 0 <= s <= t");
    }
    const double d = t - s;
    if (d == 0.0) return 0.0;
    const double H = h.value();
    const double inv2h = 1.0 / (2.0 * H);
    const double upper = std::pow(d, 2.0 * H);

    // After z = u^{1/(2H)}: integral_0^d z^{2H-1} e^{b z} dz
    //                     = (1/(2H)) integral_0^{d^{2H}} e^{b u^{1/(2H)}} du.
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double tol = 1e-12;
    auto weighted = [&](double b) {
        double err = 0.0, l1 = 0.0;
        const double val = integrator.integrate(
            [b, inv2h](double u) { return std::exp(b * std::pow(u, inv2h)); }, 0.0, upper,
            tol, &err, &l1);
        const double abs_tol = 1e-10;
        if (!(err <= abs_tol) && !(err <= 1e-10 * std::abs(val))) {
            throw NumericalError(
                "fou_increment_variance: quadrature did not converge, error estimate " +
                std::to_string(err));
        }
        return val * inv2h;
    };
    return sigma * sigma * H *
           (std::exp(-2.0 * beta * t) * weighted(beta) +
            std::exp(-2.0 * beta * s) * weighted(-beta));
}

PathMatrix centered_path(const PathMatrix& path, const FouSystem& system) {
    const Eigen::Index n1 = path.states.rows();
    const Eigen::Index d = path.states.cols();
    if (n1 != static_cast<Eigen::Index>(system.steps) + 1 || d != system.dim()) {
        throw ConfigError("centered_path: path shape does not match system");
    }
    const double dt = system.horizon / static_cast<double>(system.steps);
    PathMatrix out;
    out.times = path.times;
    out.states.resize(n1, d);
    Eigen::VectorXd mean = system.init;
    out.states.row(0) = path.states.row(0) - mean.transpose();
    for (Eigen::Index k = 1; k < n1; ++k) {
        mean += dt * (system.drift * mean);
        out.states.row(k) = path.states.row(k) - mean.transpose();
    }
    return out;
}

}  // namespace fraclab
