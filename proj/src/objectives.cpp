#include "fraclab/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fraclab {

namespace {

void check_dim(const Objective& obj, const Eigen::VectorXd& x) {
    if (x.size() != obj.dim) {
        throw ConfigError(obj.name + ": expected dimension " + std::to_string(obj.dim) +
                          ", got " + std::to_string(x.size()));
    }
}

double parse_param(const std::map<std::string, std::string>& params,
                   const std::string& key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + it->second);
    }
}

}  // namespace

Objective quadratic(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols()) throw ConfigError("quadratic: A must be square");
    if (!A.allFinite()) throw ConfigError("quadratic: A must be finite");
    const Eigen::MatrixXd sym = 0.5 * (A + A.transpose());
    Objective obj;
    obj.dim = static_cast<int>(A.rows());
    obj.name = "quadratic";
    obj.value = [A](const Eigen::VectorXd& x) { return 0.5 * x.dot(A * x); };
    obj.gradient = [sym](const Eigen::VectorXd& x) -> Eigen::VectorXd { return sym * x; };
    return obj;
}

Objective styblinski_tang_2d() {
    Objective obj;
    obj.dim = 2;
    obj.name = "styblinski_tang";
    obj.value = [](const Eigen::VectorXd& x) {
        double v = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double u = x(i);
            v += 0.5 * (u * u * u * u - 16.0 * u * u + 5.0 * u);
        }
        return v;
    };
    obj.gradient = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        Eigen::VectorXd g(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double u = x(i);
            g(i) = 2.0 * u * u * u - 16.0 * u + 2.5;
        }
        return g;
    };
    return obj;
}

std::array<double, 3> styblinski_tang_roots() {
    // Newton on p(u) = 4u^3 - 32u + 5 from brackets around each root.
    auto newton = [](double u) {
        for (int it = 0; it < 100; ++it) {
            const double p = 4.0 * u * u * u - 32.0 * u + 5.0;
            const double dp = 12.0 * u * u - 32.0;
            const double step = p / dp;
            u -= step;
            if (std::abs(step) < 1e-15) break;
        }
        return u;
    };
    std::array<double, 3> roots{newton(-3.0), newton(0.2), newton(2.8)};
    std::sort(roots.begin(), roots.end());
    return roots;
}

Objective regularized_quadratic(const Eigen::MatrixXd& M, double lambda) {
    if (M.rows() != M.cols()) throw ConfigError("regularized_quadratic: M must be square");
    if (!M.allFinite() || !std::isfinite(lambda) || lambda < 0.0) {
        throw ConfigError("regularized_quadratic: inputs must be finite, lambda >= 0");
    }
    const Eigen::MatrixXd sym = 0.5 * (M + M.transpose());
    Objective obj;
    obj.dim = static_cast<int>(M.rows());
    obj.name = "regularized_quadratic";
    obj.value = [M, lambda](const Eigen::VectorXd& x) {
        return 0.5 * x.dot(M * x) + lambda * x.array().square().square().sum();
    };
    obj.gradient = [sym, lambda](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return sym * x + (4.0 * lambda) * x.array().cube().matrix();
    };
    return obj;
}

Eigen::VectorXd embedded_saddle_diagonal(int d, int num_negative, const SeedStream& seed) {
    if (d < 1 || num_negative < 1 || num_negative > d) {
        throw ConfigError("embedded_saddle: need 0 < num_negative <= d");
    }
    RandomStream rng(seed);
    Eigen::VectorXd diag(d);
    for (int i = 0; i < d; ++i) diag(i) = rng.uniform01();
    std::vector<int> order(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&diag](int a, int b) { return diag(a) < diag(b); });
    for (int k = 0; k < num_negative; ++k) diag(order[static_cast<std::size_t>(k)]) *= -1.0;
    return diag;
}

Objective make_embedded_saddle(int d, int num_negative, double lambda,
                               const SeedStream& seed) {
    const Eigen::VectorXd diag = embedded_saddle_diagonal(d, num_negative, seed);
    Objective obj;
    obj.dim = d;
    obj.name = "embedded_saddle";
    obj.value = [diag, lambda](const Eigen::VectorXd& x) {
        return 0.5 * (diag.array() * x.array().square()).sum() +
               lambda * x.array().square().square().sum();
    };
    obj.gradient = [diag, lambda](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return (diag.array() * x.array() + 4.0 * lambda * x.array().cube()).matrix();
    };
    return obj;
}

double BiStableParams::k1() const {
    const double halfwidth = 0.5 * (c - a);
    return (v1 - v0 - 0.5 * k0 * a * a) / (0.5 * halfwidth * halfwidth);
}

double BiStableParams::k2() const {
    const double halfwidth = 0.5 * (c - a);
    const double vc = v1 - 0.5 * k1() * halfwidth * halfwidth;
    return (vc - v2) / (0.5 * (c - m) * (c - m));
}

void BiStableParams::validate() const {
    if (!(a < 0.5 * (a + c)) || !(0.5 * (a + c) < c)) {
        throw ConfigError("bistable: need a < (a+c)/2 < c");
    }
    if (!(k0 > 0.0)) throw ConfigError("bistable: k0 must be positive");
    if (c == m) throw ConfigError("bistable: c must differ from m");
    if (!(k1() > 0.0) || !(k2() > 0.0)) {
        throw ConfigError("bistable: derived curvatures k1=" + std::to_string(k1()) +
                          ", k2=" + std::to_string(k2()) +
                          " must both be positive (no valid double well)");
    }
}

Objective bistable(const BiStableParams& p) {
    p.validate();
    const double k1 = p.k1();
    const double k2 = p.k2();
    const double half = 0.5 * (p.a + p.c);
    Objective obj;
    obj.dim = 1;
    obj.name = "bistable";
    obj.value = [p, k1, k2, half](const Eigen::VectorXd& xv) {
        const double x = xv(0);
        if (x <= p.a) return p.v0 + 0.5 * p.k0 * x * x;
        if (x <= p.c) return p.v1 - 0.5 * k1 * (x - half) * (x - half);
        return p.v2 + 0.5 * k2 * (x - p.m) * (x - p.m);
    };
    obj.gradient = [p, k1, k2, half](const Eigen::VectorXd& xv) -> Eigen::VectorXd {
        const double x = xv(0);
        Eigen::VectorXd g(1);
        if (x <= p.a) {
            g(0) = p.k0 * x;
        } else if (x <= p.c) {
            g(0) = -k1 * (x - half);
        } else {
            g(0) = k2 * (x - p.m);
        }
        return g;
    };
    return obj;
}

Eigen::VectorXd finite_diff_gradient(const Objective& obj, const Eigen::VectorXd& x,
                                     double eps) {
    if (!(eps > 0.0)) throw ConfigError("finite_diff_gradient: eps must be positive");
    check_dim(obj, x);
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd p = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double xi = x(i);
        p(i) = xi + eps;
        const double fp = obj.value(p);
        p(i) = xi - eps;
        const double fm = obj.value(p);
        p(i) = xi;
        g(i) = (fp - fm) / (2.0 * eps);
    }
    return g;
}

Objective make_landscape(const std::string& name,
                         const std::map<std::string, std::string>& params,
                         const SeedStream& seed) {
    if (name == "quadratic") {
        const int d = static_cast<int>(parse_param(params, "dim", 1.0));
        const double beta = parse_param(params, "beta", 1.0);
        if (d < 1) throw ConfigError("quadratic: dim must be >= 1");
        return quadratic(beta * Eigen::MatrixXd::Identity(d, d));
    }
    if (name == "styblinski_tang") {
        return styblinski_tang_2d();
    }
    if (name == "embedded_saddle") {
        const int d = static_cast<int>(parse_param(params, "dim", 100.0));
        const int neg = static_cast<int>(parse_param(params, "num_negative", 5.0));
        const double lambda = parse_param(params, "lambda", 1e-4);
        return make_embedded_saddle(d, neg, lambda, seed);
    }
    if (name == "bistable") {
        BiStableParams p{parse_param(params, "v0", 0.0),  parse_param(params, "v1", 45.0),
                         parse_param(params, "v2", -12.5), parse_param(params, "a", 3.5),
                         parse_param(params, "c", 13.9),  parse_param(params, "m", 18.0),
                         parse_param(params, "k0", 0.5)};
        return bistable(p);
    }
    throw ConfigError("unknown landscape '" + name + "'");
}

}  // namespace fraclab
