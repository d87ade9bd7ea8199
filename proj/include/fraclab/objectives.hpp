#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <map>
#include <string>

#include "fraclab/errors.hpp"
#include "fraclab/rng.hpp"

namespace fraclab {

// Evaluable landscape with analytic gradient. Immutable after construction;
// evaluation is pure and reentrant.
struct Objective {
    int dim = 0;
    std::string name;
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

// f(x) = x^T A x / 2, gradient (A + A^T) x / 2.
Objective quadratic(const Eigen::MatrixXd& A);

// f(x,y) = (x^4 - 16x^2 + 5x + y^4 - 16y^2 + 5y) / 2.
Objective styblinski_tang_2d();

// Stationary points of the per-coordinate cubic 4u^3 - 32u + 5, ascending
// (left minimum, hill, right minimum), found by Newton iteration to 1e-14.
std::array<double, 3> styblinski_tang_roots();

// f(x) = x^T M x / 2 + lambda * sum_i x_i^4.
Objective regularized_quadratic(const Eigen::MatrixXd& M, double lambda);

// Diagonal entries drawn uniformly from [0,1]; the num_negative smallest are
// negated, embedding a strict saddle at the origin.
Eigen::VectorXd embedded_saddle_diagonal(int d, int num_negative, const SeedStream& seed);
Objective make_embedded_saddle(int d, int num_negative, double lambda,
                               const SeedStream& seed);

// Piecewise-quadratic double well:
//   v0 + k0/2 x^2                  for x <= a
//   v1 - k1/2 (x - (a+c)/2)^2      for a < x <= c
//   v2 + k2/2 (x - m)^2            for x > c
// k1 and k2 are derived from value continuity at a and c; k0 is free and
// defaults to 0.5 so that gradient descent with step sizes up to ~1 stays
// stable in both wells (eta * k < 2). Derivative uses the left-limit
// convention at the seams.
struct BiStableParams {
    double v0, v1, v2;
    double a, c, m;
    double k0 = 0.5;

    double k1() const;
    double k2() const;
    void validate() const;  // rejects parameter sets with k1 <= 0 or k2 <= 0
};

Objective bistable(const BiStableParams& params);

// Central finite differences, (f(x+eps e_i) - f(x-eps e_i)) / (2 eps).
Eigen::VectorXd finite_diff_gradient(const Objective& obj, const Eigen::VectorXd& x,
                                     double eps);

// Landscape registry used by config files. Recognized names: "quadratic",
// "styblinski_tang", "embedded_saddle", "bistable". Parameters are read from
// the flat key map (documented per landscape in the README).
Objective make_landscape(const std::string& name,
                         const std::map<std::string, std::string>& params,
                         const SeedStream& seed);

}  // namespace fraclab
