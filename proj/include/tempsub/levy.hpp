#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "tempsub/rng.hpp"

namespace tempsub {

/// Scalar Levy exponent Lambda_X(eta) = log E[exp(eta X(1))], convex with
/// Lambda_X(0) = 0, finite on (lo, hi).
struct LevyExponent {
    std::string name;
    std::function<double(double)> value;
    std::function<double(double)> deriv;  // empty when only sampled values exist
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    double deriv_at_zero = 0.0;

    [[nodiscard]] bool has_deriv() const { return static_cast<bool>(deriv); }
};

/// Levy exponent together with an exact increment sampler.
struct LevyProcess {
    LevyExponent exponent;
    std::function<double(double dt, RngStream& rng)> increment;
};

/// X(t) = mu t.
[[nodiscard]] LevyProcess levy_drift(double mu);

/// X(t) = mu t + sigma W(t).
[[nodiscard]] LevyProcess levy_brownian_with_drift(double mu, double sigma);

/// Compound Poisson with Exp(jump_mean) jumps; exponent finite for
/// eta < 1/jump_mean.
[[nodiscard]] LevyProcess levy_compound_poisson_exp(double rate, double jump_mean);

/// User-supplied exponent from sampled (eta, value) pairs, interpolated
/// piecewise-linearly. Requires strictly increasing eta covering 0,
/// value(0) = 0, and nondecreasing slopes (the convexity pre-check).
/// Evaluation only; no increment sampler.
[[nodiscard]] LevyExponent levy_custom_sampled(std::vector<double> eta,
                                               std::vector<double> values);

}  // namespace tempsub
