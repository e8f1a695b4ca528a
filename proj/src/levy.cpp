#include "tempsub/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace tempsub {

LevyProcess levy_drift(double mu) {
    LevyProcess lp;
    lp.exponent.name = "drift";
    lp.exponent.value = [mu](double eta) { return mu * eta; };
    lp.exponent.deriv = [mu](double) { return mu; };
    lp.exponent.deriv_at_zero = mu;
    lp.increment = [mu](double dt, RngStream&) { return mu * dt; };
    return lp;
}

LevyProcess levy_brownian_with_drift(double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
    LevyProcess lp;
    lp.exponent.name = "brownian";
    lp.exponent.value = [mu, sigma](double eta) {
        return mu * eta + 0.5 * sigma * sigma * eta * eta;
    };
    lp.exponent.deriv = [mu, sigma](double eta) { return mu + sigma * sigma * eta; };
    lp.exponent.deriv_at_zero = mu;
    lp.increment = [mu, sigma](double dt, RngStream& rng) {
        return mu * dt + sigma * std::sqrt(dt) * rng.normal();
    };
    return lp;
}

LevyProcess levy_compound_poisson_exp(double rate, double jump_mean) {
    if (!(rate > 0.0) || !(jump_mean > 0.0)) {
        throw std::invalid_argument("rate and jump_mean must be > 0");
    }
    LevyProcess lp;
    lp.exponent.name = "cp_exp";
    lp.exponent.value = [rate, jump_mean](double eta) {
        return rate * jump_mean * eta / (1.0 - jump_mean * eta);
    };
    lp.exponent.deriv = [rate, jump_mean](double eta) {
        const double d = 1.0 - jump_mean * eta;
        return rate * jump_mean / (d * d);
    };
    lp.exponent.hi = 1.0 / jump_mean;
    lp.exponent.deriv_at_zero = rate * jump_mean;
    lp.increment = [rate, jump_mean](double dt, RngStream& rng) {
        const long long n = rng.poisson(rate * dt);
        return rng.gamma(static_cast<double>(n), jump_mean);
    };
    return lp;
}

LevyExponent levy_custom_sampled(std::vector<double> eta, std::vector<double> values) {
    if (eta.size() != values.size() || eta.size() < 2) {
        throw std::invalid_argument("need at least two (eta, value) samples");
    }
    for (std::size_t i = 1; i < eta.size(); ++i) {
        if (!(eta[i] > eta[i - 1])) throw std::invalid_argument("eta grid must be increasing");
    }
    if (!(eta.front() <= 0.0 && eta.back() >= 0.0)) {
        throw std::invalid_argument("eta grid must cover 0");
    }
    double prev_slope = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < eta.size(); ++i) {
        const double slope = (values[i] - values[i - 1]) / (eta[i] - eta[i - 1]);
        if (slope + 1e-12 * (1.0 + std::fabs(slope)) < prev_slope) {
            throw std::invalid_argument("sampled exponent is not convex (slopes decrease)");
        }
        prev_slope = slope;
    }

    auto interp = [eta, values](double e) {
        const auto it = std::upper_bound(eta.begin(), eta.end(), e);
        std::size_t i = it == eta.begin() ? 1 : static_cast<std::size_t>(it - eta.begin());
        if (i >= eta.size()) i = eta.size() - 1;
        const double w = (e - eta[i - 1]) / (eta[i] - eta[i - 1]);
        return values[i - 1] + w * (values[i] - values[i - 1]);
    };
    if (std::fabs(interp(0.0)) > 1e-9) {
        throw std::invalid_argument("sampled exponent must vanish at eta = 0");
    }

    LevyExponent le;
    le.name = "custom";
    le.lo = eta.front();
    le.hi = eta.back();
    le.value = interp;
    le.deriv = [eta, values](double e) {  // segment slope (subgradient)
        const auto it = std::upper_bound(eta.begin(), eta.end(), e);
        std::size_t i = it == eta.begin() ? 1 : static_cast<std::size_t>(it - eta.begin());
        if (i >= eta.size()) i = eta.size() - 1;
        return (values[i] - values[i - 1]) / (eta[i] - eta[i - 1]);
    };
    le.deriv_at_zero = le.deriv(0.0);
    return le;
}

}  // namespace tempsub
