#include "tempsub/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "tempsub/cumulant.hpp"
#include "tempsub/errors.hpp"

namespace tempsub {

namespace {

constexpr long kRejectionBudget = 200000;

// gamma in (0,1), delta = 0. Tilting rejection accepts with probability
// exp(-dt lambda theta^gamma) per piece; dt is split so that exponent <= 1.
double tempered_stable_increment(double gamma, double lambda, double theta, double dt,
                                 RngStream& rng) {
    if (theta == 0.0) {
        return std::pow(dt * lambda, 1.0 / gamma) * rng.one_sided_stable(gamma);
    }
    const double exponent = dt * lambda * std::pow(theta, gamma);
    const long pieces = std::max(1L, static_cast<long>(std::ceil(exponent)));
    const double sub_dt = dt / static_cast<double>(pieces);
    const double scale = std::pow(sub_dt * lambda, 1.0 / gamma);
    double total = 0.0;
    for (long i = 0; i < pieces; ++i) {
        long attempts = 0;
        while (true) {
            if (++attempts > kRejectionBudget) {
                throw RejectionBudgetExceeded(
                    "tilting rejection stalled; the requested dt is too large");
            }
            const double v = scale * rng.one_sided_stable(gamma);
            if (rng.exponential() > theta * v) {
                total += v;
                break;
            }
        }
    }
    return total;
}

// gamma < 0, delta = 0: compound Poisson of Gamma jumps. The jump sum is a
// single Gamma(-gamma * N, rate theta) draw.
double compound_poisson_increment(double gamma, double lambda, double theta, double dt,
                                  RngStream& rng) {
    const long long n = rng.poisson(dt * lambda * std::pow(theta, gamma));
    if (n == 0) return 0.0;
    return rng.gamma(-gamma * static_cast<double>(n), 1.0 / theta);
}

double delta_zero_increment(double gamma, double lambda, double theta, double dt,
                            RngStream& rng) {
    if (gamma < 0.0) return compound_poisson_increment(gamma, lambda, theta, dt, rng);
    return tempered_stable_increment(gamma, lambda, theta, dt, rng);
}

// First-order passage scale used for the safety horizon.
double passage_scale(const ParamSet& p, double t) {
    if (p.theta() > 0.0) {
        return t / CumulantFn(p).mean();
    }
    return std::pow(t, p.gamma()) / (p.lambda() * std::tgamma(1.0 + p.gamma()));
}

}  // namespace

double sample_increment(const ParamSet& p, double dt, RngStream& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (p.delta() == 0.0) {
        return delta_zero_increment(p.gamma(), p.lambda(), p.theta(), dt, rng);
    }
    // Gamma randomization of the intensity, one mixing draw per increment.
    const double g = rng.gamma(dt / p.delta(), p.lambda() * p.delta());
    if (g == 0.0) return 0.0;
    return delta_zero_increment(p.gamma(), g, p.theta(), 1.0, rng);
}

PathSample simulate_path(const ParamSet& p, double horizon, double step, RngStream& rng) {
    if (!(step > 0.0) || !(step <= horizon)) {
        throw std::invalid_argument("need 0 < step <= horizon");
    }
    PathSample path;
    if (p.regime() == Regime::GammaCompoundPoisson) {
        const double rate = p.lambda() * std::pow(p.theta(), p.gamma());
        path.exact_jumps.emplace();
        path.times.push_back(0.0);
        path.values.push_back(0.0);
        double t = 0.0, s = 0.0;
        while (true) {
            t += rng.exponential() / rate;
            if (t > horizon) break;
            const double jump = rng.gamma(-p.gamma(), 1.0 / p.theta());
            s += jump;
            path.exact_jumps->emplace_back(t, jump);
            path.times.push_back(t);
            path.values.push_back(s);
        }
        return path;
    }
    path.times.push_back(0.0);
    path.values.push_back(0.0);
    double t = 0.0, s = 0.0;
    while (t < horizon) {
        const double next = std::min(t + step, horizon);
        s += sample_increment(p, next - t, rng);
        t = next;
        path.times.push_back(t);
        path.values.push_back(s);
    }
    return path;
}

PassageResult inverse_passage(const ParamSet& p, double t, double step, RngStream& rng,
                              const PassageOptions& opt) {
    if (!(t > 0.0)) throw std::invalid_argument("t must be > 0");
    const double safety = opt.horizon_factor * (passage_scale(p, t) + step) + step;
    if (p.regime() == Regime::GammaCompoundPoisson) {
        const double rate = p.lambda() * std::pow(p.theta(), p.gamma());
        double u = 0.0, s = 0.0;
        while (true) {
            u += rng.exponential() / rate;
            if (u > safety) {
                throw HorizonExceeded("first passage exceeded the safety horizon");
            }
            s += rng.gamma(-p.gamma(), 1.0 / p.theta());
            if (s > t) return {t, u, 0.0};
        }
    }
    if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
    double u = 0.0, s = 0.0;
    while (true) {
        u += step;
        if (u > safety) throw HorizonExceeded("first passage exceeded the safety horizon");
        s += sample_increment(p, step, rng);
        if (s > t) return {t, u, step};
    }
}

double sample_time_changed(const LevyProcess& levy, const ParamSet& p, double t, double step,
                           RngStream& rng_t, RngStream& rng_x, const PassageOptions& opt) {
    if (!levy.increment) throw std::invalid_argument("Levy process has no increment sampler");
    const PassageResult pr = inverse_passage(p, t, step, rng_t, opt);
    return levy.increment(pr.t_hat, rng_x);
}

}  // namespace tempsub
