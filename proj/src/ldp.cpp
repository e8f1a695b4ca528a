#include "tempsub/ldp.hpp"

#include <cmath>
#include <stdexcept>

#include "tempsub/conjugate.hpp"
#include "tempsub/cumulant.hpp"
#include "tempsub/errors.hpp"
#include "tempsub/parallel.hpp"
#include "tempsub/simulate.hpp"

namespace tempsub {

namespace {

void check_times(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("empty time grid");
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) throw std::invalid_argument("times must satisfy 0 < t_1 < ... < t_m");
        prev = t;
    }
}

double sign_for(ThetaLimit limit) { return limit == ThetaLimit::ToInfinity ? 1.0 : -1.0; }

double gamma_exponent_check(double gamma, double g, ThetaLimit limit) {
    const double s = 1.0 - g;  // = gamma - h
    if (s * sign_for(limit) <= 0.0) {
        throw std::invalid_argument(
            "scaling exponents must satisfy gamma - h = 1 - g with sign matching the theta limit");
    }
    return gamma - s;  // h
}

// Conjugate of the theta = 1 cumulant as an extended real over all of R.
ExtReal unit_theta_conjugate(const ParamSet& p1, double x) {
    if (x < 0.0) return ExtReal::infinity();
    if (x == 0.0) return kappa_star_at_zero(p1);
    return kappa_star_closed(p1, x);
}

}  // namespace

ScalingSpec ScalingSpec::identical(double gamma) {
    ScalingSpec s;
    s.mode_ = ScalingMode::Identical;
    s.gamma_ = gamma;
    s.g_ = 1.0;
    s.h_ = gamma;
    return s;
}

ScalingSpec ScalingSpec::scaled(double gamma, double g, ThetaLimit limit) {
    ScalingSpec s;
    s.mode_ = ScalingMode::Scaled;
    s.limit_ = limit;
    s.gamma_ = gamma;
    s.g_ = g;
    s.h_ = gamma_exponent_check(gamma, g, limit);
    return s;
}

ScalingSpec ScalingSpec::moderate(double gamma, double g, std::function<double(double)> a_theta,
                                  ThetaLimit limit) {
    if (!a_theta) throw std::invalid_argument("a_theta handle required for Moderate mode");
    ScalingSpec s;
    s.mode_ = ScalingMode::Moderate;
    s.limit_ = limit;
    s.gamma_ = gamma;
    s.g_ = g;
    s.h_ = gamma_exponent_check(gamma, g, limit);
    // Probe the declared limit on a geometric ladder: a_theta must decay and
    // theta^(1-g) a_theta must grow.
    const double sgn = sign_for(limit);
    double prev_a = -1.0, prev_speed = -1.0;
    for (int j = 1; j <= 6; ++j) {
        const double theta = limit == ThetaLimit::ToInfinity ? 2.0 * std::pow(10.0, j)
                                                             : 2.0 * std::pow(10.0, -j);
        const double a = a_theta(theta);
        if (!(a > 0.0)) throw std::invalid_argument("a_theta must be positive");
        const double speed = std::pow(theta, 1.0 - g) * a;
        if (prev_a > 0.0 && (a >= prev_a || speed <= prev_speed)) {
            throw std::invalid_argument(
                "a_theta fails the moderate conditions (a_theta -> 0, theta^(1-g) a_theta -> inf)");
        }
        prev_a = a;
        prev_speed = speed;
    }
    (void)sgn;
    s.a_ = std::move(a_theta);
    return s;
}

ScalingSpec ScalingSpec::moderate_power(double gamma, double g, double p, ThetaLimit limit) {
    const double s = 1.0 - g;
    const bool ok = limit == ThetaLimit::ToInfinity ? (p < 0.0 && p > -s) : (p > 0.0 && p < -s);
    if (!ok) {
        throw std::invalid_argument("power exponent outside the admissible moderate window");
    }
    ScalingSpec spec;
    spec.mode_ = ScalingMode::Moderate;
    spec.limit_ = limit;
    spec.gamma_ = gamma;
    spec.g_ = g;
    spec.h_ = gamma_exponent_check(gamma, g, limit);
    spec.a_ = [p](double theta) { return std::pow(theta, p); };
    return spec;
}

double ScalingSpec::a_theta(double theta) const {
    if (mode_ != ScalingMode::Moderate) {
        throw std::logic_error("a_theta is defined for Moderate mode only");
    }
    return a_(theta);
}

double ScalingSpec::speed(double theta) const {
    switch (mode_) {
        case ScalingMode::Identical:
            throw std::logic_error("Identical mode carries no LDP speed");
        case ScalingMode::Scaled: return std::pow(theta, gamma_ - h_);
        case ScalingMode::Moderate: return 1.0 / a_(theta);
    }
    return 0.0;
}

double ScalingSpec::increment_multiplier(double theta) const {
    switch (mode_) {
        case ScalingMode::Identical: return theta;
        case ScalingMode::Scaled: return std::pow(theta, g_);
        case ScalingMode::Moderate: return a_(theta) * theta;
    }
    return 0.0;
}

double ScalingSpec::span_divisor(double theta) const {
    switch (mode_) {
        case ScalingMode::Identical: return std::pow(theta, gamma_);
        case ScalingMode::Scaled: return std::pow(theta, h_);
        case ScalingMode::Moderate: return a_(theta) * std::pow(theta, gamma_);
    }
    return 0.0;
}

ExtReal rate_I(double gamma, double lambda, const std::vector<double>& times,
               const std::vector<double>& xs) {
    check_times(times);
    if (xs.size() != times.size()) throw std::invalid_argument("times/xs size mismatch");
    const ParamSet p1 = ParamSet::validate(gamma, lambda, 1.0, 0.0);
    ExtReal total = ExtReal::finite(0.0);
    double prev_t = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double dt = times[i] - prev_t;
        prev_t = times[i];
        const ExtReal term = unit_theta_conjugate(p1, xs[i] / dt);
        if (term.is_infinite()) return ExtReal::infinity();
        total = total + ExtReal::finite(dt * term.value());
    }
    return total;
}

ExtReal rate_J(double gamma, double lambda, const std::vector<double>& times,
               const std::vector<double>& zs) {
    if (zs.size() != times.size()) throw std::invalid_argument("times/zs size mismatch");
    std::vector<double> increments(zs.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        increments[i] = zs[i] - prev;
        prev = zs[i];
    }
    return rate_I(gamma, lambda, times, increments);
}

double theta_invariance_check(double gamma, double lambda, const std::vector<double>& theta_grid,
                              const std::vector<double>& y_grid,
                              const std::vector<double>& times) {
    check_times(times);
    if (theta_grid.empty() || y_grid.empty()) throw std::invalid_argument("empty grid");
    for (double y : y_grid) {
        const bool ok = gamma > 0.0 ? y <= 1.0 : y < 1.0;
        if (!ok) throw std::invalid_argument("y grid must lie in the unit-theta domain");
    }
    const CumulantFn unit(ParamSet::validate(gamma, lambda, 1.0, 0.0));

    double max_resid = 0.0;
    for (double theta : theta_grid) {
        if (!(theta > 0.0)) throw std::invalid_argument("theta grid must be positive");
        const CumulantFn scaled(ParamSet::validate(gamma, lambda, theta, 0.0));
        const double tg = std::pow(theta, gamma);
        // single-increment terms
        for (double y : y_grid) {
            for (std::size_t i = 0; i < times.size(); ++i) {
                const double dt = times[i] - (i == 0 ? 0.0 : times[i - 1]);
                const double lhs = dt / tg * scaled(theta * y).value();
                const double rhs = dt * unit(y).value();
                max_resid = std::max(max_resid, std::fabs(lhs - rhs));
            }
        }
        // rotating multi-increment assignment
        for (std::size_t shift = 0; shift < y_grid.size(); ++shift) {
            double lhs = 0.0, rhs = 0.0;
            for (std::size_t i = 0; i < times.size(); ++i) {
                const double dt = times[i] - (i == 0 ? 0.0 : times[i - 1]);
                const double y = y_grid[(i + shift) % y_grid.size()];
                lhs += dt / tg * scaled(theta * y).value();
                rhs += dt * unit(y).value();
            }
            max_resid = std::max(max_resid, std::fabs(lhs - rhs));
        }
    }
    return max_resid;
}

std::vector<double> scaled_sample(const ScalingSpec& spec, const ParamSet& p, double theta,
                                  const std::vector<double>& times, RngStream& rng) {
    check_times(times);
    if (p.delta() != 0.0) throw std::invalid_argument("scaled_sample requires delta = 0");
    if (p.gamma() != spec.gamma()) {
        throw std::invalid_argument("parameter gamma must match the scaling spec");
    }
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    const ParamSet pe = ParamSet::validate(p.gamma(), p.lambda(), theta, 0.0);
    const double mult = spec.increment_multiplier(theta);
    const double divisor = spec.span_divisor(theta);
    std::vector<double> out(times.size());
    double prev_t = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double span = (times[i] - prev_t) / divisor;
        prev_t = times[i];
        out[i] = mult * sample_increment(pe, span, rng);
    }
    return out;
}

LdpEstimate empirical_rate(const std::vector<std::vector<double>>& draws,
                           const std::vector<double>& corner, double speed) {
    if (!(speed > 0.0)) throw std::invalid_argument("speed must be > 0");
    if (draws.empty()) throw std::invalid_argument("no draws");
    LdpEstimate est;
    est.level = corner.empty() ? 0.0 : corner.front();
    est.speed = speed;
    est.n = static_cast<std::int64_t>(draws.size());
    for (const auto& v : draws) {
        if (v.size() != corner.size()) throw std::invalid_argument("draw/corner size mismatch");
        bool hit = true;
        for (std::size_t j = 0; j < corner.size(); ++j) {
            if (!(v[j] >= corner[j])) {
                hit = false;
                break;
            }
        }
        est.hits += hit ? 1 : 0;
    }
    if (est.hits == 0) {
        est.emp_rate = ExtReal::infinity();
        est.ci_halfwidth = std::numeric_limits<double>::quiet_NaN();
        return est;
    }
    const double p_hat = static_cast<double>(est.hits) / static_cast<double>(est.n);
    est.emp_rate = ExtReal::finite(-std::log(p_hat) / speed);
    est.ci_halfwidth =
        1.959963984540054 * std::sqrt((1.0 - p_hat) / (p_hat * static_cast<double>(est.n))) /
        speed;
    return est;
}

double tilt_root(const ParamSet& p, double x) {
    if (!(x > 0.0)) {
        throw TiltRootNotFound("tilt level must exceed the infimum slope 0");
    }
    const CumulantFn c(p);
    const double y0 = c.abscissa();
    // lower end: kappa' decays to 0, so march left until it drops below x
    double lo = y0 - std::max(1.0, std::fabs(y0));
    {
        double step = std::max(1.0, std::fabs(lo));
        int k = 0;
        while (c.deriv(lo, 1) >= x) {
            lo -= step;
            step *= 2.0;
            if (++k > 200) throw TiltRootNotFound("no lower bracket for the tilt equation");
        }
    }
    // upper end: approach the abscissa until kappa' exceeds x (steepness)
    double hi = lo;
    {
        const double width = y0 - lo;
        bool found = false;
        for (int k = 1; k <= 500; ++k) {
            const double cand = y0 - std::ldexp(width, -k);
            if (!(cand > hi && cand < y0)) break;
            const double d = c.deriv(cand, 1);
            if (d >= x) {
                hi = cand;
                found = true;
                break;
            }
            hi = cand;  // still below x; tighten the lower end
            lo = cand;
        }
        if (!found) {
            throw TiltRootNotFound("kappa' stayed below the level up to the abscissa");
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        (c.deriv(mid, 1) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

TailEstimate tilted_tail_estimator(const ParamSet& p, double t, double x, std::int64_t n,
                                   std::uint64_t seed, std::uint64_t stream_base, int threads,
                                   bool plain_mc) {
    if (p.delta() != 0.0) throw std::invalid_argument("tilted estimator requires delta = 0");
    if (!(n > 0)) throw std::invalid_argument("need n > 0");
    const CumulantFn c(p);
    const double mean = c.mean();
    const double y_x = plain_mc || x == mean ? 0.0 : tilt_root(p, x);
    const ParamSet tilted = y_x != 0.0 ? p.with_theta(p.theta() - y_x) : p;
    const double log_norm = t * c(y_x).value();  // t * kappa(y_x)
    const double level = x * t;

    std::vector<double> weighted(static_cast<std::size_t>(n));
    parallel_for(n, resolve_threads(threads), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t i = b; i < e; ++i) {
            RngStream rng(seed, stream_base + static_cast<std::uint64_t>(i));
            const double s = sample_increment(tilted, t, rng);
            const double w = s >= level ? std::exp(-y_x * s + log_norm) : 0.0;
            weighted[static_cast<std::size_t>(i)] = w;
        }
    });

    // order-independent reduction: fixed replica order, compensated
    double sum = 0.0, comp = 0.0;
    for (double w : weighted) {
        const double y = w - comp;
        const double tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
    }
    const double p_hat = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double w : weighted) ss += (w - p_hat) * (w - p_hat);
    const double p_se = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));

    TailEstimate out;
    out.p_hat = p_hat;
    out.p_se = p_se;
    out.tilt_y = y_x;
    out.kappa_star = kappa_star_closed(p, x).value_or(std::numeric_limits<double>::infinity());
    out.estimate.level = x;
    out.estimate.speed = t;
    out.estimate.n = n;
    std::int64_t hits = 0;
    for (double w : weighted) hits += w > 0.0 ? 1 : 0;
    out.estimate.hits = hits;
    if (p_hat <= 0.0) {
        out.estimate.emp_rate = ExtReal::infinity();
        out.estimate.ci_halfwidth = std::numeric_limits<double>::quiet_NaN();
    } else {
        out.estimate.emp_rate = ExtReal::finite(-std::log(p_hat) / t);
        out.estimate.ci_halfwidth = 1.959963984540054 * p_se / (p_hat * t);
    }
    return out;
}

}  // namespace tempsub
