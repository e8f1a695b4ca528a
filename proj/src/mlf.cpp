#include "tempsub/mlf.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tempsub/errors.hpp"

namespace tempsub {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeriesSwitchExponent = 900.0;  // x^{1/gamma} at the positive switch
constexpr double kNegSwitchExponent = 18.4;      // |x|^{1/gamma} at the negative switch
constexpr double kCancellationBudget = 1e12;
constexpr double kTailRelBudget = 1e-4;

void check_gamma(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw std::invalid_argument("Mittag-Leffler order must lie in (0, 1]");
    }
}

// Positive-axis power series, summed as log-sum-exp so the individual terms
// may exceed the double range.
double series_positive_log(double gamma, double x) {
    const double lx = std::log(x);
    std::vector<double> logs;
    logs.reserve(256);
    double amax = 0.0;  // k = 0 term is 1
    logs.push_back(0.0);
    double prev = 0.0;
    for (long k = 1; k < 4000000; ++k) {
        const double a = k * lx - std::lgamma(gamma * k + 1.0);
        logs.push_back(a);
        amax = std::max(amax, a);
        if (a < prev && a < amax - 45.0) break;
        prev = a;
    }
    double sum = 0.0, comp = 0.0;
    for (double a : logs) {
        const double term = std::exp(a - amax);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return amax + std::log(sum);
}

// Negative-axis power series with compensated accumulation; the largest
// intermediate magnitude is tracked to police cancellation.
double series_negative_log(double gamma, double x) {
    const double ax = -x;
    double sum = 1.0, comp = 0.0;
    double max_mag = 1.0;
    double term = 1.0;
    for (long k = 1; k < 2000000; ++k) {
        const double mag = std::exp(k * std::log(ax) - std::lgamma(gamma * k + 1.0));
        term = (k % 2 == 0) ? mag : -mag;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        max_mag = std::max(max_mag, std::max(mag, std::fabs(sum)));
        if (mag < 1e-20 * max_mag && gamma * k > ax) break;
    }
    if (!(sum > 0.0) || max_mag / sum > kCancellationBudget) {
        throw PrecisionLoss("alternating Mittag-Leffler series cancelled beyond budget");
    }
    return std::log(sum);
}

// Tail expansion E_gamma(x) = -sum_{k>=1} x^{-k} / Gamma(1 - gamma k) for
// x -> -inf, truncated at the smallest term. 1/Gamma(1 - gamma k) is computed
// through the reflection Gamma(gamma k) sin(pi gamma k) / pi to dodge the poles.
double tail_negative_log(double gamma, double x) {
    const double ax = -x;
    const double lax = std::log(ax);
    double sum = 0.0, comp = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    double omitted = 0.0;
    for (int k = 1; k <= 400; ++k) {
        const double s = std::sin(kPi * gamma * k);
        // terms sitting on poles of Gamma(1 - gamma k) vanish; they must not
        // participate in the growth detection below
        if (std::fabs(s) < 1e-8) continue;
        const double logmag = -k * lax + std::lgamma(gamma * k) + std::log(std::fabs(s) / kPi);
        const double mag = std::exp(logmag);
        if (mag > prev_mag) {  // terms started growing: truncate optimally
            omitted = mag;
            break;
        }
        prev_mag = mag;
        // u_k = (-1)^{k+1} |x|^{-k} Gamma(gamma k) sin(pi gamma k) / pi
        const double u = ((k % 2 == 1) ? 1.0 : -1.0) * (s >= 0.0 ? mag : -mag);
        const double y = u - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (mag < 1e-18 * std::fabs(sum)) break;
    }
    if (!(sum > 0.0) || (omitted > 0.0 && omitted > kTailRelBudget * sum)) {
        throw PrecisionLoss("Mittag-Leffler tail expansion could not meet its accuracy budget");
    }
    return std::log(sum);
}

}  // namespace

const char* to_string(MlfBranch b) {
    switch (b) {
        case MlfBranch::Series: return "series";
        case MlfBranch::Asymptotic: return "asymptotic";
        case MlfBranch::Negative: return "negative";
    }
    return "?";
}

double mlf_series_switch(double gamma) {
    check_gamma(gamma);
    return std::pow(kSeriesSwitchExponent, gamma);
}

double mlf_negative_switch(double gamma) {
    check_gamma(gamma);
    return std::pow(kNegSwitchExponent, gamma);
}

MlfEval log_mittag_leffler(double gamma, double x) {
    check_gamma(gamma);
    if (!std::isfinite(x)) throw std::invalid_argument("Mittag-Leffler argument must be finite");

    MlfEval ev;
    ev.gamma = gamma;
    ev.x = x;
    if (gamma == 1.0) {  // E_1 = exp
        ev.log_value = x;
        ev.branch = x < 0.0 ? MlfBranch::Negative
                            : (x <= mlf_series_switch(1.0) ? MlfBranch::Series
                                                           : MlfBranch::Asymptotic);
        return ev;
    }
    if (x == 0.0) {
        ev.log_value = 0.0;
        ev.branch = MlfBranch::Series;
        return ev;
    }
    if (x > 0.0) {
        if (x <= mlf_series_switch(gamma)) {
            ev.log_value = series_positive_log(gamma, x);
            ev.branch = MlfBranch::Series;
        } else {
            ev.log_value = std::pow(x, 1.0 / gamma) - std::log(gamma);
            ev.branch = MlfBranch::Asymptotic;
        }
        return ev;
    }
    ev.branch = MlfBranch::Negative;
    ev.log_value = (-x <= mlf_negative_switch(gamma)) ? series_negative_log(gamma, x)
                                                      : tail_negative_log(gamma, x);
    return ev;
}

std::vector<double> inverse_mgf_limit_curve(const ParamSet& p, double y,
                                            const std::vector<double>& t_grid) {
    if (!(p.gamma() > 0.0) || p.theta() != 0.0 || p.delta() != 0.0) {
        throw std::invalid_argument(
            "inverse_mgf_limit_curve requires gamma in (0,1), theta = 0, delta = 0");
    }
    if (t_grid.empty()) throw std::invalid_argument("empty t grid");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw std::invalid_argument("t grid must be positive and increasing");
        }
    }
    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const double arg = (y / p.lambda()) * std::pow(t, p.gamma());
        out.push_back(log_mittag_leffler(p.gamma(), arg).log_value / t);
    }
    return out;
}

}  // namespace tempsub
