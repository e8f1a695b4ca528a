#include "tempsub/timechange.hpp"

#include <cmath>
#include <stdexcept>

#include "tempsub/conjugate.hpp"
#include "tempsub/errors.hpp"

namespace tempsub {

HRateFn::HRateFn(ParamSet params, LevyExponent levy)
    : params_(params), levy_(std::move(levy)) {
    if (params_.delta() != 0.0) {
        throw std::invalid_argument("time-change rate functions require delta = 0");
    }
    if (!(params_.gamma() > 0.0)) {
        throw std::invalid_argument(
            "time-change rate functions require gamma in (0,1): theta > 0 needs "
            "kappa*(0) = infinity, which fails for gamma < 0");
    }
    if (!levy_.value) throw std::invalid_argument("Levy exponent has no evaluator");
    regime_ = params_.theta() == 0.0 ? ThetaRegime::ThetaZero : ThetaRegime::ThetaPositive;
}

ConvexFn HRateFn::conjugand() const {
    const ParamSet p = params_;
    const LevyExponent le = levy_;
    ConvexFn f;
    f.lo = le.lo;
    f.hi = le.hi;
    f.value = [p, le](double eta) -> ExtReal {
        if (eta < le.lo || eta > le.hi) return ExtReal::infinity();
        return lambda_inverse_rate(p, le.value(eta));
    };
    if (le.has_deriv()) {
        f.deriv = [p, le](double eta) {
            return lambda_inverse_rate_deriv(p, le.value(eta)) * le.deriv(eta);
        };
    }
    return f;
}

ExtReal h_rate(const HRateFn& h, double x, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    return legendre_numeric(h.conjugand(), x, tol).value;
}

double h_zero(const HRateFn& h) {
    if (h.regime() == ThetaRegime::ThetaZero) return 0.0;
    const ParamSet& p = h.params();
    return std::pow(p.theta(), 1.0 - p.gamma()) / (p.lambda() * p.gamma()) *
           h.levy().deriv_at_zero;
}

namespace {

// Bisection for Lambda_X(eta) = c on [lo, hi] given value signs at the ends.
double bisect_level(const LevyExponent& le, double c, double lo, double hi, bool rising) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const bool above = le.value(mid) > c;
        if (rising ? above : !above) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

OneSidedDerivs h_one_sided_derivs_at_zero(const HRateFn& h) {
    const LevyExponent& le = h.levy();
    if (!(le.deriv_at_zero > 0.0)) {
        throw std::invalid_argument("one-sided derivative taxonomy assumes Lambda_X'(0) > 0");
    }
    const ParamSet& p = h.params();
    const double c = h.regime() == ThetaRegime::ThetaZero
                         ? 0.0
                         : -p.lambda() * std::pow(p.theta(), p.gamma());

    // Walk left from 0 looking for an interior minimum of Lambda_X.
    const bool lo_finite = std::isfinite(le.lo);
    auto probe_at = [&](int k) {
        if (lo_finite) return le.lo * (1.0 - std::ldexp(1.0, -k));
        return -1e-4 * std::ldexp(1.0, k);
    };
    double prev_eta = 0.0;
    double prev_val = 0.0;  // Lambda_X(0) = 0
    double min_bracket_lo = 0.0, min_bracket_hi = 0.0;
    bool have_min_bracket = false;
    double last_eta = 0.0;
    for (int k = 0; k <= 120; ++k) {
        const double eta = probe_at(k);
        if (!(eta < prev_eta)) break;  // resolution exhausted toward a finite end
        const double v = le.value(eta);
        if (v >= prev_val) {  // stopped decreasing: minimum inside [eta, last_eta]
            min_bracket_lo = eta;
            min_bracket_hi = last_eta;
            have_min_bracket = true;
            break;
        }
        last_eta = prev_eta;
        prev_eta = eta;
        prev_val = v;
    }

    if (!have_min_bracket) {
        // Lambda_X decreases all the way: the strictly increasing case.
        if (h.regime() == ThetaRegime::ThetaZero) {
            return {ExtReal::minus_infinity(), 0.0};
        }
        if (!(prev_val < c)) {
            throw RootBracketFailed(
                "Lambda_X never reaches the level -lambda theta^gamma on the probed range");
        }
        const double eta0 = bisect_level(le, c, prev_eta, 0.0, true);
        return {ExtReal::minus_infinity(), eta0};
    }

    // Locate the minimum by golden-section inside the bracket.
    double a = min_bracket_lo, b = min_bracket_hi;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
    double f1 = le.value(x1), f2 = le.value(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::fabs(a)); ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = le.value(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = le.value(x2);
        }
    }
    const double eta_m = 0.5 * (a + b);
    const double v_m = le.value(eta_m);

    if (!(v_m < c)) {
        // The dip never reaches the level: H is differentiable at 0.
        return {ExtReal::finite(eta_m), eta_m};
    }

    // Right root in [eta_m, 0]: Lambda_X rises from v_m < c to 0 >= c.
    const double eta_right = bisect_level(le, c, eta_m, 0.0, true);
    const double d_plus = h.regime() == ThetaRegime::ThetaZero ? 0.0 : eta_right;
    // Left root: extend left of eta_m until Lambda_X >= c.
    double left = eta_m;
    {
        double step = std::max(1e-3, std::fabs(eta_m));
        int k = 0;
        while (le.value(left) < c) {
            double cand = left - step;
            if (lo_finite) cand = std::max(cand, le.lo * (1.0 - 1e-15));
            if (cand == left) {
                return {ExtReal::minus_infinity(), d_plus};
            }
            left = cand;
            step *= 2.0;
            if (++k > 200) {
                return {ExtReal::minus_infinity(), d_plus};
            }
        }
    }
    const double eta_left = bisect_level(le, c, left, eta_m, false);
    if (h.regime() == ThetaRegime::ThetaZero) {
        return {ExtReal::finite(eta_left), 0.0};
    }
    return {ExtReal::finite(eta_left), eta_right};
}

}  // namespace tempsub
