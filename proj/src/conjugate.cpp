#include "tempsub/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tempsub/errors.hpp"

namespace tempsub {

namespace {

constexpr int kMaxExpand = 200;    // geometric steps toward an infinite end
constexpr int kMaxShrink = 500;    // geometric steps toward a finite end
constexpr int kMaxBisect = 200;
constexpr double kConvexityTol = 1e-9;

bool is_pos_inf(double v) { return std::isinf(v) && v > 0; }
bool is_neg_inf(double v) { return std::isinf(v) && v < 0; }

struct Engine {
    const ConvexFn& f;
    double x;
    double tol;
    int evals = 0;

    // Objective q(y) = x*y - f(y); minus_infinity marks f(y) = +infinity,
    // plus_infinity marks positive overflow along a divergent direction.
    ExtReal q(double y) {
        ++evals;
        const ExtReal v = f.value(y);
        if (v.is_infinite()) return ExtReal::minus_infinity();
        const double r = x * y - v.value();
        if (!std::isfinite(r)) return r > 0 ? ExtReal::infinity() : ExtReal::minus_infinity();
        return ExtReal::finite(r);
    }

    // True when the argmax lies strictly left of y (f'(y) >= x, or f infinite).
    bool beyond(double y) {
        ++evals;
        const ExtReal v = f.value(y);
        if (v.is_infinite()) return true;
        return f.deriv(y) >= x;
    }
};

double pick_interior(const ConvexFn& f) {
    if (is_neg_inf(f.lo) && is_pos_inf(f.hi)) return 0.0;
    if (is_neg_inf(f.lo)) return f.hi - std::max(1.0, std::fabs(f.hi));
    if (is_pos_inf(f.hi)) return f.lo + std::max(1.0, std::fabs(f.lo));
    return 0.5 * (f.lo + f.hi);
}

ConjugateResult make_result(ExtReal value, double argmax, int evals, double residual) {
    ConjugateResult r;
    r.value = value;
    r.argmax = argmax;
    r.iterations = evals;
    r.residual = residual;
    return r;
}

// Supremum approached toward dir * infinity: walk geometrically; declare a
// finite essential supremum once increments fall below tolerance, +infinity
// once the expansion cap is passed with the objective still climbing.
ConjugateResult tail_limit(Engine& eng, int dir, double start) {
    double step = std::max(1.0, std::fabs(start));
    double y = start;
    ExtReal prev = eng.q(y);
    for (int k = 0; k < kMaxExpand; ++k) {
        const double yn = y + dir * step;
        step *= 2.0;
        const ExtReal now = eng.q(yn);
        if (now.is_plus_infinity()) {
            return make_result(ExtReal::infinity(), std::numeric_limits<double>::quiet_NaN(),
                               eng.evals, std::numeric_limits<double>::quiet_NaN());
        }
        if (now.is_infinite()) break;  // ran off the finiteness region
        if (prev.is_finite()) {
            const double dq = now.value() - prev.value();
            if (std::fabs(dq) <= eng.tol * std::max(1.0, std::fabs(now.value()))) {
                return make_result(now, yn, eng.evals,
                                   std::numeric_limits<double>::quiet_NaN());
            }
        }
        prev = now;
        y = yn;
    }
    return make_result(ExtReal::infinity(), std::numeric_limits<double>::quiet_NaN(), eng.evals,
                       std::numeric_limits<double>::quiet_NaN());
}

// Supremum attained at (or approached toward) a finite end.
ConjugateResult endpoint_result(Engine& eng, double end, bool closed, double inner) {
    if (closed) {
        const ExtReal qe = eng.q(end);
        if (qe.is_finite()) {
            return make_result(qe, end, eng.evals, std::numeric_limits<double>::quiet_NaN());
        }
    }
    double y = inner;
    ExtReal best = eng.q(y);
    for (int k = 0; k < 70; ++k) {
        const double yn = end - (end - y) * 0.25;
        if (yn == y) break;
        const ExtReal qn = eng.q(yn);
        if (qn.is_infinite()) break;
        if (best.is_finite() &&
            std::fabs(qn.value() - best.value()) <=
                eng.tol * std::max(1.0, std::fabs(qn.value()))) {
            return make_result(qn, yn, eng.evals, std::numeric_limits<double>::quiet_NaN());
        }
        best = qn;
        y = yn;
    }
    return make_result(best, y, eng.evals, std::numeric_limits<double>::quiet_NaN());
}

void check_convexity_deriv(const ConvexFn& f, double a, double b) {
    if (!(b > a)) return;
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 6; ++i) {
        const double y = a + (b - a) * (static_cast<double>(i) / 6.0);
        if (f.value(y).is_infinite()) continue;
        const double d = f.deriv(y);
        if (d + kConvexityTol * (1.0 + std::fabs(d)) < prev) {
            throw NonConvexDetected("derivative decreased on sampled grid");
        }
        prev = std::max(prev, d);
    }
}

void check_convexity_values(const ConvexFn& f, double a, double b) {
    if (!(b > a)) return;
    constexpr int n = 8;
    double ys[n + 1];
    double vs[n + 1];
    for (int i = 0; i <= n; ++i) {
        ys[i] = a + (b - a) * (static_cast<double>(i) / n);
        const ExtReal v = f.value(ys[i]);
        vs[i] = v.is_infinite() ? std::numeric_limits<double>::quiet_NaN() : v.value();
    }
    for (int i = 1; i < n; ++i) {
        if (std::isnan(vs[i - 1]) || std::isnan(vs[i]) || std::isnan(vs[i + 1])) continue;
        const double chord = 0.5 * (vs[i - 1] + vs[i + 1]);
        const double scale = 1.0 + std::fabs(vs[i - 1]) + std::fabs(vs[i + 1]);
        if (vs[i] > chord + kConvexityTol * scale) {
            throw NonConvexDetected("midpoint above chord on sampled grid");
        }
    }
}

// Sampling window around the reference point for the upfront convexity probe.
std::pair<double, double> probe_window(const ConvexFn& f, double y_ref) {
    const double w = 4.0 * std::max(1.0, std::fabs(y_ref));
    const double a = is_neg_inf(f.lo) ? y_ref - w : f.lo + 0.02 * (y_ref - f.lo);
    const double b = is_pos_inf(f.hi) ? y_ref + w : f.hi - 0.02 * (f.hi - y_ref);
    return {a, b};
}

ConjugateResult conjugate_with_deriv(Engine& eng) {
    const ConvexFn& f = eng.f;
    double y_ref = pick_interior(f);
    for (int k = 0; k < 64 && f.value(y_ref).is_infinite(); ++k) {
        y_ref = is_neg_inf(f.lo) ? y_ref - std::max(1.0, std::fabs(y_ref))
                                 : 0.5 * (y_ref + f.lo);
    }
    if (f.value(y_ref).is_infinite()) {
        throw std::invalid_argument("no finite interior point found for conjugation");
    }
    {
        const auto [wa, wb] = probe_window(f, y_ref);
        check_convexity_deriv(f, wa, wb);
    }

    double y_in = 0.0, y_out = 0.0;
    bool have_in = false, have_out = false;

    if (eng.beyond(y_ref)) {
        y_out = y_ref;
        have_out = true;
        if (is_neg_inf(f.lo)) {
            double step = std::max(1.0, std::fabs(y_ref));
            double y = y_ref;
            for (int k = 0; k < kMaxExpand && !have_in; ++k) {
                const double yn = y - step;
                step *= 2.0;
                if (!eng.beyond(yn)) {
                    y_in = yn;
                    have_in = true;
                } else {
                    y_out = yn;
                }
                y = yn;
            }
            if (!have_in) return tail_limit(eng, -1, y_out);
        } else {
            const double width = y_ref - f.lo;
            for (int k = 1; k <= kMaxShrink && !have_in; ++k) {
                const double yn = f.lo + std::ldexp(width, -k);
                if (!(yn > f.lo && yn < y_out)) break;
                if (!eng.beyond(yn)) {
                    y_in = yn;
                    have_in = true;
                } else {
                    y_out = yn;
                }
            }
            if (!have_in) return endpoint_result(eng, f.lo, f.lo_closed, y_out);
        }
    } else {
        y_in = y_ref;
        have_in = true;
        if (is_pos_inf(f.hi)) {
            double step = std::max(1.0, std::fabs(y_ref));
            double y = y_ref;
            for (int k = 0; k < kMaxExpand && !have_out; ++k) {
                const double yn = y + step;
                step *= 2.0;
                if (eng.beyond(yn)) {
                    y_out = yn;
                    have_out = true;
                } else {
                    y_in = yn;
                }
                y = yn;
            }
            if (!have_out) return tail_limit(eng, +1, y_in);
        } else {
            const double width = f.hi - y_ref;
            for (int k = 1; k <= kMaxShrink && !have_out; ++k) {
                const double yn = f.hi - std::ldexp(width, -k);
                if (!(yn > y_in && yn < f.hi)) break;
                if (eng.beyond(yn)) {
                    y_out = yn;
                    have_out = true;
                } else {
                    y_in = yn;
                }
            }
            if (!have_out) return endpoint_result(eng, f.hi, f.hi_closed, y_in);
        }
    }

    check_convexity_deriv(f, y_in, y_out);

    int it = 0;
    while (it < kMaxBisect) {
        if ((y_out - y_in) <= 1e-16 * std::max(1.0, std::fabs(y_in) + std::fabs(y_out))) break;
        const double mid = 0.5 * (y_in + y_out);
        if (!(mid > y_in && mid < y_out)) break;
        if (eng.beyond(mid)) {
            y_out = mid;
        } else {
            y_in = mid;
        }
        ++it;
    }

    const ExtReal q_in = eng.q(y_in);
    const ExtReal q_out = eng.q(y_out);
    double y_star = y_in;
    ExtReal val = q_in;
    if (q_out.is_finite() && (!val.is_finite() || q_out.value() > val.value())) {
        val = q_out;
        y_star = y_out;
    }
    double residual = std::numeric_limits<double>::quiet_NaN();
    try {
        residual = std::fabs(eng.x - f.deriv(y_star));
    } catch (const std::exception&) {
        // boundary argmax; gradient residual undefined there
    }
    return make_result(val, y_star, eng.evals, residual);
}

ConjugateResult conjugate_golden(Engine& eng) {
    const ConvexFn& f = eng.f;
    double y_ref = pick_interior(f);
    for (int k = 0; k < 64 && f.value(y_ref).is_infinite(); ++k) {
        y_ref = is_neg_inf(f.lo) ? y_ref - std::max(1.0, std::fabs(y_ref))
                                 : 0.5 * (y_ref + f.lo);
    }
    if (f.value(y_ref).is_infinite()) {
        throw std::invalid_argument("no finite interior point found for conjugation");
    }
    {
        const auto [wa, wb] = probe_window(f, y_ref);
        check_convexity_values(f, wa, wb);
    }

    // One geometric step toward `end`, respecting finite domain ends.
    auto advance = [&](double y, int dir, double h) {
        const double end = dir > 0 ? f.hi : f.lo;
        const double cand = y + dir * h;
        if (std::isinf(end)) return cand;
        if ((dir > 0 && cand < end) || (dir < 0 && cand > end)) return cand;
        return 0.5 * (y + end);
    };

    const double scale = std::max(1.0, std::fabs(y_ref));
    double q_ref = eng.q(y_ref).value();

    // Choose the uphill direction.
    int dir = +1;
    double h = 0.125 * scale;
    double y1 = advance(y_ref, +1, h);
    ExtReal q1e = eng.q(y1);
    double y_a, y_b, y_m, q_m;
    if (q1e.is_finite() && q1e.value() > q_ref) {
        dir = +1;
        y_a = y_ref;
        y_m = y1;
        q_m = q1e.value();
    } else {
        const double y2 = advance(y_ref, -1, h);
        const ExtReal q2e = eng.q(y2);
        if (q2e.is_finite() && q2e.value() > q_ref) {
            dir = -1;
            y_a = y_ref;
            y_m = y2;
            q_m = q2e.value();
        } else {
            // already bracketed around y_ref
            y_a = y2;
            y_m = y_ref;
            y_b = y1;
            q_m = q_ref;
            goto golden;
        }
    }

    {
        // Expand uphill until the objective drops or the domain end decides.
        double y_prev = y_a;
        int k = 0;
        for (; k < kMaxExpand + kMaxShrink; ++k) {
            h *= 2.0;
            const double yn = advance(y_m, dir, h);
            if (yn == y_m) break;
            const ExtReal qn = eng.q(yn);
            if (!qn.is_finite() || qn.value() <= q_m) {
                y_a = std::min(y_prev, yn);
                y_b = std::max(y_prev, yn);
                goto golden;
            }
            const double dq = qn.value() - q_m;
            y_prev = y_m;
            y_m = yn;
            q_m = qn.value();
            if (std::fabs(yn) > 1e17 * scale) {
                if (dq <= eng.tol * std::max(1.0, std::fabs(q_m))) {
                    return make_result(ExtReal::finite(q_m), y_m, eng.evals,
                                       std::numeric_limits<double>::quiet_NaN());
                }
                return make_result(ExtReal::infinity(),
                                   std::numeric_limits<double>::quiet_NaN(), eng.evals,
                                   std::numeric_limits<double>::quiet_NaN());
            }
            const double end = dir > 0 ? f.hi : f.lo;
            if (!std::isinf(end) && std::fabs(end - y_m) <= 1e-15 * std::max(1.0, std::fabs(end))) {
                if (dq <= eng.tol * std::max(1.0, std::fabs(q_m))) break;
            }
        }
        if (y_prev == y_a) {  // never expanded; degenerate, fall back to endpoint
            return endpoint_result(eng, dir > 0 ? f.hi : f.lo, dir > 0 ? f.hi_closed : f.lo_closed,
                                   y_m);
        }
        y_a = std::min(y_prev, y_m);
        y_b = std::max(y_prev, y_m);
    }

golden:
    check_convexity_values(f, y_a, y_b);
    {
        constexpr double kInvPhi = 0.6180339887498949;
        double a = y_a, b = y_b;
        double c = b - kInvPhi * (b - a);
        double d = a + kInvPhi * (b - a);
        double qc = eng.q(c).value_or(-std::numeric_limits<double>::infinity());
        double qd = eng.q(d).value_or(-std::numeric_limits<double>::infinity());
        int it = 0;
        while ((b - a) > 1e-13 * std::max(1.0, std::fabs(a) + std::fabs(b)) && it < 300) {
            if (qc >= qd) {
                b = d;
                d = c;
                qd = qc;
                c = b - kInvPhi * (b - a);
                qc = eng.q(c).value_or(-std::numeric_limits<double>::infinity());
            } else {
                a = c;
                c = d;
                qc = qd;
                d = a + kInvPhi * (b - a);
                qd = eng.q(d).value_or(-std::numeric_limits<double>::infinity());
            }
            ++it;
        }
        const double y_star = qc >= qd ? c : d;
        const ExtReal val = eng.q(y_star);
        return make_result(val, y_star, eng.evals, std::numeric_limits<double>::quiet_NaN());
    }
}

}  // namespace

ConjugateResult legendre_numeric(const ConvexFn& f, double x, double tol) {
    if (!std::isfinite(x)) throw std::invalid_argument("conjugation point must be finite");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    Engine eng{f, x, tol};
    if (f.has_deriv()) return conjugate_with_deriv(eng);
    return conjugate_golden(eng);
}

ConvexFn cumulant_convex(const CumulantFn& c) {
    ConvexFn f;
    f.value = [c](double y) { return c(y); };
    f.deriv = [c](double y) { return c.deriv(y, 1); };
    f.hi = c.abscissa();
    f.hi_closed = c.limit_at_abscissa().is_finite();
    return f;
}

namespace {

void require_delta_zero(const ParamSet& p, const char* who) {
    if (p.delta() != 0.0) {
        throw std::invalid_argument(std::string(who) + " requires delta = 0");
    }
}

double c_gamma(double g) {
    if (g > 0.0) return std::pow(g, g / (1.0 - g)) - std::pow(g, 1.0 / (1.0 - g));
    return std::pow(-g, g / (1.0 - g)) + std::pow(-g, 1.0 / (1.0 - g));
}

}  // namespace

ConvexFn lambda_rate_convex(const ParamSet& p) {
    require_delta_zero(p, "lambda_rate_convex");
    ConvexFn f;
    f.value = [p](double y) { return lambda_inverse_rate(p, y); };
    f.deriv = [p](double y) { return lambda_inverse_rate_deriv(p, y); };
    if (p.gamma() < 0.0) {
        f.hi = p.lambda() * std::pow(p.theta(), p.gamma());
        f.hi_closed = false;
    }
    return f;
}

ConvexFn psi_convex(const ParamSet& p) {
    require_delta_zero(p, "psi_convex");
    ConvexFn f;
    f.value = [p](double x) { return psi(p, x); };
    const double g = p.gamma();
    const double lam = p.lambda();
    const double th = p.theta();
    const double cg = c_gamma(g);
    const double coef = std::pow(lam, 1.0 / (1.0 - g)) * cg / (1.0 - g);
    const double ltg = lam * std::pow(th, g);
    f.deriv = [g, coef, ltg](double x) {
        const double power = coef * std::pow(x, g / (1.0 - g));
        return g > 0.0 ? -ltg + power : ltg - power;
    };
    f.lo = 0.0;
    f.lo_closed = true;
    return f;
}

TildePsiDomain tilde_psi_domain(const ParamSet& p) {
    require_delta_zero(p, "tilde_psi_domain");
    const double edge = p.lambda() * std::pow(p.theta(), p.gamma());
    if (p.gamma() > 0.0) return {-edge, std::numeric_limits<double>::infinity()};
    return {-std::numeric_limits<double>::infinity(), edge};
}

double tilde_psi(const ParamSet& p, double z) {
    const TildePsiDomain dom = tilde_psi_domain(p);
    if (!(z > dom.lo && z < dom.hi)) {
        throw DomainExceeded("tilde_psi argument outside the inversion interval");
    }
    const double base = std::pow(p.theta(), p.gamma()) + p.sign() * z / p.lambda();
    return std::pow(base, 1.0 / p.gamma()) - p.theta();
}

ConvexFn tilde_psi_convex(const ParamSet& p) {
    const TildePsiDomain dom = tilde_psi_domain(p);
    ConvexFn f;
    f.value = [p, dom](double z) {
        if (!(z > dom.lo && z < dom.hi)) return ExtReal::infinity();
        return ExtReal::finite(tilde_psi(p, z));
    };
    f.deriv = [p](double z) { return lambda_inverse_rate_deriv(p, z); };
    f.lo = dom.lo;
    f.hi = dom.hi;
    return f;
}

ExtReal kappa_star_closed(const ParamSet& p, double x) {
    require_delta_zero(p, "kappa_star_closed");
    if (x < 0.0) throw DomainExceeded("kappa_star_closed requires x >= 0");
    if (x == 0.0) return ExtReal::infinity();
    const double g = p.gamma();
    const double s = p.sign();
    const double lam = p.lambda();
    const double th = p.theta();
    const double a = x / (lam * s * g);  // = x / (lambda |gamma|) > 0
    const double t1 = x * (th - std::pow(a, 1.0 / (g - 1.0)));
    const double t2 = -lam * s * (std::pow(th, g) - std::pow(a, g / (g - 1.0)));
    double v = t1 + t2;
    if (v < 0.0 && v > -1e-10 * (1.0 + th * x + lam)) v = 0.0;
    return ExtReal::finite(v);
}

ExtReal kappa_star_at_zero(const ParamSet& p) {
    if (p.gamma() > 0.0) return ExtReal::infinity();
    const double tg = std::pow(p.theta(), p.gamma());
    if (p.delta() == 0.0) return ExtReal::finite(p.lambda() * tg);
    return ExtReal::finite(std::log1p(p.lambda() * p.delta() * tg) / p.delta());
}

ExtReal psi(const ParamSet& p, double x) {
    require_delta_zero(p, "psi");
    if (x < 0.0) return ExtReal::infinity();
    const double g = p.gamma();
    const double lam = p.lambda();
    const double th = p.theta();
    if (x == 0.0) return ExtReal::finite(th);
    const double power = std::pow(lam, 1.0 / (1.0 - g)) * c_gamma(g) * std::pow(x, 1.0 / (1.0 - g));
    const double linear = lam * std::pow(th, g) * x;
    double v = g > 0.0 ? th - linear + power : th + linear - power;
    if (v < 0.0 && v > -1e-10 * (1.0 + th + linear + power)) v = 0.0;
    return ExtReal::finite(v);
}

ExtReal psi_conjugate_form(const ParamSet& p, double x) {
    require_delta_zero(p, "psi_conjugate_form");
    if (x < 0.0) return ExtReal::infinity();
    const double g = p.gamma();
    const double s = p.sign();
    const double lam = p.lambda();
    const double th = p.theta();
    if (x == 0.0) return ExtReal::finite(th);
    const double b = lam * s * g * x;  // = lambda |gamma| x > 0
    double v = th - std::pow(b, 1.0 / (1.0 - g)) +
               lam * s * x * (std::pow(b, g / (1.0 - g)) - std::pow(th, g));
    if (v < 0.0 && v > -1e-10 * (1.0 + th + lam * x)) v = 0.0;
    return ExtReal::finite(v);
}

ExtReal psi_right_derivative_at_zero(const ParamSet& p) {
    require_delta_zero(p, "psi_right_derivative_at_zero");
    if (!(p.theta() > 0.0)) {
        throw std::invalid_argument("psi_right_derivative_at_zero requires theta > 0");
    }
    if (p.gamma() > 0.0) {
        return ExtReal::finite(-p.lambda() * std::pow(p.theta(), p.gamma()));
    }
    return ExtReal::minus_infinity();
}

ExtReal lambda_inverse_rate(const ParamSet& p, double y) {
    require_delta_zero(p, "lambda_inverse_rate");
    const double g = p.gamma();
    const double lam = p.lambda();
    const double th = p.theta();
    const double tg = std::pow(th, g);
    if (g > 0.0) {
        if (y < -lam * tg) return ExtReal::finite(-th);
        return ExtReal::finite(std::pow(tg + y / lam, 1.0 / g) - th);
    }
    if (y < lam * tg) return ExtReal::finite(std::pow(tg - y / lam, 1.0 / g) - th);
    return ExtReal::infinity();
}

double lambda_inverse_rate_deriv(const ParamSet& p, double y) {
    const double g = p.gamma();
    const double lam = p.lambda();
    const double tg = std::pow(p.theta(), g);
    if (g > 0.0) {
        if (y <= -lam * tg) return 0.0;
        return std::pow(tg + y / lam, 1.0 / g - 1.0) / (lam * g);
    }
    return std::pow(tg - y / lam, 1.0 / g - 1.0) / (lam * (-g));
}

DualityReport duality_check(const ParamSet& p, const std::vector<double>& x_grid,
                            const std::vector<double>& y_grid, double tol) {
    DualityReport rep;
    rep.tol = tol;
    const ConvexFn lam_fn = lambda_rate_convex(p);
    const ConvexFn psi_fn = psi_convex(p);
    for (double x : x_grid) {
        const ExtReal direct = psi(p, x);
        const ExtReal numeric = legendre_numeric(lam_fn, x, 1e-12).value;
        if (direct.is_infinite() && numeric.is_infinite()) continue;
        const double err = std::fabs(direct.as_double() - numeric.as_double());
        rep.max_err_psi = std::max(rep.max_err_psi, err);
    }
    for (double y : y_grid) {
        const ExtReal direct = lambda_inverse_rate(p, y);
        const ExtReal numeric = legendre_numeric(psi_fn, y, 1e-12).value;
        if (direct.is_infinite() && numeric.is_infinite()) continue;
        const double err = std::fabs(direct.as_double() - numeric.as_double());
        rep.max_err_lambda = std::max(rep.max_err_lambda, err);
    }
    rep.pass = rep.max_err_psi <= tol && rep.max_err_lambda <= tol;
    return rep;
}

RateFn rate_kappa_star(const ParamSet& p) {
    require_delta_zero(p, "rate_kappa_star");
    RateFn r;
    r.kind = RateKind::KappaStar;
    r.label = "kappa_star";
    r.eval = [p](double x) -> ExtReal {
        if (x < 0.0) return ExtReal::infinity();
        if (x == 0.0) return kappa_star_at_zero(p);
        return kappa_star_closed(p, x);
    };
    r.domain_lo = 0.0;
    r.domain_hi = std::numeric_limits<double>::infinity();
    r.zero_at = p.lambda() * p.sign() * p.gamma() * std::pow(p.theta(), p.gamma() - 1.0);
    return r;
}

RateFn rate_psi(const ParamSet& p) {
    require_delta_zero(p, "rate_psi");
    RateFn r;
    r.kind = RateKind::Psi;
    r.label = "psi";
    r.eval = [p](double x) { return psi(p, x); };
    r.domain_lo = 0.0;
    r.domain_hi = std::numeric_limits<double>::infinity();
    if (p.theta() > 0.0) {
        r.zero_at = 1.0 / (p.lambda() * p.sign() * p.gamma() * std::pow(p.theta(), p.gamma() - 1.0));
    } else {
        r.zero_at = 0.0;
    }
    return r;
}

RateFn rate_lambda_inverse(const ParamSet& p) {
    require_delta_zero(p, "rate_lambda_inverse");
    RateFn r;
    r.kind = RateKind::LambdaInv;
    r.label = "lambda";
    r.eval = [p](double y) { return lambda_inverse_rate(p, y); };
    r.domain_lo = -std::numeric_limits<double>::infinity();
    r.domain_hi = p.gamma() > 0.0 ? std::numeric_limits<double>::infinity()
                                  : p.lambda() * std::pow(p.theta(), p.gamma());
    r.zero_at = 0.0;
    return r;
}

RateFn rate_numeric(ConvexFn base, std::string label, double zero_at, double tol) {
    RateFn r;
    r.kind = RateKind::Numeric;
    r.label = std::move(label);
    r.eval = [base = std::move(base), tol](double x) { return legendre_numeric(base, x, tol).value; };
    r.domain_lo = -std::numeric_limits<double>::infinity();
    r.domain_hi = std::numeric_limits<double>::infinity();
    r.zero_at = zero_at;
    return r;
}

}  // namespace tempsub
