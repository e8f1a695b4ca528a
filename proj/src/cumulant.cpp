#include "tempsub/cumulant.hpp"

#include <cmath>
#include <stdexcept>

#include "tempsub/errors.hpp"

namespace tempsub {

namespace {

constexpr double kBoundaryBand = 1e-12;

// delta = 0 cumulant, interior arguments only.
double kappa0(const ParamSet& p, double y) {
    const double s = p.sign();
    return p.lambda() * s * (std::pow(p.theta(), p.gamma()) - std::pow(p.theta() - y, p.gamma()));
}

double kappa0_deriv1(const ParamSet& p, double y) {
    return p.lambda() * p.sign() * p.gamma() * std::pow(p.theta() - y, p.gamma() - 1.0);
}

double kappa0_deriv2(const ParamSet& p, double y) {
    return p.lambda() * p.sign() * p.gamma() * (1.0 - p.gamma()) *
           std::pow(p.theta() - y, p.gamma() - 2.0);
}

}  // namespace

double domain_abscissa(const ParamSet& p) {
    if (p.delta() == 0.0) return p.theta();
    const double cap = 1.0 / (p.lambda() * p.delta());
    const double tg = std::pow(p.theta(), p.gamma());
    if (p.gamma() > 0.0) {
        if (tg <= cap) return p.theta();
        return p.theta() - std::pow(tg - cap, 1.0 / p.gamma());
    }
    return p.theta() - std::pow(tg + cap, 1.0 / p.gamma());
}

CumulantFn::CumulantFn(ParamSet params) : params_(params), y0_(domain_abscissa(params)) {
    if (params_.delta() == 0.0) {
        limit_ = params_.gamma() > 0.0
                     ? ExtReal::finite(params_.lambda() * std::pow(params_.theta(), params_.gamma()))
                     : ExtReal::infinity();
    } else {
        // Finite endpoint only when the mixing constraint never binds strictly.
        const double v = params_.lambda() * params_.delta() * std::pow(params_.theta(), params_.gamma());
        if (params_.gamma() > 0.0 && y0_ == params_.theta() && v < 1.0) {
            limit_ = ExtReal::finite(-std::log1p(-v) / params_.delta());
        } else {
            limit_ = ExtReal::infinity();
        }
    }
}

ExtReal CumulantFn::eval_interior(double y) const {
    const double k0 = kappa0(params_, y);
    if (params_.delta() == 0.0) return ExtReal::finite(k0);
    const double u = params_.delta() * k0;
    if (u >= 1.0) return ExtReal::infinity();
    return ExtReal::finite(-std::log1p(-u) / params_.delta());
}

ExtReal CumulantFn::operator()(double y) const {
    if (!std::isfinite(y)) throw NonFiniteParameter("kappa argument must be finite");
    const double band = kBoundaryBand * std::max(1.0, std::fabs(y0_));
    if (y > y0_) return ExtReal::infinity();
    if (y0_ - y <= band) return limit_;
    return eval_interior(y);
}

double CumulantFn::deriv(double y, int order) const {
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
    if (!(y < y0_)) {
        throw DomainExceeded("kappa derivative requested at or beyond the convergence abscissa");
    }
    const double d1 = kappa0_deriv1(params_, y);
    const double d2 = kappa0_deriv2(params_, y);
    if (params_.delta() == 0.0) return order == 1 ? d1 : d2;
    const double denom = 1.0 - params_.delta() * kappa0(params_, y);
    if (order == 1) return d1 / denom;
    return (d2 * denom + params_.delta() * d1 * d1) / (denom * denom);
}

double CumulantFn::mean() const { return deriv(0.0, 1); }

double CumulantFn::variance() const { return deriv(0.0, 2); }

SteepnessReport steepness_probe(const CumulantFn& c, const std::vector<double>& eps_sequence) {
    if (eps_sequence.empty()) throw std::invalid_argument("empty probe sequence");
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
        if (!(eps_sequence[i] > 0.0) ||
            (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1]))) {
            throw std::invalid_argument("probes must be strictly decreasing toward 0");
        }
    }
    SteepnessReport rep;
    rep.strictly_increasing = true;
    double prev = -1.0;
    for (double eps : eps_sequence) {
        const double kp = c.deriv(c.abscissa() - eps, 1);
        if (!rep.probes.empty() && kp <= prev) rep.strictly_increasing = false;
        rep.probes.emplace_back(eps, kp);
        prev = kp;
    }
    rep.growth_ratio = rep.probes.back().second / rep.probes.front().second;
    rep.flagged = !rep.strictly_increasing || rep.growth_ratio < 10.0;
    return rep;
}

ClosureResult compose_closure(const std::vector<ParamSet>& ps) {
    if (ps.empty()) throw std::invalid_argument("composition of an empty list");

    std::vector<CumulantFn> chain;
    chain.reserve(ps.size());
    for (const auto& p : ps) chain.emplace_back(p);

    ClosureResult res;
    res.kappa = [chain](double y) {
        ExtReal v = ExtReal::finite(y);
        for (const auto& k : chain) {
            if (v.is_infinite()) return ExtReal::infinity();
            v = k(v.value());
        }
        return v;
    };

    bool closed = true;
    double gamma_prod = 1.0;
    for (const auto& p : ps) {
        if (!(p.gamma() > 0.0 && p.lambda() == 1.0 && p.theta() == 0.0 && p.delta() == 0.0)) {
            closed = false;
            break;
        }
        gamma_prod *= p.gamma();
    }
    if (closed) res.closed = ParamSet::validate(gamma_prod, 1.0, 0.0, 0.0);
    return res;
}

ClosureResult mixture_closure(const std::vector<std::pair<double, ParamSet>>& terms) {
    if (terms.empty()) throw std::invalid_argument("mixture of an empty list");
    for (const auto& [c, p] : terms) {
        if (!(c > 0.0)) throw std::invalid_argument("mixture weights must be > 0");
    }

    std::vector<std::pair<double, CumulantFn>> parts;
    parts.reserve(terms.size());
    for (const auto& [c, p] : terms) parts.emplace_back(c, CumulantFn(p));

    ClosureResult res;
    res.kappa = [parts](double y) {
        double sum = 0.0;
        for (const auto& [c, k] : parts) {
            const ExtReal v = k(y);
            if (v.is_infinite()) return ExtReal::infinity();
            sum += c * v.value();
        }
        return ExtReal::finite(sum);
    };

    const double gamma0 = terms.front().second.gamma();
    bool closed = gamma0 > 0.0;
    double lambda_sum = 0.0;
    for (const auto& [c, p] : terms) {
        if (!(p.gamma() == gamma0 && p.theta() == 0.0 && p.delta() == 0.0)) {
            closed = false;
            break;
        }
        lambda_sum += c * p.lambda();
    }
    if (closed) res.closed = ParamSet::validate(gamma0, lambda_sum, 0.0, 0.0);
    return res;
}

}  // namespace tempsub
