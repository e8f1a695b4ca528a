#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tempsub/extreal.hpp"
#include "tempsub/params.hpp"

namespace tempsub {

/// Cumulant of the time-1 marginal: kappa(y) = log E[exp(y * S(1))].
///
/// Closed forms:
///   delta = 0:  kappa(y) = lambda * sgn(gamma) * (theta^gamma - (theta-y)^gamma)
///   delta > 0:  kappa(y) = -(1/delta) * log(1 - delta * kappa0(y))
/// where kappa0 is the delta=0 cumulant with the same (gamma, lambda, theta).
/// Finite on (-inf, y0); the endpoint itself is attained only when the
/// limit there is finite (gamma in (0,1) with an unconstrained endpoint).
class CumulantFn {
  public:
    explicit CumulantFn(ParamSet params);

    [[nodiscard]] const ParamSet& params() const { return params_; }

    /// Convergence abscissa y0 in [0, theta].
    [[nodiscard]] double abscissa() const { return y0_; }

    /// kappa(y) as an extended real. Arguments within 1e-12 of y0 evaluate
    /// to the exact limit at y0 instead of raw floating arithmetic, which
    /// would overflow for gamma < 0.
    [[nodiscard]] ExtReal operator()(double y) const;

    /// Closed-form first or second derivative; requires y < y0.
    /// Throws DomainExceeded at or beyond the abscissa.
    [[nodiscard]] double deriv(double y, int order) const;

    /// kappa'(0) = lambda * |gamma| * theta^(gamma-1)  (theta > 0).
    [[nodiscard]] double mean() const;
    /// kappa''(0); for delta > 0 this is kappa0''(0) + delta * kappa0'(0)^2.
    [[nodiscard]] double variance() const;

    /// Limit of kappa(y) as y -> y0 (finite only for closed endpoints).
    [[nodiscard]] ExtReal limit_at_abscissa() const { return limit_; }

  private:
    [[nodiscard]] ExtReal eval_interior(double y) const;

    ParamSet params_;
    double y0_;
    ExtReal limit_;
};

/// Closed form for the convergence abscissa of kappa.
[[nodiscard]] double domain_abscissa(const ParamSet& p);

/// kappa'(y0 - eps) for each probe eps; diagnoses the steepness condition
/// kappa'(y) -> infinity as y -> y0.
struct SteepnessReport {
    std::vector<std::pair<double, double>> probes;  // (eps, kappa'(y0 - eps))
    bool strictly_increasing = false;
    double growth_ratio = 0.0;  // last probe / first probe
    bool flagged = false;       // non-monotone or bounded growth
};

/// Probes must be strictly decreasing toward 0.
[[nodiscard]] SteepnessReport steepness_probe(const CumulantFn& c,
                                              const std::vector<double>& eps_sequence);

/// Result of a family-closure operation: `closed` holds the in-family
/// parameters when closure succeeds; `kappa` is always a valid evaluator of
/// the composite cumulant (nested or weighted-sum), usable either way.
struct ClosureResult {
    std::optional<ParamSet> closed;
    std::function<ExtReal(double)> kappa;

    [[nodiscard]] bool is_closed() const { return closed.has_value(); }
};

/// Cumulant of the composition S_1 o ... o S_h. Stays in the family only
/// when every component is (gamma_i, 1, 0, 0) with gamma_i in (0,1); the
/// product-of-gammas parameter set is returned in that case.
[[nodiscard]] ClosureResult compose_closure(const std::vector<ParamSet>& ps);

/// Cumulant of sum_i S_i(c_i t) for weights c_i > 0. Stays in the family
/// only when all terms share one gamma in (0,1) with theta = delta = 0.
[[nodiscard]] ClosureResult mixture_closure(
    const std::vector<std::pair<double, ParamSet>>& terms);

}  // namespace tempsub
