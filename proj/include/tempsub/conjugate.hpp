#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tempsub/convex.hpp"
#include "tempsub/cumulant.hpp"
#include "tempsub/extreal.hpp"
#include "tempsub/params.hpp"

namespace tempsub {

/// Outcome of a numeric Legendre-Fenchel conjugation at one point.
struct ConjugateResult {
    ExtReal value;
    double argmax = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
    double residual = std::numeric_limits<double>::quiet_NaN();  // |x - f'(argmax)| when interior
};

/// f*(x) = sup_y { x*y - f(y) } by bracketed concave maximization:
/// monotone-predicate bisection on f' when a derivative is supplied,
/// golden-section otherwise. Divergent suprema are reported as +infinity
/// once bracket growth passes the expansion cap with the objective still
/// increasing. Throws NonConvexDetected if sampled second differences are
/// negative beyond tolerance.
[[nodiscard]] ConjugateResult legendre_numeric(const ConvexFn& f, double x, double tol = 1e-10);

/// Convex-evaluator views of the family's analytic functions.
[[nodiscard]] ConvexFn cumulant_convex(const CumulantFn& c);
[[nodiscard]] ConvexFn lambda_rate_convex(const ParamSet& p);      // delta = 0
[[nodiscard]] ConvexFn psi_convex(const ParamSet& p);              // delta = 0
[[nodiscard]] ConvexFn tilde_psi_convex(const ParamSet& p);        // delta = 0

/// Closed-form conjugate of kappa for delta = 0, x > 0:
///   kappa*(x) = x(theta - A^{1/(gamma-1)}) - lambda sgn(gamma)(theta^gamma - A^{gamma/(gamma-1)}),
/// with A = x / (lambda sgn(gamma) gamma). Reports +infinity at x = 0; the
/// effective-domain boundary value there is kappa_star_at_zero. Throws
/// DomainExceeded for x < 0.
[[nodiscard]] ExtReal kappa_star_closed(const ParamSet& p, double x);

/// kappa*(0) = -lim_{y->-inf} kappa(y): +infinity for gamma in (0,1);
/// (1/delta) log(1 + lambda delta theta^gamma) for gamma < 0, delta > 0;
/// lambda theta^gamma for gamma < 0, delta = 0.
[[nodiscard]] ExtReal kappa_star_at_zero(const ParamSet& p);

/// Rate function of T(t)/t for delta = 0:
///   Psi(x) = x kappa*(1/x) for x > 0, Psi(0) = theta, +infinity for x < 0.
/// Evaluated through the power form with
///   c_gamma = gamma^{gamma/(1-gamma)} - gamma^{1/(1-gamma)}          (gamma in (0,1))
///   c_gamma = (-gamma)^{gamma/(1-gamma)} + (-gamma)^{1/(1-gamma)}   (gamma < 0).
[[nodiscard]] ExtReal psi(const ParamSet& p, double x);

/// Same function through the two-term conjugate-substitution route; kept as
/// an independent algebraic path for cross-checking against psi().
[[nodiscard]] ExtReal psi_conjugate_form(const ParamSet& p, double x);

/// Right derivative of Psi at 0: -lambda theta^gamma for gamma in (0,1),
/// -infinity for gamma < 0. Requires theta > 0, delta = 0.
[[nodiscard]] ExtReal psi_right_derivative_at_zero(const ParamSet& p);

/// Limiting cumulant of the inverse process (delta = 0):
///   gamma in (0,1): -theta for y < -lambda theta^gamma, else (theta^gamma + y/lambda)^{1/gamma} - theta
///   gamma < 0:      (theta^gamma - y/lambda)^{1/gamma} - theta for y < lambda theta^gamma, else +infinity.
[[nodiscard]] ExtReal lambda_inverse_rate(const ParamSet& p, double y);

/// Derivative of the above on the interior of its finite increasing branch.
[[nodiscard]] double lambda_inverse_rate_deriv(const ParamSet& p, double y);

/// Interval where the inverse function of kappa is defined:
/// (-lambda theta^gamma, +inf) for gamma in (0,1), (-inf, lambda theta^gamma) for gamma < 0.
struct TildePsiDomain {
    double lo;
    double hi;
};
[[nodiscard]] TildePsiDomain tilde_psi_domain(const ParamSet& p);

/// tilde_Psi(z) = -kappa^{-1}(-z) via closed-form inversion of kappa
/// (delta = 0). Throws DomainExceeded outside the open interval above.
[[nodiscard]] double tilde_psi(const ParamSet& p, double z);

/// Cross-check of the Legendre pair (Psi, Lambda): max over the grids of
/// |Psi - Lambda*| and |Lambda - Psi*|.
struct DualityReport {
    double max_err_psi = 0.0;     // sup_x |psi(x) - (Lambda)*(x)|
    double max_err_lambda = 0.0;  // sup_y |Lambda(y) - (Psi)*(y)|
    double tol = 0.0;
    bool pass = false;
};
[[nodiscard]] DualityReport duality_check(const ParamSet& p, const std::vector<double>& x_grid,
                                          const std::vector<double>& y_grid, double tol);

/// Convex rate function with its effective domain and unique zero.
enum class RateKind { KappaStar, Psi, LambdaInv, Numeric };

struct RateFn {
    RateKind kind;
    std::string label;
    std::function<ExtReal(double)> eval;
    double domain_lo;
    double domain_hi;
    double zero_at;

    [[nodiscard]] ExtReal operator()(double x) const { return eval(x); }
};

/// True conjugate of kappa as a rate function (finite Claim-style value at 0
/// for gamma < 0). delta = 0.
[[nodiscard]] RateFn rate_kappa_star(const ParamSet& p);
[[nodiscard]] RateFn rate_psi(const ParamSet& p);
[[nodiscard]] RateFn rate_lambda_inverse(const ParamSet& p);
/// Numeric conjugate of an arbitrary convex evaluator (the only route for
/// delta > 0 conjugates).
[[nodiscard]] RateFn rate_numeric(ConvexFn base, std::string label, double zero_at,
                                  double tol = 1e-10);

}  // namespace tempsub
