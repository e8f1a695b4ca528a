#pragma once

#include "tempsub/convex.hpp"
#include "tempsub/extreal.hpp"
#include "tempsub/levy.hpp"
#include "tempsub/params.hpp"

namespace tempsub {

enum class ThetaRegime { ThetaZero, ThetaPositive };

/// Rate function H of X(T(t))/t for an independent light-tailed Levy X:
/// the conjugate of eta -> Lambda(Lambda_X(eta)), where Lambda is the
/// limiting cumulant of the inverse process.
///
/// Only gamma in (0,1) with delta = 0 is admitted; for theta > 0 the
/// construction needs kappa*(0) = +infinity, which fails for gamma < 0.
class HRateFn {
  public:
    HRateFn(ParamSet params, LevyExponent levy);

    [[nodiscard]] const ParamSet& params() const { return params_; }
    [[nodiscard]] const LevyExponent& levy() const { return levy_; }
    [[nodiscard]] ThetaRegime regime() const { return regime_; }

    /// eta -> Lambda(Lambda_X(eta)) as a convex evaluator.
    [[nodiscard]] ConvexFn conjugand() const;

  private:
    ParamSet params_;
    LevyExponent levy_;
    ThetaRegime regime_;
};

/// H(x) by numeric conjugation of the composed exponent.
[[nodiscard]] ExtReal h_rate(const HRateFn& h, double x, double tol = 1e-10);

/// Unique zero of H: 0 in the ThetaZero regime (trapping), otherwise
/// (theta^(1-gamma) / (lambda gamma)) * Lambda_X'(0) (rushing).
[[nodiscard]] double h_zero(const HRateFn& h);

/// One-sided derivatives of H at 0, from the negative roots of
/// Lambda_X(eta) = c with c = 0 (ThetaZero) or c = -lambda theta^gamma
/// (ThetaPositive):
///  - two roots eta_1 < eta_2 < 0: (eta_1, eta_2);
///  - unique root eta_0 (Lambda_X strictly increasing): (-infinity, eta_0),
///    meaning H = +infinity on x < 0;
///  - no root (the dip stays above c): degenerate pair at the argmin.
/// In the ThetaZero regime the right derivative is always 0.
struct OneSidedDerivs {
    ExtReal d_minus;
    double d_plus;
};
[[nodiscard]] OneSidedDerivs h_one_sided_derivs_at_zero(const HRateFn& h);

}  // namespace tempsub
