#pragma once

#include <vector>

#include "tempsub/params.hpp"

namespace tempsub {

enum class MlfBranch { Series, Asymptotic, Negative };

[[nodiscard]] const char* to_string(MlfBranch b);

/// log E_gamma(x) with the evaluation branch recorded for reproducibility.
struct MlfEval {
    double gamma;
    double x;
    double log_value;
    MlfBranch branch;
};

/// Series/asymptotic crossover on the positive axis: the power series runs
/// roughly x^{1/gamma}/gamma terms, so the switch sits where x^{1/gamma} = 900;
/// past it exp(-x^{1/gamma}) underflows and the two-term asymptotic form
/// log E = x^{1/gamma} + log(1/gamma) is exact to double precision.
[[nodiscard]] double mlf_series_switch(double gamma);

/// Negative-axis crossover |x|^{1/gamma} = 18.4: balances the alternating
/// series' cancellation (eps * e^{|x|^{1/gamma}}) against the optimally
/// truncated tail expansion (~e^{-|x|^{1/gamma}}), both ~1e-8 at the switch.
[[nodiscard]] double mlf_negative_switch(double gamma);

/// log of E_gamma(x) = sum_k x^k / Gamma(gamma k + 1), gamma in (0, 1].
/// Positive axis: compensated log-sum-exp series, then the asymptotic form.
/// Negative axis: compensated alternating series for moderate |x|, optimally
/// truncated tail expansion beyond; throws PrecisionLoss if neither route
/// meets its accuracy budget.
[[nodiscard]] MlfEval log_mittag_leffler(double gamma, double x);

/// (1/t) log E_gamma((y/lambda) t^gamma) along t_grid; converges to
/// (y/lambda)^{1/gamma} for y >= 0 and to 0 for y < 0. Requires a parameter
/// set with gamma in (0,1), theta = 0, delta = 0 and a positive increasing grid.
[[nodiscard]] std::vector<double> inverse_mgf_limit_curve(const ParamSet& p, double y,
                                                          const std::vector<double>& t_grid);

}  // namespace tempsub
