#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tempsub/levy.hpp"
#include "tempsub/params.hpp"
#include "tempsub/rng.hpp"

namespace tempsub {

/// One exact draw with cumulant dt * kappa(.).
///
/// Dispatch by regime:
///  - gamma < 0, delta = 0: Poisson(dt lambda theta^gamma) count of
///    Gamma(-gamma, rate theta) jumps (summed as one Gamma draw);
///  - gamma in (0,1), theta = 0: scaled one-sided stable;
///  - gamma in (0,1), theta > 0: exponential-tilting rejection on the theta=0
///    draw, with dt split so each piece accepts with probability >= 1/e;
///  - delta > 0: Gamma(dt/delta, lambda delta) mixing of the delta = 0 draw.
[[nodiscard]] double sample_increment(const ParamSet& p, double dt, RngStream& rng);

/// Nondecreasing grid trajectory; exact jump times and sizes are recorded
/// instead of grid increments in the compound Poisson regime.
struct PathSample {
    std::vector<double> times;
    std::vector<double> values;
    std::optional<std::vector<std::pair<double, double>>> exact_jumps;
};

[[nodiscard]] PathSample simulate_path(const ParamSet& p, double horizon, double step,
                                       RngStream& rng);

/// First passage of the level t: exact (bias 0) in the compound Poisson
/// regime, grid-bracketed with bias_bound = step otherwise.
struct PassageResult {
    double t;
    double t_hat;
    double bias_bound;
};

struct PassageOptions {
    /// Safety horizon as a multiple of the first-order passage scale
    /// t/kappa'(0) (or t^gamma/(lambda Gamma(1+gamma)) when theta = 0).
    double horizon_factor = 100.0;
};

[[nodiscard]] PassageResult inverse_passage(const ParamSet& p, double t, double step,
                                            RngStream& rng, const PassageOptions& opt = {});

/// X(T(t)) for an independent Levy process X: T through inverse_passage with
/// rng_t, then one X increment of length T_hat with rng_x. Independence is
/// the caller's responsibility via disjoint stream ids.
[[nodiscard]] double sample_time_changed(const LevyProcess& levy, const ParamSet& p, double t,
                                         double step, RngStream& rng_t, RngStream& rng_x,
                                         const PassageOptions& opt = {});

}  // namespace tempsub
