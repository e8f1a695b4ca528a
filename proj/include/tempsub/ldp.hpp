#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tempsub/extreal.hpp"
#include "tempsub/params.hpp"
#include "tempsub/rng.hpp"

namespace tempsub {

enum class ScalingMode { Identical, Scaled, Moderate };
enum class ThetaLimit { ToInfinity, ToZero };

/// Scaling transform applied to subordinator increments.
///
/// All three modes reduce to the same theta-free cumulant through the
/// invariance identity, so Identical produces theta-independent laws,
/// Scaled produces an LDP at speed theta^(gamma-h) = theta^(1-g), and
/// Moderate produces the same rate function at speed 1/a_theta. The factory
/// enforces gamma - h = 1 - g with the sign matching the declared limit,
/// and the Moderate conditions a_theta -> 0, theta^(1-g) a_theta -> inf.
class ScalingSpec {
  public:
    static ScalingSpec identical(double gamma);
    static ScalingSpec scaled(double gamma, double g, ThetaLimit limit);
    /// a_theta given as a handle; admissibility is probed on a geometric
    /// theta ladder toward the declared limit.
    static ScalingSpec moderate(double gamma, double g, std::function<double(double)> a_theta,
                                ThetaLimit limit);
    /// a_theta = theta^p with the admissibility window checked exactly:
    /// -(1-g) < p < 0 toward infinity, 0 < p < -(1-g) toward zero.
    static ScalingSpec moderate_power(double gamma, double g, double p, ThetaLimit limit);

    [[nodiscard]] ScalingMode mode() const { return mode_; }
    [[nodiscard]] ThetaLimit limit() const { return limit_; }
    [[nodiscard]] double gamma() const { return gamma_; }
    [[nodiscard]] double g() const { return g_; }
    [[nodiscard]] double h() const { return h_; }
    [[nodiscard]] double a_theta(double theta) const;

    /// LDP speed at the given theta (Scaled and Moderate modes only).
    [[nodiscard]] double speed(double theta) const;

    /// Multiplier applied to increments, and the divisor turning the time
    /// grid into sampling spans, at the given theta.
    [[nodiscard]] double increment_multiplier(double theta) const;
    [[nodiscard]] double span_divisor(double theta) const;

  private:
    ScalingSpec() = default;

    ScalingMode mode_ = ScalingMode::Identical;
    ThetaLimit limit_ = ThetaLimit::ToInfinity;
    double gamma_ = 0.0;
    double g_ = 0.0;
    double h_ = 0.0;
    std::function<double(double)> a_;
};

/// Rate of an increment vector: sum_i (t_i - t_{i-1}) kappa*_{(gamma,lambda,1,0)}(x_i / (t_i - t_{i-1})).
[[nodiscard]] ExtReal rate_I(double gamma, double lambda, const std::vector<double>& times,
                             const std::vector<double>& xs);

/// Rate of the marginal vector: rate_I of successive differences (z_0 = 0).
[[nodiscard]] ExtReal rate_J(double gamma, double lambda, const std::vector<double>& times,
                             const std::vector<double>& zs);

/// Max abs residual of
///   sum_i (dt_i / theta^gamma) kappa_(gamma,lambda,theta,0)(theta y_i)
///     - sum_i dt_i kappa_(gamma,lambda,1,0)(y_i)
/// over the theta grid, single-y terms, and a rotating multi-increment
/// assignment of the y grid to the time grid.
[[nodiscard]] double theta_invariance_check(double gamma, double lambda,
                                            const std::vector<double>& theta_grid,
                                            const std::vector<double>& y_grid,
                                            const std::vector<double>& times);

/// One draw of the m scaled increments at the given theta.
[[nodiscard]] std::vector<double> scaled_sample(const ScalingSpec& spec, const ParamSet& p,
                                                double theta, const std::vector<double>& times,
                                                RngStream& rng);

/// Empirical rate value at a level set.
struct LdpEstimate {
    double level = 0.0;      // corner coordinate (first coordinate for vectors)
    double speed = 0.0;      // v
    ExtReal emp_rate;        // -(1/v) log(hits/n); +infinity when hits = 0
    double ci_halfwidth = 0.0;  // 95% on the emp_rate scale (log-scale delta method)
    std::int64_t n = 0;
    std::int64_t hits = 0;
};

/// Hit frequency of the corner event {v : v_j >= corner_j for all j}.
[[nodiscard]] LdpEstimate empirical_rate(const std::vector<std::vector<double>>& draws,
                                         const std::vector<double>& corner, double speed);

/// Tilt parameter: the root of kappa'(y) = x below the abscissa.
/// Throws TiltRootNotFound when no such root exists.
[[nodiscard]] double tilt_root(const ParamSet& p, double x);

/// Importance-sampled tail estimate of P(S(t)/t >= x) with the exponential
/// tilt kappa'(y_x) = x; the weight is exp(-y_x S + t kappa(y_x)), so the
/// estimator is unbiased and plain Monte Carlo is the y_x = 0 special case.
struct TailEstimate {
    LdpEstimate estimate;
    double p_hat = 0.0;
    double p_se = 0.0;
    double tilt_y = 0.0;
    double kappa_star = 0.0;  // closed-form target for comparison
};

[[nodiscard]] TailEstimate tilted_tail_estimator(const ParamSet& p, double t, double x,
                                                 std::int64_t n, std::uint64_t seed,
                                                 std::uint64_t stream_base = 0, int threads = 0,
                                                 bool plain_mc = false);

}  // namespace tempsub
