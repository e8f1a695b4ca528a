#pragma once

#include <string>

#include "tempsub/errors.hpp"

namespace tempsub {

/// Sampling/evaluation regime implied by the parameter signs.
enum class Regime {
    GammaCompoundPoisson,  // gamma < 0, delta = 0
    TemperedStable,        // gamma in (0,1), delta = 0
    GammaMixed,            // delta > 0 (either gamma branch)
};

[[nodiscard]] const char* to_string(Regime r);

/// Validated parameter quadruple (gamma, lambda, theta, delta).
///
/// Admissible set: either gamma < 0 with lambda > 0, theta > 0, delta >= 0,
/// or gamma in (0,1) with lambda > 0, theta >= 0, delta >= 0. Values of gamma
/// within 1e-12 of {0,1} are rejected: the exponents 1/(1-gamma) and
/// gamma/(gamma-1) used downstream are singular there.
class ParamSet {
  public:
    /// Validates and returns a ParamSet; throws NonFiniteParameter or
    /// OutOfParameterSpace (message names the violated constraint).
    static ParamSet validate(double gamma, double lambda, double theta, double delta);

    [[nodiscard]] double gamma() const { return gamma_; }
    [[nodiscard]] double lambda() const { return lambda_; }
    [[nodiscard]] double theta() const { return theta_; }
    [[nodiscard]] double delta() const { return delta_; }
    [[nodiscard]] Regime regime() const { return regime_; }

    /// sgn(gamma): -1.0 or +1.0.
    [[nodiscard]] double sign() const { return gamma_ < 0 ? -1.0 : 1.0; }

    /// Copy with a different tempering rate (used by exponential tilting).
    [[nodiscard]] ParamSet with_theta(double theta) const {
        return validate(gamma_, lambda_, theta, delta_);
    }
    /// Copy with a different intensity.
    [[nodiscard]] ParamSet with_lambda(double lambda) const {
        return validate(gamma_, lambda, theta_, delta_);
    }

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const ParamSet& a, const ParamSet& b) {
        return a.gamma_ == b.gamma_ && a.lambda_ == b.lambda_ && a.theta_ == b.theta_ &&
               a.delta_ == b.delta_;
    }

  private:
    ParamSet(double g, double l, double t, double d, Regime r)
        : gamma_(g), lambda_(l), theta_(t), delta_(d), regime_(r) {}

    double gamma_;
    double lambda_;
    double theta_;
    double delta_;
    Regime regime_;
};

}  // namespace tempsub
