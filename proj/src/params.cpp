#include "tempsub/params.hpp"

#include <cmath>
#include <sstream>

namespace tempsub {

namespace {
constexpr double kGammaExclusionBand = 1e-12;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::GammaCompoundPoisson: return "GammaCompoundPoisson";
        case Regime::TemperedStable: return "TemperedStable";
        case Regime::GammaMixed: return "GammaMixed";
    }
    return "?";
}

ParamSet ParamSet::validate(double gamma, double lambda, double theta, double delta) {
    for (auto [name, v] : {std::pair{"gamma", gamma},
                           {"lambda", lambda},
                           {"theta", theta},
                           {"delta", delta}}) {
        if (!std::isfinite(v)) {
            throw NonFiniteParameter(std::string(name) + " must be a finite real, got " +
                                     std::to_string(v));
        }
    }
    if (std::fabs(gamma) <= kGammaExclusionBand) {
        throw OutOfParameterSpace("gamma = 0 is a degenerate (deterministic) case and is rejected");
    }
    if (std::fabs(gamma - 1.0) <= kGammaExclusionBand) {
        throw OutOfParameterSpace("gamma = 1 is a degenerate (deterministic) case and is rejected");
    }
    if (gamma > 1.0) {
        throw OutOfParameterSpace("gamma must lie in (-inf,0) or (0,1), got gamma > 1");
    }
    if (!(lambda > 0.0)) {
        throw OutOfParameterSpace("lambda must be > 0");
    }
    if (!(delta >= 0.0)) {
        throw OutOfParameterSpace("delta must be >= 0");
    }
    if (gamma < 0.0) {
        if (!(theta > 0.0)) {
            throw OutOfParameterSpace("theta must be > 0 when gamma < 0");
        }
    } else {
        if (!(theta >= 0.0)) {
            throw OutOfParameterSpace("theta must be >= 0 when gamma in (0,1)");
        }
    }

    Regime regime;
    if (delta > 0.0) {
        regime = Regime::GammaMixed;
    } else if (gamma < 0.0) {
        regime = Regime::GammaCompoundPoisson;
    } else {
        regime = Regime::TemperedStable;
    }
    return ParamSet(gamma, lambda, theta, delta, regime);
}

std::string ParamSet::describe() const {
    std::ostringstream os;
    os << "(gamma=" << gamma_ << ", lambda=" << lambda_ << ", theta=" << theta_
       << ", delta=" << delta_ << ", regime=" << to_string(regime_) << ")";
    return os.str();
}

}  // namespace tempsub
