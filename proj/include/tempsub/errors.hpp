#pragma once

#include <stdexcept>
#include <string>

namespace tempsub {

/// Parameter quadruple lies outside the admissible set.
struct OutOfParameterSpace : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameter is NaN or infinite.
struct NonFiniteParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Evaluation requested outside a function's effective domain.
struct DomainExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

/// Sampled second differences of a supposedly convex function are negative.
struct NonConvexDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cancellation exceeded the accuracy budget (strongly negative series argument).
struct PrecisionLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Acceptance-rejection loop exceeded its attempt budget.
struct RejectionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// First-passage search ran past the configured safety horizon.
struct HorizonExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No tilt parameter y with kappa'(y) = x below the convergence abscissa.
struct TiltRootNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root bracketing failed for a Levy exponent level equation.
struct RootBracketFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CLI configuration failed validation.
struct ConfigInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A module error surfaced through the CLI, wrapped with context.
struct UpstreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tempsub
