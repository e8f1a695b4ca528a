#pragma once

#include <functional>
#include <limits>

#include "tempsub/extreal.hpp"

namespace tempsub {

/// A convex function together with its effective domain and an optional
/// (sub)derivative. `value` must be callable everywhere and return
/// +infinity outside the domain; `deriv` is only queried strictly inside
/// the region where `value` is finite.
struct ConvexFn {
    std::function<ExtReal(double)> value;
    std::function<double(double)> deriv;  // empty when unavailable

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_closed = false;
    bool hi_closed = false;

    [[nodiscard]] bool has_deriv() const { return static_cast<bool>(deriv); }
};

/// Convex quadratic a*y^2/2 + b*y, handy as a self-conjugacy fixture.
[[nodiscard]] ConvexFn quadratic_convex(double a, double b);

}  // namespace tempsub
