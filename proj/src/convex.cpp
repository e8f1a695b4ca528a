#include "tempsub/convex.hpp"

namespace tempsub {

ConvexFn quadratic_convex(double a, double b) {
    ConvexFn f;
    f.value = [a, b](double y) { return ExtReal::finite(0.5 * a * y * y + b * y); };
    f.deriv = [a, b](double y) { return a * y + b; };
    return f;
}

}  // namespace tempsub
