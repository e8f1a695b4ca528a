#include <doctest.h>

#include <cmath>
#include <limits>

#include "tempsub/params.hpp"

using namespace tempsub;

TEST_CASE("admissible quadruples validate with the right regime") {
    const ParamSet a = ParamSet::validate(-1.0, 1.0, 1.0, 0.0);
    CHECK(a.regime() == Regime::GammaCompoundPoisson);
    CHECK(a.sign() == -1.0);

    const ParamSet b = ParamSet::validate(0.5, 1.0, 0.0, 0.0);
    CHECK(b.regime() == Regime::TemperedStable);

    // delta > 0 wins over the gamma sign
    CHECK(ParamSet::validate(0.5, 1.0, 1.0, 1.0).regime() == Regime::GammaMixed);
    CHECK(ParamSet::validate(-2.0, 3.0, 0.5, 0.25).regime() == Regime::GammaMixed);
}

TEST_CASE("degenerate and out-of-space quadruples are rejected") {
    CHECK_THROWS_AS((void)ParamSet::validate(0.0, 1.0, 1.0, 0.0), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(1.0, 1.0, 0.0, 0.0), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(-1.0, 1.0, 0.0, 0.0), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(0.5, 0.0, 1.0, 0.0), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(0.5, 1.0, -1.0, 0.0), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(0.5, 1.0, 1.0, -0.5), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(1.5, 1.0, 1.0, 0.0), OutOfParameterSpace);
    // near-degenerate exponents
    CHECK_THROWS_AS((void)ParamSet::validate(5e-13, 1.0, 1.0, 0.0), OutOfParameterSpace);
    CHECK_THROWS_AS((void)ParamSet::validate(1.0 - 5e-13, 1.0, 1.0, 0.0), OutOfParameterSpace);
}

TEST_CASE("non-finite inputs get their own error") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS((void)ParamSet::validate(nan, 1.0, 1.0, 0.0), NonFiniteParameter);
    CHECK_THROWS_AS((void)ParamSet::validate(0.5, inf, 1.0, 0.0), NonFiniteParameter);
    CHECK_THROWS_AS((void)ParamSet::validate(0.5, 1.0, -inf, 0.0), NonFiniteParameter);
    CHECK_THROWS_AS((void)ParamSet::validate(0.5, 1.0, 1.0, nan), NonFiniteParameter);
}

TEST_CASE("validate decides exactly by the sign-pattern predicate") {
    // exhaustive sign-pattern enumeration over representative magnitudes
    const double gammas[] = {-2.0, -0.5, 0.25, 0.75};
    const double lambdas[] = {0.5, 2.0};
    const double thetas[] = {0.0, 1.0};
    const double deltas[] = {0.0, 0.5};
    for (double g : gammas) {
        for (double l : lambdas) {
            for (double t : thetas) {
                for (double d : deltas) {
                    const bool in_p1 = g < 0 && l > 0 && t > 0 && d >= 0;
                    const bool in_p2 = g > 0 && g < 1 && l > 0 && t >= 0 && d >= 0;
                    if (in_p1 || in_p2) {
                        CHECK_NOTHROW((void)ParamSet::validate(g, l, t, d));
                    } else {
                        CHECK_THROWS_AS((void)ParamSet::validate(g, l, t, d),
                                        OutOfParameterSpace);
                    }
                }
            }
        }
    }
}
