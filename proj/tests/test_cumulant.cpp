#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tempsub/cumulant.hpp"
#include "tempsub/errors.hpp"
#include "tempsub/rng.hpp"

using namespace tempsub;

namespace {

const std::vector<ParamSet> kGrid = {
    ParamSet::validate(0.5, 1.0, 1.0, 0.0),  ParamSet::validate(0.25, 2.0, 4.0, 0.0),
    ParamSet::validate(0.75, 1.0, 0.5, 0.0), ParamSet::validate(-1.0, 1.0, 1.0, 0.0),
    ParamSet::validate(-0.5, 2.0, 4.0, 0.0), ParamSet::validate(-2.0, 1.0, 0.5, 0.0),
    ParamSet::validate(0.5, 1.0, 1.0, 1.0),  ParamSet::validate(-1.0, 1.0, 1.0, 0.5),
    ParamSet::validate(0.5, 1.0, 0.0, 0.0)};

}  // namespace

TEST_CASE("kappa matches hand-substituted closed-form values") {
    CHECK(CumulantFn(ParamSet::validate(0.5, 1, 1, 0))(0.75).value() == doctest::Approx(0.5).epsilon(1e-14));
    // gamma = -1 simplifies to lambda y / (theta (theta - y))
    CHECK(CumulantFn(ParamSet::validate(-1, 1, 1, 0))(0.5).value() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(CumulantFn(ParamSet::validate(0.5, 1, 1, 1))(0.75).value() ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("kappa(0) = 0 exactly and +inf beyond the abscissa") {
    for (const auto& p : kGrid) {
        const CumulantFn c(p);
        CHECK(c(0.0).value() == 0.0);
        CHECK(c(c.abscissa() + 0.1).is_plus_infinity());
    }
}

TEST_CASE("endpoint behavior splits by branch") {
    // closed endpoint with finite value for gamma in (0,1), delta = 0
    const CumulantFn ts(ParamSet::validate(0.5, 1, 1, 0));
    CHECK(ts(1.0).value() == doctest::Approx(1.0));
    CHECK(ts.limit_at_abscissa().is_finite());
    // open endpoint for gamma < 0
    const CumulantFn cp(ParamSet::validate(-1, 1, 1, 0));
    CHECK(cp(1.0).is_plus_infinity());
    CHECK(cp.limit_at_abscissa().is_plus_infinity());
    // near-boundary band evaluates to the limit
    CHECK(cp(1.0 - 1e-13).is_plus_infinity());
    CHECK(ts(1.0 - 1e-13).value() == doctest::Approx(1.0));
}

TEST_CASE("domain abscissa closed form against a bisection oracle") {
    CHECK(domain_abscissa(ParamSet::validate(0.5, 1, 1, 0)) == 1.0);
    CHECK(domain_abscissa(ParamSet::validate(0.5, 1, 4, 1)) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(domain_abscissa(ParamSet::validate(-1, 1, 1, 1)) == doctest::Approx(0.5).epsilon(1e-14));

    for (const auto& p : {ParamSet::validate(0.5, 1, 4, 1), ParamSet::validate(-1, 1, 1, 1),
                          ParamSet::validate(0.25, 2, 4, 0.5), ParamSet::validate(-0.5, 1, 2, 2)}) {
        const double cap = 1.0 / (p.lambda() * p.delta());
        auto constraint = [&](double y) {
            return p.sign() * (std::pow(p.theta(), p.gamma()) - std::pow(p.theta() - y, p.gamma()));
        };
        if (constraint(p.theta() - 1e-12) < cap && p.gamma() > 0) {
            CHECK(domain_abscissa(p) == p.theta());
        } else {
            const double y0 = oracles::bisect_increasing(constraint, cap, 0.0, p.theta() - 1e-14);
            CHECK(domain_abscissa(p) == doctest::Approx(y0).epsilon(1e-10));
        }
    }
}

TEST_CASE("derivatives at zero match displayed values and finite differences") {
    CHECK(CumulantFn(ParamSet::validate(0.5, 2, 4, 0)).deriv(0.0, 1) ==
          doctest::Approx(0.5).epsilon(1e-14));
    // delta > 0 second derivative: kappa0''(0) + delta kappa0'(0)^2
    CHECK(CumulantFn(ParamSet::validate(0.5, 1, 1, 1)).deriv(0.0, 2) ==
          doctest::Approx(0.5).epsilon(1e-12));

    for (const auto& p : kGrid) {
        if (p.theta() == 0.0) continue;  // kappa'(0) infinite at theta = 0
        const CumulantFn c(p);
        auto f = [&](double y) { return c(y).value(); };
        for (int ord : {1, 2}) {
            // second differences need a larger step before rounding dominates
            const double h = ord == 1 ? 1e-5 : 1e-4;
            const double fd = oracles::finite_difference(f, 0.0, ord, h);
            CHECK(c.deriv(0.0, ord) == doctest::Approx(fd).epsilon(ord == 1 ? 1e-6 : 1e-5));
        }
        // positivity of the displayed mean under the sign convention
        CHECK(c.mean() > 0.0);
    }
}

TEST_CASE("derivative consistency on interior grids") {
    for (const auto& p : kGrid) {
        const CumulantFn c(p);
        const double y0 = c.abscissa();
        auto f = [&](double y) { return c(y).value(); };
        for (int i = 0; i < 12; ++i) {
            const double y = y0 - 1e-3 - (0.4 + 0.23 * i) * std::max(1.0, y0);
            const double d1 = c.deriv(y, 1);
            const double fd = oracles::finite_difference(f, y, 1, 1e-6);
            CHECK(std::fabs(d1 - fd) <= 1e-6 * (1.0 + std::fabs(d1)) + 1e-5 * std::fabs(d1));
        }
    }
}

TEST_CASE("derivative domain errors") {
    const CumulantFn c(ParamSet::validate(0.5, 1, 1, 0));
    CHECK_THROWS_AS((void)c.deriv(1.0, 1), DomainExceeded);
    CHECK_THROWS_AS((void)c.deriv(1.5, 2), DomainExceeded);
}

TEST_CASE("convexity on randomized grids") {
    RngStream rng(31, 7);
    for (const auto& p : kGrid) {
        const CumulantFn c(p);
        const double y0 = c.abscissa();
        for (int i = 0; i < 50; ++i) {
            const double y1 = y0 - 1e-3 - 4.0 * rng.uniform();
            const double y2 = y0 - 1e-3 - 4.0 * rng.uniform();
            const double a = rng.uniform();
            const double lhs = c(a * y1 + (1 - a) * y2).value();
            const double rhs = a * c(y1).value() + (1 - a) * c(y2).value();
            CHECK(lhs <= rhs + 1e-12 * (1.0 + std::fabs(rhs)));
        }
    }
}

TEST_CASE("steepness probes diverge monotonically") {
    const std::vector<double> eps = {1e-2, 1e-4, 1e-6};
    for (const auto& p : {ParamSet::validate(0.5, 1, 1, 0), ParamSet::validate(-1, 1, 1, 0),
                          ParamSet::validate(0.5, 1, 1, 1)}) {
        const auto rep = steepness_probe(CumulantFn(p), eps);
        CHECK(rep.strictly_increasing);
        CHECK_FALSE(rep.flagged);
        CHECK(rep.probes.back().second > 1e2);
    }
    // gamma = -1 diverges like eps^-2
    const auto rep = steepness_probe(CumulantFn(ParamSet::validate(-1, 1, 1, 0)), eps);
    const double ratio = rep.probes[1].second / rep.probes[0].second;
    CHECK(ratio == doctest::Approx(1e4).epsilon(0.01));
    CHECK_THROWS_AS((void)steepness_probe(CumulantFn(ParamSet::validate(0.5, 1, 1, 0)),
                                          std::vector<double>{1e-4, 1e-2}),
                    std::invalid_argument);
}

TEST_CASE("delta-domination and delta -> 0 recovery") {
    for (double gamma : {0.5, -1.0}) {
        const ParamSet base = ParamSet::validate(gamma, 1.0, 1.0, 0.0);
        const CumulantFn c0(base);
        for (double y : {-3.0, -1.0, -0.25, 0.3, 0.6}) {
            double prev_gap = std::numeric_limits<double>::infinity();
            for (double delta : {2.0, 1.0, 0.5, 0.25, 0.125}) {
                const CumulantFn cd(ParamSet::validate(gamma, 1.0, 1.0, delta));
                const ExtReal vd = cd(y);
                if (vd.is_infinite()) continue;
                CHECK(vd.value() >= c0(y).value() - 1e-12);
                const double gap = vd.value() - c0(y).value();
                CHECK(gap <= prev_gap + 1e-12);
                prev_gap = gap;
            }
            CHECK(prev_gap < 0.2);  // delta = 0.125 is already close
        }
    }
}

TEST_CASE("composition closure") {
    const auto a = ParamSet::validate(0.5, 1, 0, 0);
    const auto b = ParamSet::validate(0.4, 1, 0, 0);

    const auto closed = compose_closure({a, b});
    REQUIRE(closed.is_closed());
    CHECK(closed.closed->gamma() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(closed.closed->lambda() == 1.0);
    CHECK(closed.closed->theta() == 0.0);
    CHECK(closed.closed->delta() == 0.0);

    const auto single = compose_closure({a});
    REQUIRE(single.is_closed());
    CHECK(*single.closed == a);

    const auto open = compose_closure({ParamSet::validate(0.5, 1, 1, 0), b});
    CHECK_FALSE(open.is_closed());

    // closed-case evaluator agrees with the product-parameter cumulant
    const CumulantFn direct(*closed.closed);
    for (double y : {-8.0, -2.0, -0.5, -0.01, 0.0}) {
        CHECK(closed.kappa(y).value() == doctest::Approx(direct(y).value()).epsilon(1e-15));
    }
    // generic evaluator equals direct nesting even when not closed
    const CumulantFn inner(ParamSet::validate(0.5, 1, 1, 0));
    const CumulantFn outer(b);
    for (double y : {-5.0, -1.0, 0.2, 0.9}) {
        const ExtReal nested = open.kappa(y);
        const ExtReal manual = inner(y).is_infinite() ? ExtReal::infinity() : outer(inner(y).value());
        CHECK(nested == manual);
    }
    CHECK_THROWS_AS((void)compose_closure({}), std::invalid_argument);
}

TEST_CASE("mixture closure") {
    const auto closed = mixture_closure(
        {{2.0, ParamSet::validate(0.5, 1, 0, 0)}, {3.0, ParamSet::validate(0.5, 2, 0, 0)}});
    REQUIRE(closed.is_closed());
    CHECK(closed.closed->gamma() == 0.5);
    CHECK(closed.closed->lambda() == doctest::Approx(8.0));

    const auto single = mixture_closure({{1.0, ParamSet::validate(0.5, 1, 0, 0)}});
    REQUIRE(single.is_closed());

    const auto open = mixture_closure(
        {{1.0, ParamSet::validate(0.5, 1, 0, 0)}, {1.0, ParamSet::validate(0.4, 1, 0, 0)}});
    CHECK_FALSE(open.is_closed());

    // weighted-sum evaluator equals direct summation
    const CumulantFn k1(ParamSet::validate(0.5, 1, 0, 0));
    const CumulantFn k2(ParamSet::validate(0.4, 1, 0, 0));
    for (double y : {-4.0, -1.0, -0.1, 0.0}) {
        CHECK(open.kappa(y).value() ==
              doctest::Approx(k1(y).value() + k2(y).value()).epsilon(1e-15));
    }
    CHECK(open.kappa(0.5).is_plus_infinity());

    CHECK_THROWS_AS((void)mixture_closure({{0.0, ParamSet::validate(0.5, 1, 0, 0)}}),
                    std::invalid_argument);
}
