#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "tempsub/errors.hpp"
#include "tempsub/mlf.hpp"

using namespace tempsub;

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

// High-precision series oracle, 200+ terms in 50-digit arithmetic.
double oracle_log_mlf(double gamma, double x, int terms = 200) {
    big sum = 0;
    for (int k = 0; k < terms; ++k) {
        sum += boost::multiprecision::pow(big(x), k) / boost::math::tgamma(big(gamma) * k + 1);
    }
    return static_cast<double>(boost::multiprecision::log(sum));
}

// gamma = 1/2 identity: E(x) = exp(x^2) erfc(-x), valid on both axes.
double half_identity_log(double x) {
    if (x >= 0.0) return x * x + std::log(2.0 - std::erfc(x));
    return x * x + std::log(std::erfc(-x));
}

}  // namespace

TEST_CASE("exponential special case and the zero argument") {
    CHECK(log_mittag_leffler(1.0, 3.0).log_value == 3.0);
    CHECK(log_mittag_leffler(1.0, -7.5).log_value == -7.5);
    CHECK(log_mittag_leffler(0.5, 0.0).log_value == 0.0);
    CHECK(log_mittag_leffler(0.5, 0.0).branch == MlfBranch::Series);
    CHECK_THROWS_AS((void)log_mittag_leffler(1.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)log_mittag_leffler(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("series branch against the high-precision oracle") {
    // frozen from the 50-digit series oracle (also recomputed here)
    const double frozen_half_2 = 4.690805573646587656763243827932614520;
    const MlfEval ev = log_mittag_leffler(0.5, 2.0);
    CHECK(ev.branch == MlfBranch::Series);
    CHECK(ev.log_value == doctest::Approx(frozen_half_2).epsilon(1e-13));
    CHECK(ev.log_value == doctest::Approx(oracle_log_mlf(0.5, 2.0)).epsilon(1e-13));
    CHECK(ev.log_value == doctest::Approx(half_identity_log(2.0)).epsilon(1e-13));

    CHECK(log_mittag_leffler(0.25, 1.5).log_value ==
          doctest::Approx(6.447487287540688562126913069957532).epsilon(1e-13));
    CHECK(log_mittag_leffler(0.75, 3.0).log_value ==
          doctest::Approx(4.613751280608592219837754953953422).epsilon(1e-13));
}

TEST_CASE("negative branch: series and tail expansion against the erfc identity") {
    // frozen from log(exp(a^2) erfc(a)) at 50 digits
    struct Point {
        double a;
        double logv;
        double tol;
    };
    // |x| <= 18.4^0.5 = 4.29 uses the alternating series; beyond, the tail
    const Point pts[] = {{0.5, -0.485011129837084403025879322554019892, 1e-12},
                         {2.0, -1.364941264616637574467648503648559151, 1e-11},
                         {5.0, -2.200889545537434422442036007490854566, 1e-7},
                         {12.0, -3.060714177987009485849237513520812571, 1e-10},
                         {25.0, -3.792039174071685368696059462718331175, 1e-12}};
    for (const auto& pt : pts) {
        const MlfEval ev = log_mittag_leffler(0.5, -pt.a);
        CHECK(ev.branch == MlfBranch::Negative);
        CHECK(ev.log_value == doctest::Approx(pt.logv).epsilon(pt.tol));
    }
    // generic order, series region
    CHECK(log_mittag_leffler(0.9, -3.0).log_value ==
          doctest::Approx(-2.478268482846002089602933379884067).epsilon(1e-11));
}

TEST_CASE("series/asymptotic overlap at the switch point") {
    for (double gamma : {0.25, 0.5, 0.75}) {
        const double xs = mlf_series_switch(gamma);
        // series just below, asymptotic just above: both near x^{1/gamma} + log(1/gamma)
        const MlfEval lo = log_mittag_leffler(gamma, std::nextafter(xs, 0.0));
        const MlfEval hi = log_mittag_leffler(gamma, std::nextafter(xs, 2.0 * xs));
        CHECK(lo.branch == MlfBranch::Series);
        CHECK(hi.branch == MlfBranch::Asymptotic);
        CHECK(std::fabs(lo.log_value - hi.log_value) <=
              1e-8 * std::max(1.0, std::fabs(hi.log_value)));
    }
    // frozen check at gamma = 1/2, x = 30: log E = 900 + log 2
    const double v = log_mittag_leffler(0.5, 30.0).log_value;
    CHECK(v == doctest::Approx(900.0 + std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("monotonicity in the argument") {
    for (double gamma : {0.3, 0.5, 0.8}) {
        double prev = -std::numeric_limits<double>::infinity();
        for (double x = -30.0; x <= 50.0; x += 1.3) {
            const double v = log_mittag_leffler(gamma, x).log_value;
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("limit curve reaches the displayed limits") {
    const ParamSet p = ParamSet::validate(0.5, 1.0, 0.0, 0.0);
    const std::vector<double> grid = {1.0, 10.0, 100.0, 1e3, 1e4};

    const auto up = inverse_mgf_limit_curve(p, 1.0, grid);
    CHECK(std::fabs(up.back() - 1.0) <= 1e-2);  // limit (y/lambda)^{1/gamma} = 1
    for (std::size_t i = 1; i < up.size(); ++i) CHECK(up[i] < up[i - 1]);  // decreasing to 1

    const auto down = inverse_mgf_limit_curve(p, -1.0, grid);
    for (double v : down) CHECK(v <= 0.0);
    CHECK(std::fabs(down.back()) < 1e-3);  // tends to 0 from below

    const ParamSet p4 = ParamSet::validate(0.5, 4.0, 0.0, 0.0);
    const auto scaled = inverse_mgf_limit_curve(p4, 1.0, grid);
    CHECK(std::fabs(scaled.back() - 0.0625) <= 2e-2);  // (y/lambda)^2 = 1/16

    // lambda-scaling: curve(lambda, y) = curve(1, y/lambda) pointwise
    const auto rescaled = inverse_mgf_limit_curve(p, 1.0 / 4.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(scaled[i] == doctest::Approx(rescaled[i]).epsilon(1e-15));
    }

    CHECK_THROWS_AS((void)inverse_mgf_limit_curve(ParamSet::validate(0.5, 1, 1, 0), 1.0, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)inverse_mgf_limit_curve(p, 1.0, std::vector<double>{3.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("branch bookkeeping") {
    CHECK(log_mittag_leffler(0.5, 10.0).branch == MlfBranch::Series);
    CHECK(log_mittag_leffler(0.5, 100.0).branch == MlfBranch::Asymptotic);
    CHECK(log_mittag_leffler(0.5, -1.0).branch == MlfBranch::Negative);
    CHECK(mlf_series_switch(0.5) == doctest::Approx(30.0));
}
